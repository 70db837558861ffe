"""Shared helpers for the test modules."""

import random
from fractions import Fraction

from rblie.algebra import AssociativeAlgebra, LieAlgebra, LieRepresentation
from rblie.linalg import Matrix, vec_add, vec_scale, vec_sub


def unit(n, i):
    return tuple(Fraction(int(k == i)) for k in range(n))


def random_matrix(rng: random.Random, rows, cols=None, choices=(0, 0, 1, -1, 2)):
    cols = rows if cols is None else cols
    return Matrix.from_rows([[rng.choice(choices) for _ in range(cols)] for _ in range(rows)])


def random_invertible(rng: random.Random, n):
    while True:
        M = random_matrix(rng, n, choices=(-2, -1, 0, 1, 2))
        if M.is_invertible():
            return M


def change_basis(g: LieAlgebra, P: Matrix) -> LieAlgebra:
    """Bracket transported along ``P``: ``[x, y]' = P^-1 [P x, P y]``."""
    Pinv = P.inverse()
    return LieAlgebra.from_function(g.dim, lambda i, j: Pinv.apply(g.bracket(P.col(i), P.col(j))))


def change_basis_rep(rep: LieRepresentation, P: Matrix) -> LieRepresentation:
    return LieRepresentation(rep.module_dim, tuple(rep.matrix(P.col(i)) for i in range(P.cols)))


def gl(n) -> LieAlgebra:
    """gl(n) on matrix units ``E_ab`` ordered row-major."""
    dim = n * n

    def br(i, j):
        a, b = divmod(i, n)
        c, d = divmod(j, n)
        out = [Fraction(0)] * dim
        if b == c:
            out[a * n + d] += 1
        if d == a:
            out[c * n + b] -= 1
        return tuple(out)

    return LieAlgebra.from_function(dim, br)


def upper_triangular(n) -> AssociativeAlgebra:
    """Upper triangular ``n x n`` matrices on the units ``E_ab``, ``a <= b``."""
    units = [(a, b) for a in range(n) for b in range(a, n)]
    index = {u: k for k, u in enumerate(units)}
    dim = len(units)

    def prod(i, j):
        (a, b), (c, d) = units[i], units[j]
        out = [Fraction(0)] * dim
        if b == c:
            out[index[(a, d)]] = Fraction(1)
        return tuple(out)

    return AssociativeAlgebra.from_function(dim, prod)


def closed_form_TT(p):
    """Both components of the derived square of ``(T, calT)`` evaluated directly.

    Returns ``({(i, j): vector in g}, {(i, a): vector in V})``.
    """
    g, rep, T, calT = p.g, p.rep, p.T, p.calT
    n, m = g.dim, rep.module_dim
    out1, out2 = {}, {}
    for i in range(n):
        for j in range(i + 1, n):
            x, y = unit(n, i), unit(n, j)
            Tx, Ty = T.col(i), T.col(j)
            v = vec_sub(T.apply(vec_add(g.bracket(Tx, y), g.bracket(x, Ty))), g.bracket(Tx, Ty))
            out1[(i, j)] = vec_scale(2, v)
    for i in range(n):
        rTx = rep.matrix(T.col(i))
        for a in range(m):
            u = unit(m, a)
            v = vec_sub(calT.apply(vec_add(rTx.apply(u), rep.rho[i].apply(calT.apply(u)))), rTx.apply(calT.apply(u)))
            out2[(i, a)] = vec_scale(2, v)
    return out1, out2
