"""Weighted Rota-Baxter operators on Lie and associative algebras.

Every identity is checked on pairs of basis elements; bilinearity makes that
complete.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import (
    AssociativeAlgebra,
    Bimodule,
    LieAlgebra,
    LieRepresentation,
    adjoint_rep,
    skew_symmetrize_algebra,
    skew_symmetrize_bimodule,
)
from .certificate import Certificate, ShapeError, StructureError
from .linalg import (
    Matrix,
    SingularMatrixError,
    is_zero_vector,
    to_rational,
    vec_add,
    vec_scale,
    vec_sub,
)

__all__ = [
    "WeightedRBLie",
    "RBLieRepresentation",
    "WeightedRBAssoc",
    "RBBimodule",
    "WeightMismatchError",
    "check_rb_lie",
    "check_rb_rep",
    "dual_operator",
    "dual_representation",
    "scale_operator",
    "scale_representation",
    "conjugate_operator",
    "splitting_operator",
    "is_lie_homomorphism",
    "morphism_check",
    "deformed_bracket",
    "rep_bar",
    "rep_tilde",
    "rep_end",
    "semidirect",
    "adjoint_rb_rep",
    "check_rb_assoc",
    "check_rb_bimodule",
    "assoc_deformed_product",
    "bimodule_tilde",
    "compatibility_skew",
    "skew_symmetrize_rb",
]


class WeightMismatchError(ValueError):
    pass


@dataclass(frozen=True)
class WeightedRBLie:
    g: LieAlgebra
    weight: Fraction
    T: Matrix

    def __post_init__(self):
        object.__setattr__(self, "weight", to_rational(self.weight))
        if self.T.shape != (self.g.dim, self.g.dim):
            raise ShapeError(f"operator of shape {self.T.shape} on a {self.g.dim}-dim algebra")


@dataclass(frozen=True)
class RBLieRepresentation:
    rep: LieRepresentation
    calT: Matrix

    def __post_init__(self):
        n = self.rep.module_dim
        if self.calT.shape != (n, n):
            raise ShapeError(f"module operator of shape {self.calT.shape} on a {n}-dim module")


@dataclass(frozen=True)
class WeightedRBAssoc:
    a: AssociativeAlgebra
    weight: Fraction
    R: Matrix

    def __post_init__(self):
        object.__setattr__(self, "weight", to_rational(self.weight))
        if self.R.shape != (self.a.dim, self.a.dim):
            raise ShapeError("operator shape does not match the algebra")


@dataclass(frozen=True)
class RBBimodule:
    bim: Bimodule
    calR: Matrix

    def __post_init__(self):
        n = self.bim.module_dim
        if self.calR.shape != (n, n):
            raise ShapeError("module operator shape does not match the bimodule")


def _unit(n: int, i: int):
    return tuple(Fraction(int(k == i)) for k in range(n))


def _matrix_of(fn, dim_in: int, dim_out: int) -> Matrix:
    return Matrix.from_columns([fn(_unit(dim_in, j)) for j in range(dim_in)], dim_out)


# ---------------------------------------------------------------------------
# Lie side


def _rb_defect(bracket, T: Matrix, lam: Fraction, x, y):
    Tx, Ty = T.apply(x), T.apply(y)
    lhs = bracket(Tx, Ty)
    inner = vec_add(vec_add(bracket(Tx, y), bracket(x, Ty)), vec_scale(lam, bracket(x, y)))
    return vec_sub(lhs, T.apply(inner))


def check_rb_lie(g: LieAlgebra, weight, T: Matrix) -> Certificate:
    lam = to_rational(weight)
    if T.shape != (g.dim, g.dim):
        raise ShapeError(f"operator of shape {T.shape} on a {g.dim}-dim algebra")
    n = g.dim
    for i in range(n):
        for j in range(i + 1, n):
            d = _rb_defect(g.bracket, T, lam, _unit(n, i), _unit(n, j))
            if not is_zero_vector(d):
                return Certificate.failed("rota-baxter", (i, j), d)
    return Certificate.passed("rota-baxter")


def _rep_defect(rep: LieRepresentation, T: Matrix, calT: Matrix, lam, x, u):
    Tx = T.apply(x)
    lhs = rep.act(Tx, calT.apply(u))
    inner = vec_add(
        vec_add(rep.act(Tx, u), rep.act(x, calT.apply(u))), vec_scale(lam, rep.act(x, u))
    )
    return vec_sub(lhs, calT.apply(inner))


def check_rb_rep(rb: WeightedRBLie, rep: LieRepresentation, calT: Matrix) -> Certificate:
    if len(rep.rho) != rb.g.dim:
        raise ShapeError("representation does not match the algebra")
    if calT.shape != (rep.module_dim, rep.module_dim):
        raise ShapeError("module operator shape does not match the module")
    for i in range(rb.g.dim):
        for a in range(rep.module_dim):
            d = _rep_defect(rep, rb.T, calT, rb.weight, _unit(rb.g.dim, i), _unit(rep.module_dim, a))
            if not is_zero_vector(d):
                return Certificate.failed("rota-baxter representation", (i, a), d)
    return Certificate.passed("rota-baxter representation")


def adjoint_rb_rep(rb: WeightedRBLie) -> RBLieRepresentation:
    return RBLieRepresentation(adjoint_rep(rb.g), rb.T)


def dual_operator(rb: WeightedRBLie) -> WeightedRBLie:
    """``(g, -lam id - T)``."""
    n = rb.g.dim
    return WeightedRBLie(rb.g, rb.weight, Matrix.identity(n).scale(-rb.weight) - rb.T)


def dual_representation(rb: WeightedRBLie, rbrep: RBLieRepresentation) -> RBLieRepresentation:
    n = rbrep.rep.module_dim
    return RBLieRepresentation(rbrep.rep, Matrix.identity(n).scale(-rb.weight) - rbrep.calT)


def scale_operator(rb: WeightedRBLie, mu) -> WeightedRBLie:
    mu = to_rational(mu)
    return WeightedRBLie(rb.g, mu * rb.weight, rb.T.scale(mu))


def scale_representation(rbrep: RBLieRepresentation, mu) -> RBLieRepresentation:
    return RBLieRepresentation(rbrep.rep, rbrep.calT.scale(to_rational(mu)))


def is_lie_homomorphism(g: LieAlgebra, h: LieAlgebra, phi: Matrix) -> Certificate:
    if phi.shape != (h.dim, g.dim):
        raise ShapeError(f"map of shape {phi.shape} from dim {g.dim} to dim {h.dim}")
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            lhs = phi.apply(g.basis_bracket(i, j))
            rhs = h.bracket(phi.col(i), phi.col(j))
            d = vec_sub(lhs, rhs)
            if not is_zero_vector(d):
                return Certificate.failed("lie homomorphism", (i, j), d)
    return Certificate.passed("lie homomorphism")


def conjugate_operator(rb: WeightedRBLie, psi: Matrix) -> WeightedRBLie:
    """``(g, psi^-1 T psi)`` for an automorphism ``psi`` of ``g``."""
    try:
        inv = psi.inverse()
    except SingularMatrixError as exc:
        raise StructureError("psi is not invertible") from exc
    hom = is_lie_homomorphism(rb.g, rb.g, psi)
    if not hom:
        raise StructureError(f"psi is not a Lie algebra automorphism: {hom}")
    return WeightedRBLie(rb.g, rb.weight, inv @ rb.T @ psi)


def _spans_subalgebra(g: LieAlgebra, block: Sequence[int]) -> bool:
    inside = set(block)
    for i in block:
        for j in block:
            if any(c and k not in inside for k, c in enumerate(g.basis_bracket(i, j))):
                return False
    return True


def _stable_under(g: LieAlgebra, acting: Sequence[int], block: Sequence[int]) -> bool:
    inside = set(block)
    for i in acting:
        for j in block:
            if any(c and k not in inside for k, c in enumerate(g.basis_bracket(i, j))):
                return False
    return True


def splitting_operator(g: LieAlgebra, weight, blocks: Sequence[Sequence[int]], T0: Matrix | None = None) -> WeightedRBLie:
    """Operator vanishing on the first block and acting as ``-lam`` on the last.

    ``blocks`` is ``(minus, plus)`` or ``(minus, zero, plus)``; in the
    three-block form the middle block carries ``T0`` (indexed within the
    block) which must be a Rota-Baxter operator of the same weight on it.
    """
    lam = to_rational(weight)
    blocks = [list(b) for b in blocks]
    if len(blocks) not in (2, 3):
        raise ValueError("expected two or three index blocks")
    flat = sorted(i for b in blocks for i in b)
    if flat != list(range(g.dim)):
        raise StructureError("blocks must partition the basis indices")
    for b in blocks:
        if not _spans_subalgebra(g, b):
            raise StructureError(f"block {b} does not span a subalgebra")
    n = g.dim
    entries = [[Fraction(0)] * n for _ in range(n)]
    for i in blocks[-1]:
        entries[i][i] = -lam
    if len(blocks) == 3:
        minus, zero, plus = blocks
        if not (_stable_under(g, zero, minus) and _stable_under(g, zero, plus)):
            raise StructureError("outer blocks are not stable under the middle subalgebra")
        if T0 is None:
            T0 = Matrix.zeros(len(zero))
        if T0.shape != (len(zero), len(zero)):
            raise ShapeError("T0 must act on the middle block")
        sub = LieAlgebra.from_function(
            len(zero), lambda a, b: tuple(g.basis_bracket(zero[a], zero[b])[k] for k in zero)
        )
        cert = check_rb_lie(sub, lam, T0)
        if not cert:
            raise StructureError(f"T0 is not a Rota-Baxter operator: {cert}")
        for a, ia in enumerate(zero):
            for b, ib in enumerate(zero):
                entries[ia][ib] = T0[a, b]
    return WeightedRBLie(g, lam, Matrix.from_rows(entries))


def morphism_check(rb: WeightedRBLie, rb2: WeightedRBLie, phi: Matrix) -> Certificate:
    if rb.weight != rb2.weight:
        raise WeightMismatchError(f"weights {rb.weight} and {rb2.weight} differ")
    hom = is_lie_homomorphism(rb.g, rb2.g, phi)
    if not hom:
        return hom
    d = phi @ rb.T - rb2.T @ phi
    if not d.is_zero():
        for j in range(d.cols):
            if not is_zero_vector(d.col(j)):
                return Certificate.failed("operator intertwining", (j,), d.col(j))
    return Certificate.passed("rota-baxter morphism")


def deformed_bracket(rb: WeightedRBLie) -> LieAlgebra:
    """``[x, y]_T = [Tx, y] + [x, Ty] + lam [x, y]``."""
    g, T, lam = rb.g, rb.T, rb.weight

    def br(i, j):
        x, y = _unit(g.dim, i), _unit(g.dim, j)
        return vec_add(
            vec_add(g.bracket(T.col(i), y), g.bracket(x, T.col(j))),
            vec_scale(lam, g.basis_bracket(i, j)),
        )

    return LieAlgebra.from_function(g.dim, br)


def rep_bar(rb: WeightedRBLie, rbrep: RBLieRepresentation) -> RBLieRepresentation:
    """``rho_bar(x) = rho(Tx) + rho(x) calT + lam rho(x)`` over ``g_T``."""
    rep, calT, lam = rbrep.rep, rbrep.calT, rb.weight
    rho = tuple(
        rep.matrix(rb.T.col(i)) + rep.rho[i] @ calT + rep.rho[i].scale(lam)
        for i in range(rb.g.dim)
    )
    return RBLieRepresentation(LieRepresentation(rep.module_dim, rho), calT)


def rep_tilde(rb: WeightedRBLie, rbrep: RBLieRepresentation) -> RBLieRepresentation:
    """``rho_tilde(x) = rho(Tx) - calT rho(x)`` over ``g_T``."""
    rep, calT = rbrep.rep, rbrep.calT
    rho = tuple(rep.matrix(rb.T.col(i)) - calT @ rep.rho[i] for i in range(rb.g.dim))
    return RBLieRepresentation(LieRepresentation(rep.module_dim, rho), calT)


def rep_end(rb: WeightedRBLie, rbrep: RBLieRepresentation) -> RBLieRepresentation:
    """Representation on ``End(V)`` with ``(x.f) = -f rho(x)``.

    ``End(V)`` is coordinatised row-major: basis element ``a*n + b`` is the
    matrix unit ``E_ab``. The operator is ``f -> -lam f - f calT``.
    """
    n = rbrep.rep.module_dim
    N = n * n

    def as_matrix(v):
        return Matrix(n, n, tuple(v))

    def act(i):
        return _matrix_of(lambda v: (-(as_matrix(v) @ rbrep.rep.rho[i])).entries, N, N)

    rho = tuple(act(i) for i in range(rb.g.dim))
    op = _matrix_of(
        lambda v: (as_matrix(v).scale(-rb.weight) - as_matrix(v) @ rbrep.calT).entries, N, N
    )
    return RBLieRepresentation(LieRepresentation(N, rho), op)


def semidirect(rb: WeightedRBLie, rbrep: RBLieRepresentation) -> WeightedRBLie:
    """``g (+) V`` with ``[(x,u),(y,v)] = ([x,y], rho(x)v - rho(y)u)`` and ``T (+) calT``."""
    g, rep = rb.g, rbrep.rep
    n, m = g.dim, rep.module_dim
    zero_v = (Fraction(0),) * m

    def br(i, j):
        if i < n and j < n:
            return g.basis_bracket(i, j) + zero_v
        if i < n <= j:
            return (Fraction(0),) * n + rep.rho[i].col(j - n)
        if j < n <= i:
            return (Fraction(0),) * n + tuple(-c for c in rep.rho[j].col(i - n))
        return (Fraction(0),) * (n + m)

    total = LieAlgebra.from_function(n + m, br)
    return WeightedRBLie(total, rb.weight, Matrix.block_diag(rb.T, rbrep.calT))


# ---------------------------------------------------------------------------
# associative side


def check_rb_assoc(a: AssociativeAlgebra, weight, R: Matrix) -> Certificate:
    lam = to_rational(weight)
    if R.shape != (a.dim, a.dim):
        raise ShapeError("operator shape does not match the algebra")
    for i in range(a.dim):
        for j in range(a.dim):
            d = _rb_defect(a.mul, R, lam, _unit(a.dim, i), _unit(a.dim, j))
            if not is_zero_vector(d):
                return Certificate.failed("rota-baxter (associative)", (i, j), d)
    return Certificate.passed("rota-baxter (associative)")


def check_rb_bimodule(rba: WeightedRBAssoc, bim: Bimodule, calR: Matrix) -> Certificate:
    R, lam = rba.R, rba.weight
    if calR.shape != (bim.module_dim, bim.module_dim):
        raise ShapeError("module operator shape does not match the bimodule")
    for i in range(rba.a.dim):
        x = _unit(rba.a.dim, i)
        Rx = R.apply(x)
        for k in range(bim.module_dim):
            m = _unit(bim.module_dim, k)
            Rm = calR.apply(m)
            lhs = bim.lmul(Rx, Rm)
            inner = vec_add(vec_add(bim.lmul(Rx, m), bim.lmul(x, Rm)), vec_scale(lam, bim.lmul(x, m)))
            d = vec_sub(lhs, calR.apply(inner))
            if not is_zero_vector(d):
                return Certificate.failed("rota-baxter bimodule (left)", (i, k), d)
            lhs = bim.rmul(Rm, Rx)
            inner = vec_add(vec_add(bim.rmul(Rm, x), bim.rmul(m, Rx)), vec_scale(lam, bim.rmul(m, x)))
            d = vec_sub(lhs, calR.apply(inner))
            if not is_zero_vector(d):
                return Certificate.failed("rota-baxter bimodule (right)", (i, k), d)
    return Certificate.passed("rota-baxter bimodule")


def assoc_deformed_product(rba: WeightedRBAssoc) -> AssociativeAlgebra:
    a, R, lam = rba.a, rba.R, rba.weight

    def prod(i, j):
        x, y = _unit(a.dim, i), _unit(a.dim, j)
        return vec_add(
            vec_add(a.mul(R.col(i), y), a.mul(x, R.col(j))), vec_scale(lam, a.constants[i][j])
        )

    return AssociativeAlgebra.from_function(a.dim, prod)


def bimodule_tilde(rba: WeightedRBAssoc, rbbim: RBBimodule) -> Bimodule:
    """Bimodule over ``A_R``: ``a~m = R(a) m - calR(a m)``, ``m~a = m R(a) - calR(m a)``."""
    bim, calR = rbbim.bim, rbbim.calR

    def lmat(v):
        out = Matrix.zeros(bim.module_dim)
        for i, c in enumerate(v):
            if c:
                out = out + bim.left[i].scale(c)
        return out

    def rmat(v):
        out = Matrix.zeros(bim.module_dim)
        for i, c in enumerate(v):
            if c:
                out = out + bim.right[i].scale(c)
        return out

    left = tuple(lmat(rba.R.col(i)) - calR @ bim.left[i] for i in range(rba.a.dim))
    right = tuple(rmat(rba.R.col(i)) - calR @ bim.right[i] for i in range(rba.a.dim))
    return Bimodule(bim.module_dim, left, right)


def skew_symmetrize_rb(rba: WeightedRBAssoc, rbbim: RBBimodule | None = None):
    """Pass to ``(A_c, R)`` and, if given, the representation ``(M_c, calR)``."""
    rb = WeightedRBLie(skew_symmetrize_algebra(rba.a), rba.weight, rba.R)
    if rbbim is None:
        return rb
    return rb, RBLieRepresentation(skew_symmetrize_bimodule(rba.a, rbbim.bim), rbbim.calR)


def compatibility_skew(rba: WeightedRBAssoc, rbbim: RBBimodule) -> Certificate:
    """``(A_c)_R == (A_R)_c`` and the two induced representations agree."""
    rb, rbrep = skew_symmetrize_rb(rba, rbbim)
    left_path = deformed_bracket(rb)
    right_path = skew_symmetrize_algebra(assoc_deformed_product(rba))
    n = rba.a.dim
    for i in range(n):
        for j in range(n):
            d = vec_sub(left_path.basis_bracket(i, j), right_path.basis_bracket(i, j))
            if not is_zero_vector(d):
                return Certificate.failed("skew-symmetrization of deformed bracket", (i, j), d)
    rho1 = rep_tilde(rb, rbrep).rep.rho
    rho2 = skew_symmetrize_bimodule(assoc_deformed_product(rba), bimodule_tilde(rba, rbbim)).rho
    for i in range(n):
        d = rho1[i] - rho2[i]
        if not d.is_zero():
            return Certificate.failed("skew-symmetrization of tilde representation", (i,), d.entries)
    return Certificate.passed("skew-symmetrization compatibility")
