"""Lie and associative algebras given by structure constants.

Basis indices start at 0. ``LieAlgebra.constants[i][j]`` is the coordinate
vector of ``[e_i, e_j]``; representations store one action matrix per basis
element.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .certificate import Certificate, ShapeError
from .linalg import (
    Matrix,
    Vector,
    is_zero_vector,
    to_rational,
    vec_add,
    vec_sub,
    zero_vector,
)

__all__ = [
    "LieAlgebra",
    "LieRepresentation",
    "AssociativeAlgebra",
    "Bimodule",
    "validate_lie",
    "validate_representation",
    "validate_associative",
    "validate_bimodule",
    "adjoint_rep",
    "zero_rep",
    "adjoint_bimodule",
    "skew_symmetrize_algebra",
    "skew_symmetrize_bimodule",
    "direct_sum_reps",
    "bilinear",
]


def bilinear(table, dim_out: int, x: Sequence, y: Sequence) -> Vector:
    """Evaluate a bilinear map given on basis pairs by ``table[i][j]``."""
    out = [Fraction(0)] * dim_out
    for i, a in enumerate(x):
        if not a:
            continue
        row = table[i]
        for j, b in enumerate(y):
            if not b:
                continue
            ab = a * b
            for k, c in enumerate(row[j]):
                if c:
                    out[k] += ab * c
    return tuple(out)


def _constants_from_triples(dim: int, triples: Iterable, antisymmetric: bool):
    table = [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]
    given = set()
    for t in triples:
        if isinstance(t, dict):
            i, j, k, c = t["i"], t["j"], t["k"], t["c"]
        else:
            i, j, k, c = t
        if not all(isinstance(n, int) and 0 <= n < dim for n in (i, j, k)):
            raise ShapeError(f"structure-constant index out of range in {t!r}")
        table[i][j][k] += to_rational(c)
        given.add((i, j))
    if antisymmetric:
        for i, j in list(given):
            if (j, i) not in given:
                table[j][i] = [-x for x in table[i][j]]
    return tuple(tuple(tuple(v) for v in row) for row in table)


def _check_table(table, dim: int, out_dim: int, name: str):
    if len(table) != dim or any(len(row) != dim for row in table):
        raise ShapeError(f"{name}: expected a {dim}x{dim} table of vectors")
    for row in table:
        for v in row:
            if len(v) != out_dim:
                raise ShapeError(f"{name}: structure-constant vectors must have length {out_dim}")


@dataclass(frozen=True)
class LieAlgebra:
    dim: int
    constants: tuple

    @classmethod
    def from_triples(cls, dim: int, triples: Iterable) -> "LieAlgebra":
        """Build from ``(i, j, k, c)`` entries; missing ``[e_j, e_i]`` is filled by antisymmetry."""
        return cls(dim, _constants_from_triples(dim, triples, antisymmetric=True))

    @classmethod
    def abelian(cls, dim: int) -> "LieAlgebra":
        return cls.from_triples(dim, [])

    @classmethod
    def from_function(cls, dim: int, fn) -> "LieAlgebra":
        return cls(dim, tuple(tuple(tuple(fn(i, j)) for j in range(dim)) for i in range(dim)))

    def basis_bracket(self, i: int, j: int) -> Vector:
        return self.constants[i][j]

    def bracket(self, x: Sequence, y: Sequence) -> Vector:
        return bilinear(self.constants, self.dim, x, y)

    def basis(self, i: int) -> Vector:
        return tuple(Fraction(int(k == i)) for k in range(self.dim))

    def triples(self) -> list[tuple[int, int, int, Fraction]]:
        return [
            (i, j, k, c)
            for i in range(self.dim)
            for j in range(i + 1, self.dim)
            for k, c in enumerate(self.constants[i][j])
            if c
        ]


@dataclass(frozen=True)
class LieRepresentation:
    module_dim: int
    rho: tuple  # tuple[Matrix, ...], one per basis element of the algebra

    def act(self, x: Sequence, u: Sequence) -> Vector:
        out = zero_vector(self.module_dim)
        for i, a in enumerate(x):
            if a:
                out = vec_add(out, tuple(a * c for c in self.rho[i].apply(u)))
        return out

    def matrix(self, x: Sequence) -> Matrix:
        m = Matrix.zeros(self.module_dim)
        for i, a in enumerate(x):
            if a:
                m = m + self.rho[i].scale(a)
        return m


@dataclass(frozen=True)
class AssociativeAlgebra:
    dim: int
    constants: tuple

    @classmethod
    def from_triples(cls, dim: int, triples: Iterable) -> "AssociativeAlgebra":
        return cls(dim, _constants_from_triples(dim, triples, antisymmetric=False))

    @classmethod
    def from_function(cls, dim: int, fn) -> "AssociativeAlgebra":
        return cls(dim, tuple(tuple(tuple(fn(i, j)) for j in range(dim)) for i in range(dim)))

    def mul(self, a: Sequence, b: Sequence) -> Vector:
        return bilinear(self.constants, self.dim, a, b)

    def basis(self, i: int) -> Vector:
        return tuple(Fraction(int(k == i)) for k in range(self.dim))


@dataclass(frozen=True)
class Bimodule:
    module_dim: int
    left: tuple  # left[i] = matrix of m -> e_i . m
    right: tuple  # right[i] = matrix of m -> m . e_i

    def lmul(self, a: Sequence, m: Sequence) -> Vector:
        out = zero_vector(self.module_dim)
        for i, c in enumerate(a):
            if c:
                out = vec_add(out, tuple(c * x for x in self.left[i].apply(m)))
        return out

    def rmul(self, m: Sequence, a: Sequence) -> Vector:
        out = zero_vector(self.module_dim)
        for i, c in enumerate(a):
            if c:
                out = vec_add(out, tuple(c * x for x in self.right[i].apply(m)))
        return out


def _unit(n: int, i: int) -> Vector:
    return tuple(Fraction(int(k == i)) for k in range(n))


# ---------------------------------------------------------------------------
# verifiers


def validate_lie(g: LieAlgebra) -> Certificate:
    _check_table(g.constants, g.dim, g.dim, "lie bracket")
    n = g.dim
    for i in range(n):
        for j in range(i, n):
            s = vec_add(g.constants[i][j], g.constants[j][i])
            if not is_zero_vector(s):
                return Certificate.failed("antisymmetry", (i, j), s)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                e = [_unit(n, t) for t in (i, j, k)]
                jac = vec_add(
                    vec_add(
                        g.bracket(e[0], g.basis_bracket(j, k)),
                        g.bracket(e[1], g.basis_bracket(k, i)),
                    ),
                    g.bracket(e[2], g.basis_bracket(i, j)),
                )
                if not is_zero_vector(jac):
                    return Certificate.failed("jacobi", (i, j, k), jac)
    return Certificate.passed("lie")


def validate_representation(g: LieAlgebra, r: LieRepresentation) -> Certificate:
    if len(r.rho) != g.dim:
        raise ShapeError(f"representation has {len(r.rho)} matrices for a {g.dim}-dim algebra")
    for m in r.rho:
        if m.shape != (r.module_dim, r.module_dim):
            raise ShapeError("action matrices must be module_dim x module_dim")
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            lhs = r.matrix(g.basis_bracket(i, j))
            rhs = r.rho[i] @ r.rho[j] - r.rho[j] @ r.rho[i]
            diff = lhs - rhs
            if not diff.is_zero():
                return Certificate.failed("representation", (i, j), diff.entries)
    return Certificate.passed("representation")


def validate_associative(a: AssociativeAlgebra) -> Certificate:
    _check_table(a.constants, a.dim, a.dim, "product")
    n = a.dim
    for i in range(n):
        for j in range(n):
            for k in range(n):
                ei, ek = _unit(n, i), _unit(n, k)
                lhs = a.mul(a.constants[i][j], ek)
                rhs = a.mul(ei, a.constants[j][k])
                d = vec_sub(lhs, rhs)
                if not is_zero_vector(d):
                    return Certificate.failed("associativity", (i, j, k), d)
    return Certificate.passed("associative")


def validate_bimodule(a: AssociativeAlgebra, m: Bimodule) -> Certificate:
    if len(m.left) != a.dim or len(m.right) != a.dim:
        raise ShapeError("bimodule needs one left and one right matrix per basis element")
    for mat in (*m.left, *m.right):
        if mat.shape != (m.module_dim, m.module_dim):
            raise ShapeError("action matrices must be module_dim x module_dim")

    def lmat(v):
        out = Matrix.zeros(m.module_dim)
        for i, c in enumerate(v):
            if c:
                out = out + m.left[i].scale(c)
        return out

    def rmat(v):
        out = Matrix.zeros(m.module_dim)
        for i, c in enumerate(v):
            if c:
                out = out + m.right[i].scale(c)
        return out

    for i in range(a.dim):
        for j in range(a.dim):
            ab = a.constants[i][j]
            # (a b) m = a (b m)
            d = lmat(ab) - m.left[i] @ m.left[j]
            if not d.is_zero():
                return Certificate.failed("left action", (i, j), d.entries)
            # m (a b) = (m a) b
            d = rmat(ab) - m.right[j] @ m.right[i]
            if not d.is_zero():
                return Certificate.failed("right action", (i, j), d.entries)
            # (a m) b = a (m b)
            d = m.right[j] @ m.left[i] - m.left[i] @ m.right[j]
            if not d.is_zero():
                return Certificate.failed("left/right compatibility", (i, j), d.entries)
    return Certificate.passed("bimodule")


# ---------------------------------------------------------------------------
# constructions


def _matrix_of(fn, dim_in: int, dim_out: int) -> Matrix:
    return Matrix.from_columns([fn(_unit(dim_in, j)) for j in range(dim_in)], dim_out)


def adjoint_rep(g: LieAlgebra) -> LieRepresentation:
    return LieRepresentation(
        g.dim,
        tuple(_matrix_of(lambda y, i=i: g.bracket(_unit(g.dim, i), y), g.dim, g.dim) for i in range(g.dim)),
    )


def zero_rep(g: LieAlgebra, module_dim: int) -> LieRepresentation:
    return LieRepresentation(module_dim, tuple(Matrix.zeros(module_dim) for _ in range(g.dim)))


def adjoint_bimodule(a: AssociativeAlgebra) -> Bimodule:
    n = a.dim
    left = tuple(_matrix_of(lambda m, i=i: a.mul(_unit(n, i), m), n, n) for i in range(n))
    right = tuple(_matrix_of(lambda m, i=i: a.mul(m, _unit(n, i)), n, n) for i in range(n))
    return Bimodule(n, left, right)


def skew_symmetrize_algebra(a: AssociativeAlgebra) -> LieAlgebra:
    """Commutator algebra ``[a, b] = ab - ba``."""
    return LieAlgebra.from_function(
        a.dim, lambda i, j: vec_sub(a.constants[i][j], a.constants[j][i])
    )


def skew_symmetrize_bimodule(a: AssociativeAlgebra, m: Bimodule) -> LieRepresentation:
    return LieRepresentation(m.module_dim, tuple(m.left[i] - m.right[i] for i in range(a.dim)))


def direct_sum_reps(
    g: LieAlgebra, parts: Sequence[tuple[LieRepresentation, Matrix]]
) -> tuple[LieRepresentation, Matrix]:
    """Block-diagonal sum of representations together with their operators."""
    if not parts:
        raise ValueError("direct sum of an empty family")
    if len(parts) == 1:
        return parts[0]
    for rep, op in parts:
        if len(rep.rho) != g.dim:
            raise ShapeError("representation does not match the algebra")
        if op.shape != (rep.module_dim, rep.module_dim):
            raise ShapeError("operator shape does not match its module")
    rho = tuple(Matrix.block_diag(*(rep.rho[i] for rep, _ in parts)) for i in range(g.dim))
    total = sum(rep.module_dim for rep, _ in parts)
    return LieRepresentation(total, rho), Matrix.block_diag(*(op for _, op in parts))
