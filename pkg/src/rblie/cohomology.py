"""Cohomology of the cochain complexes by exact rank and kernel computations.

A complex is described by its cochain spaces and a differential; differential
matrices are assembled column by column from basis cochains and cached.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .algebra import AssociativeAlgebra, Bimodule, LieAlgebra, LieRepresentation
from .certificate import ShapeError
from .cochains import (
    CECochain,
    HochschildCochain,
    RBCochain,
    delta_ce,
    delta_hochschild,
    delta_rb,
    delta_rb_assoc,
    partial_ce,
    partial_hochschild,
    xi,
)
from .linalg import Matrix, kernel_basis, rank, solve
from .rota_baxter import (
    RBBimodule,
    RBLieRepresentation,
    WeightedRBAssoc,
    WeightedRBLie,
    dual_operator,
    dual_representation,
)

__all__ = [
    "CochainComplex",
    "CohomologyReport",
    "ce_complex",
    "ce_deformed_complex",
    "rb_complex",
    "hochschild_complex",
    "hochschild_deformed_complex",
    "rb_assoc_complex",
    "make_complex",
    "SELECTORS",
    "cohomology",
    "betti_numbers",
    "is_cocycle",
    "is_coboundary",
    "cohomologous",
    "derivations",
    "inner_derivations",
    "xi_isomorphism",
    "dual_complex",
]


class CochainComplex:
    """Cochain spaces ``C^n`` with flat coordinates and a differential ``d: C^n -> C^(n+1)``.

    ``dim(n)`` gives the dimension of ``C^n``; ``to_cochain``/``to_flat``
    convert between cochain objects and coordinate vectors; ``apply(c)`` is
    the differential on cochain objects.
    """

    def __init__(self, name: str, dim: Callable, to_cochain: Callable, to_flat: Callable, apply: Callable):
        self.name = name
        self._dim = dim
        self.to_cochain = to_cochain
        self.to_flat = to_flat
        self.apply = apply
        self._matrices: dict[int, Matrix] = {}

    def dim(self, n: int) -> int:
        return self._dim(n) if n >= 0 else 0

    def differential_matrix(self, n: int) -> Matrix:
        """Matrix of ``d`` from ``C^n`` to ``C^(n+1)`` (zero-width for ``n < 0``)."""
        if n not in self._matrices:
            rows, cols = self.dim(n + 1), self.dim(n)
            if cols == 0 or n < 0:
                self._matrices[n] = Matrix.zeros(rows, 0 if n < 0 else cols)
            else:
                columns = []
                for j in range(cols):
                    e = tuple(Fraction(int(k == j)) for k in range(cols))
                    columns.append(self.to_flat(self.apply(self.to_cochain(n, e))))
                self._matrices[n] = Matrix.from_columns(columns, rows)
        return self._matrices[n]

    def degree_of(self, c) -> int:
        return c.degree


@dataclass(frozen=True)
class CohomologyReport:
    degree: int
    dim_cochains: int
    dim_cocycles: int
    dim_coboundaries: int
    betti: int
    cocycle_basis: list = field(default_factory=list, compare=False)

    def to_dict(self) -> dict:
        return {
            "degree": self.degree,
            "dim_cochains": self.dim_cochains,
            "dim_cocycles": self.dim_cocycles,
            "dim_coboundaries": self.dim_coboundaries,
            "betti": self.betti,
            "representatives": [c.to_dict() for c in self.cocycle_basis],
        }


# ---------------------------------------------------------------------------
# the complexes


def _plain(kind, src_dim, tgt_dim, d, name):
    return CochainComplex(
        name,
        lambda n: kind.space_dim(n, src_dim, tgt_dim),
        lambda n, flat: kind.from_flat(n, src_dim, tgt_dim, flat),
        lambda c: c.flat(),
        d,
    )


def _paired(kind, src_dim, tgt_dim, d, name):
    return CochainComplex(
        name,
        lambda n: RBCochain.space_dim(kind, n, src_dim, tgt_dim),
        lambda n, flat: RBCochain.from_flat(kind, n, src_dim, tgt_dim, flat),
        lambda c: c.flat(),
        d,
    )


def ce_complex(g: LieAlgebra, rep: LieRepresentation) -> CochainComplex:
    return _plain(CECochain, g.dim, rep.module_dim, lambda f: delta_ce(g, rep, f), "ce")


def ce_deformed_complex(rb: WeightedRBLie, rbrep: RBLieRepresentation) -> CochainComplex:
    return _plain(CECochain, rb.g.dim, rbrep.rep.module_dim, lambda f: partial_ce(rb, rbrep, f), "ce-deformed")


def rb_complex(rb: WeightedRBLie, rbrep: RBLieRepresentation) -> CochainComplex:
    return _paired(CECochain, rb.g.dim, rbrep.rep.module_dim, lambda c: delta_rb(rb, rbrep, c), "rb")


def hochschild_complex(a: AssociativeAlgebra, bim: Bimodule) -> CochainComplex:
    return _plain(HochschildCochain, a.dim, bim.module_dim, lambda f: delta_hochschild(a, bim, f), "hochschild")


def hochschild_deformed_complex(rba: WeightedRBAssoc, rbbim: RBBimodule) -> CochainComplex:
    return _plain(
        HochschildCochain, rba.a.dim, rbbim.bim.module_dim,
        lambda f: partial_hochschild(rba, rbbim, f), "hochschild-deformed",
    )


def rb_assoc_complex(rba: WeightedRBAssoc, rbbim: RBBimodule) -> CochainComplex:
    return _paired(
        HochschildCochain, rba.a.dim, rbbim.bim.module_dim,
        lambda c: delta_rb_assoc(rba, rbbim, c), "rb-assoc",
    )


def _rbp(rb, rbrep):
    from .graded import PairedOperators, rbp_complex

    return rbp_complex(PairedOperators(rb.g, rbrep.rep, rb.weight, rb.T, rbrep.calT))


SELECTORS = {
    "ce": lambda rb, rbrep: ce_complex(rb.g, rbrep.rep),
    "ce-deformed": ce_deformed_complex,
    "rb": rb_complex,
    "hochschild": lambda rba, rbbim: hochschild_complex(rba.a, rbbim.bim),
    "hochschild-deformed": hochschild_deformed_complex,
    "rb-assoc": rb_assoc_complex,
    "rbp": _rbp,
}


def make_complex(selector: str, structure, module) -> CochainComplex:
    """``structure``/``module`` are the Rota-Baxter algebra and its representation or bimodule."""
    try:
        return SELECTORS[selector](structure, module)
    except KeyError:
        raise ValueError(f"unknown complex {selector!r}; choose from {sorted(SELECTORS)}") from None


# ---------------------------------------------------------------------------
# cohomology


def cohomology(cx: CochainComplex, n: int) -> CohomologyReport:
    if n < 0:
        raise ValueError("degree must be non-negative")
    D = cx.differential_matrix(n)
    Dprev = cx.differential_matrix(n - 1)
    kernel = kernel_basis(D) if D.cols else []
    dim_z = len(kernel)
    dim_b = rank(Dprev) if Dprev.cols else 0
    if dim_z != D.cols - rank(D):
        raise AssertionError("kernel dimension disagrees with rank-nullity")
    # complete a basis of the image by kernel vectors
    span = Dprev.columns() if Dprev.cols else []
    current = _independent(span)
    reps = []
    for v in kernel:
        cand = current + [v]
        if rank(Matrix.from_columns(cand, D.cols)) > len(current):
            current = cand
            reps.append(v)
    betti = dim_z - dim_b
    if len(reps) != betti or betti < 0:
        raise AssertionError("representative count disagrees with the Betti number")
    return CohomologyReport(n, cx.dim(n), dim_z, dim_b, betti, [cx.to_cochain(n, v) for v in reps])


def _independent(vectors):
    out = []
    for v in vectors:
        cand = out + [v]
        if rank(Matrix.from_columns(cand, len(v))) == len(cand):
            out = cand
    return out


def betti_numbers(cx: CochainComplex, max_degree: int) -> list[int]:
    return [cohomology(cx, n).betti for n in range(max_degree + 1)]


def is_cocycle(cx: CochainComplex, c) -> bool:
    return cx.apply(c).is_zero()


def is_coboundary(cx: CochainComplex, c):
    """A preimage ``b`` with ``d b = c``, or ``None``.

    In degree 0 the only coboundary is zero; its preimage is reported as ``()``.
    """
    n = cx.degree_of(c)
    if n == 0:
        return () if c.is_zero() else None
    x = solve(cx.differential_matrix(n - 1), cx.to_flat(c))
    if x is None:
        return None
    return cx.to_cochain(n - 1, x)


def cohomologous(cx: CochainComplex, c1, c2):
    """A primitive ``b`` with ``d b = c1 - c2``, or ``None``."""
    return is_coboundary(cx, c1 - c2)


# ---------------------------------------------------------------------------
# low degrees


def derivations(rb: WeightedRBLie, rbrep: RBLieRepresentation) -> list[tuple[Matrix, tuple]]:
    """Basis of pairs ``(gamma, v)`` solving the two derivation conditions.

    ``gamma`` is a Lie 1-cocycle and ``gamma T - calT gamma = rho(T .) v - calT rho(.) v``.
    Solved directly as a linear system in the entries of ``gamma`` and ``v``.
    """
    g, rep = rb.g, rbrep.rep
    n, m = g.dim, rep.module_dim
    nvars = m * n + m  # gamma row-major, then v
    rows = []

    def gamma_var(i, j):
        return i * n + j

    # gamma([e_a, e_b]) - rho(e_a) gamma(e_b) + rho(e_b) gamma(e_a) = 0
    for a in range(n):
        for b in range(a + 1, n):
            br = g.basis_bracket(a, b)
            for out in range(m):
                row = [Fraction(0)] * nvars
                for k, c in enumerate(br):
                    if c:
                        row[gamma_var(out, k)] += c
                for s in range(m):
                    row[gamma_var(s, b)] -= rep.rho[a][out, s]
                    row[gamma_var(s, a)] += rep.rho[b][out, s]
                rows.append(row)
    # gamma(T e_a) - calT gamma(e_a) - rho(T e_a) v + calT rho(e_a) v = 0
    T, calT = rb.T, rbrep.calT
    for a in range(n):
        Ta = T.col(a)
        rho_Ta = rep.matrix(Ta)
        trho = calT @ rep.rho[a]
        for out in range(m):
            row = [Fraction(0)] * nvars
            for k, c in enumerate(Ta):
                if c:
                    row[gamma_var(out, k)] += c
            for s in range(m):
                row[gamma_var(s, a)] -= calT[out, s]
                row[m * n + s] += trho[out, s] - rho_Ta[out, s]
            rows.append(row)
    M = Matrix.from_rows(rows, nvars) if rows else Matrix.zeros(0, nvars)
    return [_unpack_der(v, n, m) for v in kernel_basis(M)]


def _unpack_der(v, n, m):
    gamma = Matrix(m, n, tuple(v[: m * n]))
    return gamma, tuple(v[m * n:])


def inner_derivations(rb: WeightedRBLie, rbrep: RBLieRepresentation) -> list[tuple[Matrix, tuple]]:
    """Basis of ``{(-dv, v)}``, where ``(-dv)(x) = rho(x) v``."""
    rep = rbrep.rep
    n, m = rb.g.dim, rep.module_dim
    vecs = []
    for s in range(m):
        v = tuple(Fraction(int(k == s)) for k in range(m))
        gamma = Matrix.from_columns([rep.rho[a].apply(v) for a in range(n)], m)
        vecs.append(gamma.entries + v)
    basis = _independent(vecs) if vecs else []
    return [_unpack_der(v, n, m) for v in basis]


def xi_isomorphism(rb: WeightedRBLie, rbrep: RBLieRepresentation, c: RBCochain) -> RBCochain:
    """Comparison map into the complex of the dual structure."""
    if c.f.src_dim != rb.g.dim or c.f.tgt_dim != rbrep.rep.module_dim:
        raise ShapeError("cochain does not match the structure")
    return xi(c)


def dual_complex(rb: WeightedRBLie, rbrep: RBLieRepresentation) -> CochainComplex:
    return rb_complex(dual_operator(rb), dual_representation(rb, rbrep))
