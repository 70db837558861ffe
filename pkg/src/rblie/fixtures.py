"""Small algebras shared by the tests, the acceptance run and the CLI examples."""

from __future__ import annotations

from fractions import Fraction

from .algebra import (
    AssociativeAlgebra,
    LieAlgebra,
    LieRepresentation,
    adjoint_bimodule,
    adjoint_rep,
    zero_rep,
)
from .linalg import Matrix
from .rota_baxter import RBBimodule, RBLieRepresentation, WeightedRBAssoc, WeightedRBLie


def abelian2() -> LieAlgebra:
    return LieAlgebra.abelian(2)


def aff1() -> LieAlgebra:
    """``[e0, e1] = e1``."""
    return LieAlgebra.from_triples(2, [(0, 1, 1, 1)])


def sl2() -> LieAlgebra:
    """Basis ``(h, e, f)``."""
    return LieAlgebra.from_triples(3, [(0, 1, 1, 2), (0, 2, 2, -2), (1, 2, 0, 1)])


def fix_ass() -> AssociativeAlgebra:
    """``e.e = e``, ``e.f = f``, other products zero."""
    return AssociativeAlgebra.from_triples(2, [(0, 0, 0, 1), (0, 1, 1, 1)])


def dual_numbers() -> AssociativeAlgebra:
    """``k[x]/(x^2)`` on the basis ``(1, x)``."""
    return AssociativeAlgebra.from_triples(2, [(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)])


def fix_ab(weight=1) -> tuple[WeightedRBLie, RBLieRepresentation]:
    # every linear map is Rota-Baxter on an abelian algebra
    g = abelian2()
    T = Matrix.from_rows([[1, 2], [0, 3]])
    return WeightedRBLie(g, weight, T), RBLieRepresentation(adjoint_rep(g), T)


def fix_a(weight=1) -> tuple[WeightedRBLie, RBLieRepresentation]:
    g = aff1()
    lam = Fraction(weight)
    T = Matrix.diag([-lam, 0])
    return WeightedRBLie(g, lam, T), RBLieRepresentation(adjoint_rep(g), T)


def fix_a_trivial() -> tuple[WeightedRBLie, RBLieRepresentation]:
    """aff(1), adjoint, weight 0, zero operators."""
    g = aff1()
    return WeightedRBLie(g, 0, Matrix.zeros(2)), RBLieRepresentation(adjoint_rep(g), Matrix.zeros(2))


def fix_sl2(weight=1) -> tuple[WeightedRBLie, RBLieRepresentation]:
    g = sl2()
    lam = Fraction(weight)
    T = Matrix.diag([0, -lam, 0])
    return WeightedRBLie(g, lam, T), RBLieRepresentation(adjoint_rep(g), T)


def identity_config(g: LieAlgebra, rep: LieRepresentation | None = None):
    """Weight -1 with identity operators on both sides."""
    rep = adjoint_rep(g) if rep is None else rep
    return (
        WeightedRBLie(g, -1, Matrix.identity(g.dim)),
        RBLieRepresentation(rep, Matrix.identity(rep.module_dim)),
    )


def fix_ass_rb(weight=1) -> tuple[WeightedRBAssoc, RBBimodule]:
    a = fix_ass()
    lam = Fraction(weight)
    R = Matrix.diag([-lam, 0])
    return WeightedRBAssoc(a, lam, R), RBBimodule(adjoint_bimodule(a), R)


def lie_configurations() -> dict[str, tuple[WeightedRBLie, RBLieRepresentation]]:
    """Named valid (operator, representation) pairs used across the suites."""
    g = aff1()
    return {
        "FIX-AB": fix_ab(),
        "FIX-A": fix_a(),
        "FIX-A/trivial": fix_a_trivial(),
        "FIX-A/weight-2": fix_a(2),
        "FIX-A/identity": identity_config(g),
        "FIX-A/zero-rep": identity_config(g, zero_rep(g, 1)),
        "FIX-SL2": fix_sl2(),
        "FIX-SL2/identity": identity_config(sl2()),
    }


def assoc_configurations() -> dict[str, tuple[WeightedRBAssoc, RBBimodule]]:
    a = fix_ass()
    out = {f"FIX-ASS/weight{w}": fix_ass_rb(w) for w in (0, 1, -1)}
    out["FIX-ASS/identity"] = (
        WeightedRBAssoc(a, -1, Matrix.identity(2)),
        RBBimodule(adjoint_bimodule(a), Matrix.identity(2)),
    )
    d = dual_numbers()
    out["dual-numbers/zero"] = (
        WeightedRBAssoc(d, 0, Matrix.zeros(2)),
        RBBimodule(adjoint_bimodule(d), Matrix.zeros(2)),
    )
    return out


__all__ = [
    "abelian2",
    "aff1",
    "sl2",
    "fix_ass",
    "dual_numbers",
    "fix_ab",
    "fix_a",
    "fix_a_trivial",
    "fix_sl2",
    "identity_config",
    "fix_ass_rb",
    "lie_configurations",
    "assoc_configurations",
]
