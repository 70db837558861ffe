"""Exact computations for weighted Rota-Baxter Lie and associative algebras.

Structures are given by rational structure constants; cochain complexes,
cohomology, extensions, deformations and the Maurer-Cartan description of
paired operators are computed with exact linear algebra over the rationals.
"""

from .algebra import (
    AssociativeAlgebra,
    Bimodule,
    LieAlgebra,
    LieRepresentation,
    adjoint_bimodule,
    adjoint_rep,
    validate_associative,
    validate_bimodule,
    validate_lie,
    validate_representation,
    zero_rep,
)
from .certificate import Certificate, ShapeError, StructureError
from .cochains import CECochain, HochschildCochain, RBCochain, delta_ce, delta_hochschild, delta_rb, delta_rb_assoc
from .cohomology import (
    CohomologyReport,
    betti_numbers,
    cohomologous,
    cohomology,
    derivations,
    inner_derivations,
    is_coboundary,
    is_cocycle,
    make_complex,
    rb_complex,
)
from .deformations import GaugeTransform, TruncatedDeformation, check_deformation, trivialize
from .extensions import AbelianExtension, cocycle_from_extension, extension_from_cocycle, extensions_isomorphic
from .graded import PairedOperators, check_paired, graph_subalgebra_check, mc_check, rbp_cohomology
from .linalg import Matrix, kernel_basis, rank, rref, solve
from .rota_baxter import (
    RBBimodule,
    RBLieRepresentation,
    WeightedRBAssoc,
    WeightedRBLie,
    check_rb_assoc,
    check_rb_bimodule,
    check_rb_lie,
    check_rb_rep,
)

__version__ = "0.1.0"

__all__ = [
    "AssociativeAlgebra",
    "Bimodule",
    "LieAlgebra",
    "LieRepresentation",
    "adjoint_bimodule",
    "adjoint_rep",
    "validate_associative",
    "validate_bimodule",
    "validate_lie",
    "validate_representation",
    "zero_rep",
    "Certificate",
    "ShapeError",
    "StructureError",
    "CECochain",
    "HochschildCochain",
    "RBCochain",
    "delta_ce",
    "delta_hochschild",
    "delta_rb",
    "delta_rb_assoc",
    "CohomologyReport",
    "betti_numbers",
    "cohomologous",
    "cohomology",
    "derivations",
    "inner_derivations",
    "is_coboundary",
    "is_cocycle",
    "make_complex",
    "rb_complex",
    "GaugeTransform",
    "TruncatedDeformation",
    "check_deformation",
    "trivialize",
    "AbelianExtension",
    "cocycle_from_extension",
    "extension_from_cocycle",
    "extensions_isomorphic",
    "PairedOperators",
    "check_paired",
    "graph_subalgebra_check",
    "mc_check",
    "rbp_cohomology",
    "Matrix",
    "kernel_basis",
    "rank",
    "rref",
    "solve",
    "RBBimodule",
    "RBLieRepresentation",
    "WeightedRBAssoc",
    "WeightedRBLie",
    "check_rb_assoc",
    "check_rb_bimodule",
    "check_rb_lie",
    "check_rb_rep",
]
