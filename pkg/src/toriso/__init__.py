"""Exact combinatorial models of toric and quasitoric manifolds.

Fans and characteristic pairs with validated axioms, face-ring
presentations of their equivariant cohomology, zero counts of degree-2
classes, isomorphism decision with explicit rechecked witnesses, and the
kernel lattice of the quotient construction.  All arithmetic is exact.
"""

from .cohomology import (
    DegreeTwoClass,
    Presentation,
    annihilator_rank_oracle,
    pi_star,
    presentation,
    restrict,
    restriction_matrix,
    restriction_rank,
    restriction_table,
    structure_matrix,
    zero_length,
)
from .fanio import FanFormatError, load_fan, parse_fan, render_fan, save_fan
from .fans import (
    FanData,
    ValidationIssue,
    ValidationReport,
    apply_torus_automorphism,
    blow_up,
    fixed_points,
    hirzebruch,
    product,
    projective_space,
    relabel_vertices,
    validate,
)
from .isomorphism import (
    DecisionMode,
    IsoWitness,
    decide,
    inverse_witness,
    thom_stratification,
    transport_class,
    verify_witness,
)
from .lattice import (
    Matrix,
    SmithDecomposition,
    Vector,
    det,
    row_hermite_form,
    smith_normal_form,
    solve_basis_map,
)
from .quotient import KernelData, kernel_data, kernels_equal
from .simplicial import (
    SimplicialComplex,
    VertexMap,
    enumerate_isomorphisms,
    euler_characteristic,
    is_face,
    is_pure_pseudomanifold,
    minimal_nonfaces,
    stellar_subdivide,
)

__version__ = "0.1.0"

__all__ = [
    "DegreeTwoClass",
    "Presentation",
    "annihilator_rank_oracle",
    "pi_star",
    "presentation",
    "restrict",
    "restriction_matrix",
    "restriction_rank",
    "restriction_table",
    "structure_matrix",
    "zero_length",
    "FanFormatError",
    "load_fan",
    "parse_fan",
    "render_fan",
    "save_fan",
    "FanData",
    "ValidationIssue",
    "ValidationReport",
    "apply_torus_automorphism",
    "blow_up",
    "fixed_points",
    "hirzebruch",
    "product",
    "projective_space",
    "relabel_vertices",
    "validate",
    "DecisionMode",
    "IsoWitness",
    "decide",
    "inverse_witness",
    "thom_stratification",
    "transport_class",
    "verify_witness",
    "Matrix",
    "SmithDecomposition",
    "Vector",
    "det",
    "row_hermite_form",
    "smith_normal_form",
    "solve_basis_map",
    "KernelData",
    "kernel_data",
    "kernels_equal",
    "SimplicialComplex",
    "VertexMap",
    "enumerate_isomorphisms",
    "euler_characteristic",
    "is_face",
    "is_pure_pseudomanifold",
    "minimal_nonfaces",
    "stellar_subdivide",
    "__version__",
]
