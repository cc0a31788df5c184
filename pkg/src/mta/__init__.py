"""Exact-arithmetic tools for mode-transition algebras.

The package is organized in layers: partition combinatorics, a free-boson
normal-ordering engine, structure-constant corner (Peirce) algebras with
zig-zag and Morita machinery, block descriptors for higher degree-d
algebras, and even-lattice graded module dimensions.  Everything runs over
the rationals with fractions.Fraction; there is no floating point anywhere.
"""

from .exact import frac_str, parse_frac
from .heisenberg import (
    IdentityReport,
    Mode,
    ModeElement,
    NormalWord,
    RankCertificate,
    ZhuPolynomial,
    commutator,
    pairing,
    pairing_matrix,
    rank_certificate,
    star_to_zhu,
    strong_identity,
    strong_identity_from_json,
    strong_identity_to_json,
    u_element,
    ubar_element,
    verify_strong_identity,
)
from .lattice import (
    CosetRep,
    EvenLattice,
    conformal_weight,
    coset_norms,
    count_norm_layer,
    dual_cosets,
    graded_dims,
    load_gram,
    parse_gram_text,
)
from .partitions import (
    LabeledPartition,
    Partition,
    enumerate_labeled_partitions,
    enumerate_partitions,
    labeled_partition_count,
    partition_count,
    symmetry_factor,
)
from .peirce import (
    Algebra,
    IdealSplit,
    ModuleRep,
    PeirceAlgebra,
    PeirceReport,
    RoundtripReport,
    Subspace,
    TensorQuotient,
    ZigZag,
    action_through_A_check,
    balanced_tensor,
    find_strong_identity,
    heisenberg_truncation,
    ideal_unit_and_split,
    matrix_model,
    matrix_model_column_module,
    morita_backward,
    morita_forward,
    regular_module,
    validate_peirce,
    verify_roundtrip,
    zd_ideal,
    zigzag,
)
from .zhu import (
    SimpleModuleData,
    ZhuDescriptor,
    commutative_zhu_descriptor,
    exceptional_degrees,
    heisenberg_zhu_descriptor,
    rational_zhu_descriptor,
    zd_support,
)

__version__ = "0.1.0"

__all__ = [
    "Algebra",
    "CosetRep",
    "EvenLattice",
    "IdealSplit",
    "IdentityReport",
    "LabeledPartition",
    "Mode",
    "ModeElement",
    "ModuleRep",
    "NormalWord",
    "Partition",
    "PeirceAlgebra",
    "PeirceReport",
    "RankCertificate",
    "RoundtripReport",
    "SimpleModuleData",
    "Subspace",
    "TensorQuotient",
    "ZhuDescriptor",
    "ZhuPolynomial",
    "ZigZag",
    "action_through_A_check",
    "balanced_tensor",
    "commutative_zhu_descriptor",
    "commutator",
    "conformal_weight",
    "coset_norms",
    "count_norm_layer",
    "dual_cosets",
    "enumerate_labeled_partitions",
    "enumerate_partitions",
    "exceptional_degrees",
    "find_strong_identity",
    "frac_str",
    "graded_dims",
    "heisenberg_truncation",
    "heisenberg_zhu_descriptor",
    "ideal_unit_and_split",
    "labeled_partition_count",
    "load_gram",
    "matrix_model",
    "matrix_model_column_module",
    "morita_backward",
    "morita_forward",
    "pairing",
    "pairing_matrix",
    "parse_frac",
    "parse_gram_text",
    "partition_count",
    "rank_certificate",
    "rational_zhu_descriptor",
    "regular_module",
    "star_to_zhu",
    "strong_identity",
    "strong_identity_from_json",
    "strong_identity_to_json",
    "symmetry_factor",
    "u_element",
    "ubar_element",
    "validate_peirce",
    "verify_roundtrip",
    "verify_strong_identity",
    "zd_ideal",
    "zd_support",
    "zigzag",
]
