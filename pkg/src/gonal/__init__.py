"""Exact toolkit for q-homology covers of cyclic p-gonal curves.

Everything is integer or residue arithmetic: subgroup atlases over F_q,
Galois closures of composite covers, genus and Prym-dimension identities,
representation censuses, and group-ring identity verification on regular
representations.
"""

from .action import (
    AdaptedAction,
    CoverParams,
    CyclotomicFactorization,
    build_action,
    cyclotomic_factor,
    enumerate_invariant_subspaces,
    invariant_subspace_of_dim,
    order_mod,
    parameter_sweep,
)
from .atlas import (
    GaloisReport,
    Hyperplane,
    OrbitClass,
    conjugate_hyperplane,
    core,
    enumerate_hyperplanes,
    enumerate_subgroups_brute,
    galois_closure,
    gaussian_count,
    orbit_classes,
    parse_generator_words,
    read_fixture,
)
from .calculus import (
    CoverReport,
    decomposition_report,
    genus_base,
    genus_homology_cover,
    genus_intermediate,
    genus_quotient_T,
    genus_quotient_by_core,
    prym_dim,
)
from .errors import (
    AmbientMismatchError,
    CapExceededError,
    FixtureParseError,
    GonalError,
    IdentityCheckError,
    InvalidParamsError,
    InvalidTransversalError,
    InvariantHyperplaneError,
    NoInvariantSubspaceError,
)
from .fqlinalg import FqMatrix, Subspace, contains, intersect, kernel, rref
from .groupring import (
    FrobeniusGroup,
    GroupRingOperator,
    RegularModule,
    build_group,
    fixed_subspace,
    frobenius_check,
    verify_cross_terms,
    verify_scalar_identity,
)
from .reps import (
    RepTable,
    complex_table,
    induced_rep_count_by_kernel,
    isotypical_report,
    rational_table,
    rep_table,
)

__version__ = "0.1.0"

__all__ = [
    "AdaptedAction",
    "AmbientMismatchError",
    "CapExceededError",
    "CoverParams",
    "CoverReport",
    "CyclotomicFactorization",
    "FixtureParseError",
    "FqMatrix",
    "FrobeniusGroup",
    "GaloisReport",
    "GonalError",
    "GroupRingOperator",
    "Hyperplane",
    "IdentityCheckError",
    "InvalidParamsError",
    "InvalidTransversalError",
    "InvariantHyperplaneError",
    "NoInvariantSubspaceError",
    "OrbitClass",
    "RegularModule",
    "RepTable",
    "Subspace",
    "build_action",
    "build_group",
    "complex_table",
    "conjugate_hyperplane",
    "contains",
    "core",
    "cyclotomic_factor",
    "decomposition_report",
    "enumerate_hyperplanes",
    "enumerate_invariant_subspaces",
    "enumerate_subgroups_brute",
    "fixed_subspace",
    "frobenius_check",
    "galois_closure",
    "gaussian_count",
    "genus_base",
    "genus_homology_cover",
    "genus_intermediate",
    "genus_quotient_T",
    "genus_quotient_by_core",
    "induced_rep_count_by_kernel",
    "intersect",
    "invariant_subspace_of_dim",
    "isotypical_report",
    "kernel",
    "orbit_classes",
    "order_mod",
    "parameter_sweep",
    "parse_generator_words",
    "prym_dim",
    "rational_table",
    "read_fixture",
    "rep_table",
    "rref",
    "verify_cross_terms",
    "verify_scalar_identity",
]
