"""Exact root-system combinatorics for twisted affine Lie superalgebras.

A library and CLI that materializes the root systems of the four twisted
affine families with nonzero odd part, classifies roots, verifies the finite
structural identities exhaustively on windows, models shadow configurations
with their parabolic sets, synthesizes exact rational defining functionals,
and decomposes the positive slice over its indecomposable generators.
"""

from .families import AffineFamily, AlgebraParams, InvalidParamsError, valid_params
from .lattice import (
    AmbientMismatchError,
    RootVector,
    del_unit,
    delta_vec,
    eps_unit,
    form,
    norm,
    zero_vec,
)
from .parabolic import (
    DotParabolic,
    Functional,
    GeneratorSet,
    InfeasibleSystemError,
    TriangularDecomp,
    check_positivity_alignment,
    combine_functionals,
    decompose_over_generators,
    dot_parabolic_from_config,
    generator_set,
    induced_dot_parabolic,
    is_parabolic,
    synthesize_functional,
    triangular,
)
from .progressions import ProgressionSet
from .rootsys import (
    Component,
    NotARootError,
    NotADotRootError,
    Parity,
    RootClass,
    RootInfo,
    check_double_odd,
    check_length_trichotomy,
    check_ns_sum,
    check_sum_property,
    classify,
    dot_roots,
    dot_roots_0,
    enumerate_window,
    is_root,
    ns_decompose,
    r_invariants,
    s_set,
    s_set_0,
)
from .shadow import (
    Case,
    ClassState,
    HybridProfile,
    ShadowConfig,
    check_mixed_components,
    check_parabolic,
    derive_parabolic,
    is_hybrid_module,
    is_tight,
    member_in,
    member_ln,
    validate,
)

__version__ = "0.1.0"

__all__ = [
    "AffineFamily",
    "AlgebraParams",
    "AmbientMismatchError",
    "Case",
    "ClassState",
    "Component",
    "DotParabolic",
    "Functional",
    "GeneratorSet",
    "HybridProfile",
    "InfeasibleSystemError",
    "InvalidParamsError",
    "NotADotRootError",
    "NotARootError",
    "Parity",
    "ProgressionSet",
    "RootClass",
    "RootInfo",
    "RootVector",
    "ShadowConfig",
    "TriangularDecomp",
    "check_double_odd",
    "check_length_trichotomy",
    "check_mixed_components",
    "check_ns_sum",
    "check_parabolic",
    "check_positivity_alignment",
    "check_sum_property",
    "classify",
    "combine_functionals",
    "decompose_over_generators",
    "del_unit",
    "delta_vec",
    "derive_parabolic",
    "dot_parabolic_from_config",
    "dot_roots",
    "dot_roots_0",
    "enumerate_window",
    "eps_unit",
    "form",
    "generator_set",
    "induced_dot_parabolic",
    "is_hybrid_module",
    "is_parabolic",
    "is_root",
    "is_tight",
    "member_in",
    "member_ln",
    "norm",
    "ns_decompose",
    "r_invariants",
    "s_set",
    "s_set_0",
    "synthesize_functional",
    "triangular",
    "valid_params",
    "validate",
    "zero_vec",
    "__version__",
]
