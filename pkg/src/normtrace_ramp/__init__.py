"""Ramp secret sharing from nested one-point codes on extended norm-trace curves."""

from .curve import CurveParams, PointPartition, enumerate_points, validate_params
from .codes import (
    EvaluationCode,
    NestedCodePair,
    build_decreasing_code,
    build_one_point_code,
    dual_basis,
    leakage,
    nested_pair,
    pair_from_codes,
    uncertainty,
)
from .errors import (
    BudgetExceededError,
    HypothesisError,
    InconsistentSharesError,
    InfeasibleError,
    NormTraceError,
    ValidationError,
)
from .field import (
    Field,
    FieldElement,
    field_of_order,
    make_field,
    norm_to_subfield,
    trace_to_subfield,
)
from .qualifying import (
    NonQualifyingSet,
    RootChoice,
    StructureRecord,
    build_max_nonqualifying,
    canonical_choice,
    common_zero_set,
    construct_functions,
    decompose_structure,
    enumerate_variants,
    evaluate_function,
)
from .ramp import (
    AccessReport,
    CoalitionReport,
    ReconstructionResult,
    Scheme,
    ShareVector,
    access_numbers,
    coalition_report,
    deal,
    make_scheme,
    reconstruct,
)
from .semigroup import (
    ExponentPair,
    HStar,
    exponent_pair,
    gap_count,
    h_star,
    in_semigroup,
    iota,
    leq_partial,
)
from .weights import (
    BoundReport,
    ChainReport,
    GammaSet,
    brute_force_rghw,
    chain_conditions,
    dual_footprint_count,
    dual_semigroup_count,
    footprint_count,
    gamma_set,
    kappa_of_subspace,
    rghw_dual_bound,
    rghw_primary_bound,
    rho_of_subspace,
    semigroup_count,
    staircase_closed_form,
)

__all__ = [name for name in dir() if not name.startswith("_")]
