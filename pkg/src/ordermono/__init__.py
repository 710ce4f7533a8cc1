"""Monotones, multi-utilities and majorization on finite preordered spaces."""

from .core_order import (
    ElementSet,
    FinitePreorder,
    OrderRelation,
    equivalence_class,
    from_relation_pairs,
    interval_preorder_relate,
    maximal_elements_in,
    quotient,
    relate,
    reverse_relation,
    sample_interval_preorder,
    up_set,
)
from .errors import (
    DimensionMismatchError,
    InfeasibleConstraintError,
    NotMultiUtilityError,
    VerificationError,
)
from .majorization import (
    Dist,
    EnergyFunction,
    GridRow,
    MaxentReport,
    constraint_grid,
    constraint_sample,
    decreasing_rearrangement,
    dirac,
    equal_entropy_incomparable_pair,
    lorenz_utilities,
    majorization_compare,
    maxent_audit,
    maxent_audit_rows,
    order_dense_witness_dim2,
    random_comparable_pair,
    shannon_entropy,
    tensor,
    trumping_check,
    uncertainty_compare,
    uniform,
    upper_dense_witness,
)
from .monotones import (
    DivergenceSide,
    IncreasingFamily,
    MonotoneClass,
    MultiUtility,
    RepresentationReport,
    ValueTable,
    check_separating,
    classify,
    eliminate_noninjective,
    first_divergence,
    geometric_aggregate,
    injective_from_multi_utility,
    injective_multi_utility_from_injective,
    injective_multi_utility_swap,
    is_multi_utility,
    non_injective_set,
    rescale_to_unit,
    separating_family_from_monotone,
    thresholds_family,
    verify_representation,
)
from .separability import (
    DENSITY_KINDS,
    DensityReport,
    density_report,
    greedy_minimal_dense,
    multi_utility_from_dense,
    multi_utility_from_strict_and_upper_dense,
)

__version__ = "0.1.0"
