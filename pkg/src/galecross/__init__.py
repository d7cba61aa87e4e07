"""Exact rational toolkit for Gale diagrams, simplex crossings, and
origin-hyperplane separations of point configurations."""

from .configs import (
    LabeledPoint,
    PointConfig,
    SimplexPair,
    find_degenerate_subset,
    is_general_position,
    lift_odd,
    moment_curve_config,
    random_config,
)
from .crossing import (
    CrossingCount,
    CrossingWitness,
    ExtensionResult,
    count_crossing_pairs,
    extend_crossing,
    simplices_cross,
    vkf_find,
)
from .errors import (
    GalecrossError,
    InvalidInputError,
    RetryLimitError,
    SearchIncompleteError,
    TheoremViolationError,
)
from .gale import (
    GaleDiagram,
    LinearSeparation,
    gale_transform,
    is_realizable,
    separation_classifies,
    separation_to_crossing,
    verify_duality,
    verify_spanning,
)
from .separations import (
    HamSandwichInstance,
    ScheduleStep,
    ScheduleTrace,
    enumerate_separations,
    ham_sandwich_cut,
    ham_sandwich_cut_traced,
    schedule_blocks,
    schedule_eight,
)
from .verify import (
    BoundReport,
    VerificationReport,
    bound_report,
    verify_bijection,
    verify_eight_points,
    verify_planar_constant,
    verify_position_duality,
    verify_schedule_pipeline,
    verify_vkf,
)

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "CrossingCount",
    "CrossingWitness",
    "ExtensionResult",
    "GaleDiagram",
    "GalecrossError",
    "HamSandwichInstance",
    "InvalidInputError",
    "LabeledPoint",
    "LinearSeparation",
    "PointConfig",
    "RetryLimitError",
    "ScheduleStep",
    "ScheduleTrace",
    "SearchIncompleteError",
    "SimplexPair",
    "TheoremViolationError",
    "VerificationReport",
    "bound_report",
    "count_crossing_pairs",
    "enumerate_separations",
    "extend_crossing",
    "find_degenerate_subset",
    "gale_transform",
    "ham_sandwich_cut",
    "ham_sandwich_cut_traced",
    "is_general_position",
    "is_realizable",
    "lift_odd",
    "moment_curve_config",
    "random_config",
    "schedule_blocks",
    "schedule_eight",
    "separation_classifies",
    "separation_to_crossing",
    "simplices_cross",
    "verify_bijection",
    "verify_duality",
    "verify_eight_points",
    "verify_planar_constant",
    "verify_position_duality",
    "verify_schedule_pipeline",
    "verify_spanning",
    "verify_vkf",
    "vkf_find",
]
