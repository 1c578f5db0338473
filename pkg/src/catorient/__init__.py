"""Antimagic orientations of subdivided caterpillars.

Construct an orientation plus edge labeling whose oriented vertex sums are
pairwise distinct, verify any labeling independently, cross-check against a
brute-force oracle at tiny sizes, and sweep whole instance families.
"""

from .construct import (
    BRANCH_LAST_BIG,
    BRANCH_LAST_HIGH,
    BRANCH_LAST_LOW,
    BRANCH_SINGLE_HIGH,
    BRANCH_SINGLE_PARITY,
    BRANCH_WINDOW_FIRST,
    BRANCH_WINDOW_LATER,
    ConstructionTrace,
    FirstEdgeLabels,
    LegAssignment,
    ParityFix,
    apply_parity_fix,
    assemble_orientation,
    assign_first_edge_labels,
    choose_leg_patterns,
    construct,
    construct_single_leg,
)
from .errors import (
    BudgetExceededError,
    CatorientError,
    ConstructionError,
    FormatError,
    IncompleteLabelingError,
    InstanceTooLargeError,
    InvalidSpecError,
    SearchExhaustedError,
    UnsupportedShapeError,
)
from .io import (
    export_dot,
    export_json,
    instance_to_json,
    parse_instance,
    parse_result,
)
from .legs import (
    PatternKind,
    closed_form_internal_sum,
    closed_form_leaf_sum,
    label_set,
    orient_leg,
    pattern_labels,
    positive_internal_parity,
)
from .model import (
    BACKWARD,
    FORWARD,
    CaterpillarSpec,
    DuplicateSum,
    EdgeRef,
    Joint,
    LabeledOrientation,
    NotBijection,
    VertexRef,
    all_vertex_sums,
    edge_count,
    joint_profile,
    verify_antimagic,
    vertex_sum,
)
from .oracle import (
    BUDGET_EXCEEDED,
    FOUND,
    NOT_FOUND,
    BruteForceResult,
    SearchBudget,
    brute_force_antimagic,
    canonical_orientation,
    enumerate_all_solutions,
    enumerate_specs,
    oracle_accepts,
)
from .spine import (
    DEFAULT_NODE_LIMIT,
    SpinePlan,
    exhaustive_spine_search,
    label_spine,
    spine_vertex_sums,
    verify_spine_plan,
)
from .sweep import SweepReport, SweepRow, report_to_csv, report_to_json, run_sweep

__version__ = "0.1.0"

__all__ = [
    "BACKWARD",
    "BRANCH_LAST_BIG",
    "BRANCH_LAST_HIGH",
    "BRANCH_LAST_LOW",
    "BRANCH_SINGLE_HIGH",
    "BRANCH_SINGLE_PARITY",
    "BRANCH_WINDOW_FIRST",
    "BRANCH_WINDOW_LATER",
    "BUDGET_EXCEEDED",
    "BruteForceResult",
    "BudgetExceededError",
    "CaterpillarSpec",
    "CatorientError",
    "ConstructionError",
    "ConstructionTrace",
    "DEFAULT_NODE_LIMIT",
    "DuplicateSum",
    "EdgeRef",
    "FORWARD",
    "FOUND",
    "FirstEdgeLabels",
    "FormatError",
    "IncompleteLabelingError",
    "InstanceTooLargeError",
    "InvalidSpecError",
    "Joint",
    "LabeledOrientation",
    "LegAssignment",
    "NOT_FOUND",
    "NotBijection",
    "ParityFix",
    "PatternKind",
    "SearchBudget",
    "SearchExhaustedError",
    "SpinePlan",
    "SweepReport",
    "SweepRow",
    "UnsupportedShapeError",
    "VertexRef",
    "all_vertex_sums",
    "apply_parity_fix",
    "assemble_orientation",
    "assign_first_edge_labels",
    "brute_force_antimagic",
    "canonical_orientation",
    "choose_leg_patterns",
    "closed_form_internal_sum",
    "closed_form_leaf_sum",
    "construct",
    "construct_single_leg",
    "edge_count",
    "enumerate_all_solutions",
    "enumerate_specs",
    "exhaustive_spine_search",
    "export_dot",
    "export_json",
    "instance_to_json",
    "joint_profile",
    "label_set",
    "label_spine",
    "orient_leg",
    "oracle_accepts",
    "parse_instance",
    "parse_result",
    "pattern_labels",
    "positive_internal_parity",
    "report_to_csv",
    "report_to_json",
    "run_sweep",
    "spine_vertex_sums",
    "verify_antimagic",
    "verify_spine_plan",
    "vertex_sum",
]
