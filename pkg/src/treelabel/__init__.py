"""Distance-three linear and cyclic labellings of finite trees."""

from .bounds import (
    BoundsReport,
    lambda_bounds,
    lambda_family_exact,
    sandwich_inequalities,
    sigma_bounds,
    sigma_family_exact,
)
from .cyclic import (
    label_cyclic_auto,
    label_cyclic_depth2,
    label_cyclic_h11,
    label_cyclic_large,
)
from .labelling import (
    CYCLIC,
    LINEAR,
    CircularInterval,
    EleganceCertificate,
    Labelling,
    PSet,
    SeparationParams,
    Violation,
    check_elegance,
    cyclic_distance,
    is_super_elegant,
    validate,
)
from .linear import ConstructionResult, label_linear, label_linear_depth2, label_linear_depth3
from .solver import (
    BudgetExceeded,
    OracleResult,
    SolverConfig,
    exact_lambda,
    exact_sigma,
    feasibility,
)
from .trees import (
    COMPLETE_DENSE,
    COMPLETE_MARY,
    REGULAR_DENSE,
    REGULAR_SUBTREE,
    FamilySpec,
    RootedTree,
    TreeFormatError,
    TreeStats,
    build_family,
    dist3_neighborhood,
    has_dense_depth2_subtree,
    parse_tree,
    random_tree,
    reroot,
    serialize_tree,
    tree_stats,
)
from .verify import VerifyGrid, VerifyReport, VerifyRow, run_verify

__version__ = "0.1.0"
