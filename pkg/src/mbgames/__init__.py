"""Exact solvers for Maker-Breaker graph colouring games."""

from .graphs import (
    CapacityError,
    ColourComponents,
    Graph,
    ParseError,
    identity_ordering,
    iter_graph6,
    parse_edge_list,
    parse_graph6,
    to_edge_list,
    to_graph6,
    validate_ordering,
)
from .rules import (
    GameSpec,
    IllegalMoveError,
    Move,
    Player,
    Position,
    RulesError,
    Status,
    Variant,
    apply,
    canonical_key,
    initial_position,
    legal_moves,
    status,
    to_move,
)
from .solver import (
    BudgetExceededError,
    ResourceLimitError,
    SolveResult,
    Solver,
    StrategyOracle,
    best_move,
    naive_solve,
    principal_variation,
    solve,
)
from .parameters import (
    ParameterReport,
    ParameterValue,
    WinProfile,
    monotonicity_violations,
    parameter_report,
    win_profile,
)
from .families import (
    OrderedGraph,
    complete,
    cycle,
    edgeless,
    fig3_graph,
    fig4_graph,
    h_r,
    path,
    standard,
    star,
    theorem14_graph,
)
from .imagination import (
    AgentError,
    ConcedeError,
    ImaginationState,
    InvariantViolation,
    SolverAgent,
    StrategyAgent,
    TransformedBreakerAgent,
    VerificationResult,
    solver_strategy,
    transform_breaker,
    verify_agent_wins,
)
from .search import (
    ChiGLessThanChiCg,
    ColCgEdgeNonMonotone,
    Hit,
    NonMonotoneProfile,
    ParameterEquals,
    ScanReport,
    canonical_form,
    enumerate_graphs,
    scan,
)

__version__ = "0.1.0"
