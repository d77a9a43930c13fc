"""Nash equilibria and minimax equality via projections and normal cones."""
from importlib import resources

from .errors import (
    ConfigError,
    DimensionError,
    DomainError,
    FeasibilityError,
    GameError,
    GridError,
    NonConvergence,
    ParseError,
    SizeError,
)
from .game import (
    BimatrixGame,
    Certificate,
    CertificateKind,
    JointStrategy,
    Method,
    ZeroSumGame,
    check_nash,
    check_saddle,
    payoff_u1,
    payoff_u2,
)
from .gamefile import parse_game, serialize_game, serialize_result
from .geometry import (
    Ball,
    Box,
    ConvexSet,
    ProductSet,
    Simplex,
    as_vec,
    check_stationarity,
    distance,
    normal_cone_check,
    project,
    simplex_grid,
    variational_check,
)
from .minimax import (
    GridFunction,
    Infeasible,
    Witness,
    dual_witness,
    extract_saddle,
    minimax_gap_bilinear,
    weak_duality_gap,
)
from .oracle import (
    Equilibrium,
    EquilibriumList,
    SupportPair,
    enumerate_equilibria,
    grid_nash_check,
    zero_sum_value,
)
from .solvers import (
    Player,
    SolveResult,
    SolverConfig,
    best_response,
    duality_gap,
    nash_residual,
    phi_map,
    solve_bimatrix_heuristic,
    solve_zero_sum,
)

FIXTURES = ("rnd", "pennies", "diag")


def fixture_path(name):
    """Filesystem path of a bundled game file (``rnd``, ``pennies`` or ``diag``)."""
    return resources.files(__name__) / "fixtures" / f"{name}.game"


def load_fixture(name):
    return parse_game(fixture_path(name).read_bytes())
