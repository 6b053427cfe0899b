"""Exact solvers for the traveling salesman problem with release dates on paths."""

from .errors import (
    DeadHandle,
    Empty,
    Infeasible,
    MalformedDocument,
    NegativeValue,
    NotAPath,
    PathrdError,
    TooLarge,
    UnknownDepot,
)
from .distance_extremity import DistDpTrace, solve_distance_heap, solve_distance_quadratic
from .distance_general import DistDp2Trace, solve_distance_2d_cubic, solve_distance_2d_heap
from .heaps import AddressableHeap, HeapHandle
from .instance import (
    EMPTY_SIDE,
    CanonicalSide,
    GeneralInstance,
    RawPathInstance,
    canonicalize_side,
    distances_from_depot,
    generate_instance,
    parse_instance,
    random_canonical_side,
    split_at_depot,
)
from .minqueue import MinQueue
from .oracle import (
    ORACLE_MAX_CUSTOMERS,
    OracleResult,
    Violation,
    oracle_distance,
    oracle_time,
    schedule_min_makespan,
    validate_solution,
)
from .solution import DISTANCE, LEFT, RIGHT, TIME, Route, Solution
from .time_extremity import TimeDpTrace, solve_time_linear, solve_time_quadratic
from .time_general import TimeDp2Trace, solve_time_2d_cubic, solve_time_2d_minqueue

__version__ = "0.1.0"
