"""Command-line front end.

Subcommands: ``solve`` runs one algorithm on one instance and writes a
JSON report, ``generate`` writes random instance documents, ``crosscheck``
compares the fast solvers against the baselines (and the exhaustive
oracle when the instance is small enough), ``bench`` emits CSV timings,
and ``validate`` re-checks a report against its instance.

Exit codes: 0 on success, 1 when a distance instance is infeasible or a
report fails validation, 2 on usage errors, 3 on crosscheck mismatches.
"""

import argparse
import json
import os
import random
import sys
import time
from dataclasses import replace

from .distance_extremity import solve_distance_heap, solve_distance_quadratic
from .distance_general import solve_distance_2d_cubic, solve_distance_2d_heap
from .errors import Infeasible, PathrdError
from .instance import (
    GeneralInstance,
    generate_instance,
    parse_instance,
    random_canonical_side,
    split_at_depot,
)
from .oracle import ORACLE_MAX_CUSTOMERS, oracle_distance, oracle_time, validate_solution
from .solution import DISTANCE, LEFT, RIGHT, TIME, Route, Solution
from .time_extremity import solve_time_linear, solve_time_quadratic
from .time_general import solve_time_2d_cubic, solve_time_2d_minqueue

__all__ = ["main"]

BASELINE = "baseline"
FAST = "fast"

# concrete names are accepted as synonyms so "--algo linear" does the
# obvious thing; the report always states the algorithm actually run
_ALGO_GROUP = {
    "baseline": BASELINE,
    "quadratic": BASELINE,
    "cubic": BASELINE,
    "fast": FAST,
    "linear": FAST,
    "minqueue": FAST,
    "heap": FAST,
}

_BENCH_ALGOS = {
    "time_quadratic": (TIME, False, solve_time_quadratic),
    "time_linear": (TIME, False, solve_time_linear),
    "distance_quadratic": (DISTANCE, False, solve_distance_quadratic),
    "distance_heap": (DISTANCE, False, solve_distance_heap),
    "time_2d_cubic": (TIME, True, solve_time_2d_cubic),
    "time_2d_minqueue": (TIME, True, solve_time_2d_minqueue),
    "distance_2d_cubic": (DISTANCE, True, solve_distance_2d_cubic),
    "distance_2d_heap": (DISTANCE, True, solve_distance_2d_heap),
}

BENCH_HEADER = "algo,objective,n_left,n_right,rep,wall_ns,value"


def _number(text):
    """Parse a CLI number, keeping integers exact."""
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None


def _read_instance(path, parser):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path) as fh:
                text = fh.read()
    except OSError as exc:
        parser.error(f"cannot read {path}: {exc}")
    try:
        return parse_instance(text)
    except PathrdError as exc:
        parser.error(f"bad instance {path}: {exc}")


def _pick_solver(inst, objective, group):
    """Choose the concrete algorithm for this instance shape."""
    one_sided = inst.left.n == 0 or inst.right.n == 0
    if one_sided:
        side = inst.left if inst.right.n == 0 else inst.right
        label = LEFT if inst.right.n == 0 else RIGHT
        if objective == TIME:
            op = solve_time_linear if group == FAST else solve_time_quadratic
            name = "time_linear" if group == FAST else "time_quadratic"
            return name, lambda deadline: op(side, label=label)
        op = solve_distance_heap if group == FAST else solve_distance_quadratic
        name = "distance_heap" if group == FAST else "distance_quadratic"
        return name, lambda deadline: op(side, deadline, label=label)
    if objective == TIME:
        op = solve_time_2d_minqueue if group == FAST else solve_time_2d_cubic
        name = "time_2d_minqueue" if group == FAST else "time_2d_cubic"
        return name, lambda deadline: op(inst)
    op = solve_distance_2d_heap if group == FAST else solve_distance_2d_cubic
    name = "distance_2d_heap" if group == FAST else "distance_2d_cubic"
    return name, lambda deadline: op(inst, deadline)


def _route_doc(route):
    return {
        "side": route.side,
        "lo": route.lo,
        "hi": route.hi,
        "dispatch": route.dispatch,
        "duration": route.duration,
        "completion": route.completion,
        "deliveries": list(route.deliveries),
    }


def _solution_from_report(report):
    routes = tuple(
        Route(
            side=item["side"],
            lo=item["lo"],
            hi=item["hi"],
            dispatch=item["dispatch"],
            duration=item["duration"],
            deliveries=tuple(item["deliveries"]),
        )
        for item in report["routes"]
    )
    return Solution(report["objective"], report["value"], routes)


def _emit(text, out_path):
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w") as fh:
            fh.write(text)


def cmd_solve(args):
    raw = _read_instance(args.instance, args.parser)
    inst = split_at_depot(raw)
    deadline = None
    if args.objective == DISTANCE:
        deadline = args.deadline if args.deadline is not None else raw.deadline
        if deadline is None:
            args.parser.error(
                "the distance objective needs --deadline "
                "(or a 'deadline' field in the instance document)"
            )
    name, run = _pick_solver(inst, args.objective, _ALGO_GROUP[args.algo])

    start = time.perf_counter_ns()
    try:
        _, solution = run(deadline)
        status = "optimal"
        value = solution.value
        routes = [_route_doc(route) for route in solution.routes]
    except Infeasible:
        status = "infeasible"
        value = None
        routes = []
    wall_ns = time.perf_counter_ns() - start

    report = {
        "algorithm": name,
        "objective": args.objective,
        "status": status,
        "value": value,
        "routes": routes,
        "wall_ns": wall_ns,
        "instance": {
            "path": args.instance,
            "customers": raw.n_customers,
            "depot": raw.depot,
            "n_left": inst.left.n,
            "n_right": inst.right.n,
        },
    }
    if args.objective == DISTANCE:
        report["deadline"] = deadline
    _emit(json.dumps(report, sort_keys=True, indent=2) + "\n", args.out)
    if args.out is not None:
        print(f"{status}: value {value} ({name}), report in {args.out}")
    return 0 if status == "optimal" else 1


def _feasible_deadline(raw, rng):
    """A deadline every solver can meet: dispatch one route per side after
    the last release, plus random slack."""
    inst = split_at_depot(raw)
    r_max = max(raw.release.values(), default=0)
    base = r_max
    for side in (inst.left, inst.right):
        if side.n:
            base += 2 * side.tau[0]
    return base + rng.randint(0, max(base, 10))


def cmd_generate(args):
    if args.count > 1 and args.out is None:
        args.parser.error("--out DIR is required when --count exceeds 1")
    rng = random.Random(args.seed)
    docs = []
    for _ in range(args.count):
        raw = generate_instance(
            args.left, args.right, args.max_edge, args.max_release, rng.randrange(2**32)
        )
        raw = replace(raw, deadline=_feasible_deadline(raw, rng))
        docs.append(json.dumps(raw.to_document(), sort_keys=True, indent=2) + "\n")
    if args.out is None:
        sys.stdout.write(docs[0])
        return 0
    os.makedirs(args.out, exist_ok=True)
    for i, text in enumerate(docs):
        with open(os.path.join(args.out, f"instance_{i:04d}.json"), "w") as fh:
            fh.write(text)
    print(f"wrote {args.count} instances to {args.out}")
    return 0


def _crosscheck_time(inst):
    """Run every applicable time solver; returns (value, mismatch messages)."""
    runs = [
        ("time_2d_cubic", solve_time_2d_cubic(inst)),
        ("time_2d_minqueue", solve_time_2d_minqueue(inst)),
    ]
    if inst.left.n == 0 or inst.right.n == 0:
        side = inst.left if inst.right.n == 0 else inst.right
        label = LEFT if inst.right.n == 0 else RIGHT
        runs.append(("time_quadratic", solve_time_quadratic(side, label=label)))
        runs.append(("time_linear", solve_time_linear(side, label=label)))
    problems = []
    reference = runs[0][1][1].value
    for name, (_, solution) in runs:
        if solution.value != reference:
            problems.append(f"{name} value {solution.value} != {reference}")
        bad = validate_solution(inst, solution)
        problems.extend(f"{name} witness: {v.kind}: {v.detail}" for v in bad)
    if inst.left.n + inst.right.n <= ORACLE_MAX_CUSTOMERS:
        expect = oracle_time(inst).value
        if reference != expect:
            problems.append(f"time value {reference} != oracle {expect}")
    return reference, problems


def _crosscheck_distance(inst, deadline):
    verdicts = {}
    problems = []
    runs = [
        ("distance_2d_cubic", lambda: solve_distance_2d_cubic(inst, deadline)),
        ("distance_2d_heap", lambda: solve_distance_2d_heap(inst, deadline)),
    ]
    if inst.left.n == 0 or inst.right.n == 0:
        side = inst.left if inst.right.n == 0 else inst.right
        label = LEFT if inst.right.n == 0 else RIGHT
        runs.append(("distance_quadratic", lambda: solve_distance_quadratic(side, deadline, label=label)))
        runs.append(("distance_heap", lambda: solve_distance_heap(side, deadline, label=label)))
    for name, run in runs:
        try:
            _, solution = run()
            verdicts[name] = solution.value
            bad = validate_solution(inst, solution, deadline=deadline)
            problems.extend(f"{name} witness: {v.kind}: {v.detail}" for v in bad)
        except Infeasible:
            verdicts[name] = None
    if len(set(verdicts.values())) > 1:
        problems.append(f"deadline {deadline}: disagreement {verdicts}")
    reference = next(iter(verdicts.values()))
    if inst.left.n + inst.right.n <= ORACLE_MAX_CUSTOMERS:
        expect = oracle_distance(inst, deadline).value
        if reference != expect:
            problems.append(f"deadline {deadline}: value {reference} != oracle {expect}")
    return problems


def cmd_crosscheck(args):
    rng = random.Random(args.seed)
    mismatches = 0
    for _ in range(args.count):
        total = rng.randint(1, args.max_n)
        n_left = rng.randint(0, total)
        seed = rng.randrange(2**32)
        raw = generate_instance(n_left, total - n_left, args.max_edge, args.max_release, seed)
        inst = split_at_depot(raw)
        problems = []
        makespan = None
        if args.objective in ("time", "both"):
            makespan, problems = _crosscheck_time(inst)
        if args.objective in ("distance", "both"):
            if makespan is None:
                makespan = solve_time_2d_cubic(inst)[1].value
            # span infeasible through slack around the optimal makespan
            for deadline in (makespan - 1, makespan, makespan + rng.randint(1, makespan + 10)):
                problems.extend(_crosscheck_distance(inst, deadline))
        if problems:
            mismatches += 1
            print(f"mismatch on instance seed {seed}:", file=sys.stderr)
            for line in problems:
                print(f"  {line}", file=sys.stderr)
            print(f"  document: {json.dumps(raw.to_document(), sort_keys=True)}", file=sys.stderr)
    print(f"checked {args.count} instances: {mismatches} mismatches")
    return 3 if mismatches else 0


def _bench_case(algo, size, seed):
    """Build the instance (and deadline, for distance) one bench run needs."""
    objective, general, op = _BENCH_ALGOS[algo]
    if general:
        inst = GeneralInstance(
            random_canonical_side(size, seed), random_canonical_side(size, seed + 1)
        )
        n_left = n_right = size
        if objective == DISTANCE:
            deadline = solve_time_2d_minqueue(inst)[1].value
            return n_left, n_right, lambda: op(inst, deadline)
        return n_left, n_right, lambda: op(inst)
    side = random_canonical_side(size, seed)
    n_left, n_right = 0, size
    if objective == DISTANCE:
        deadline = solve_time_linear(side)[1].value
        return n_left, n_right, lambda: op(side, deadline)
    return n_left, n_right, lambda: op(side)


def cmd_bench(args):
    sizes = []
    for token in args.sizes.split(","):
        token = token.strip()
        if token:
            sizes.append(int(float(token)))
    if not sizes:
        args.parser.error("--sizes needs at least one value")
    objective = _BENCH_ALGOS[args.algo][0]
    rows = [BENCH_HEADER]
    for size in sizes:
        for rep in range(args.reps):
            seed = args.seed * 1_000_003 + size * 1_009 + 2 * rep
            n_left, n_right, run = _bench_case(args.algo, size, seed)
            start = time.perf_counter_ns()
            _, solution = run()
            wall_ns = time.perf_counter_ns() - start
            rows.append(
                f"{args.algo},{objective},{n_left},{n_right},{rep},{wall_ns},{solution.value}"
            )
    _emit("\n".join(rows) + "\n", args.csv)
    return 0


def cmd_validate(args):
    raw = _read_instance(args.instance, args.parser)
    inst = split_at_depot(raw)
    try:
        with open(args.solution) as fh:
            report = json.load(fh)
        if report.get("status") == "infeasible":
            print("report declares the instance infeasible; nothing to check")
            return 0
        solution = _solution_from_report(report)
    except (OSError, ValueError, KeyError, TypeError, AttributeError) as exc:
        args.parser.error(f"bad solution file {args.solution}: {exc!r}")
    deadline = args.deadline
    if deadline is None:
        deadline = report.get("deadline")
    if deadline is None and solution.objective == DISTANCE:
        deadline = raw.deadline
    violations = validate_solution(inst, solution, deadline=deadline)
    for violation in violations:
        print(f"{violation.kind}: {violation.detail}", file=sys.stderr)
    print(f"{len(violations)} violations")
    return 1 if violations else 0


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="pathrd",
        description="Exact solvers for delivery routing on a path with release dates.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("solve", help="solve one instance and write a JSON report")
    p.add_argument("instance", help="instance JSON file, or - for stdin")
    p.add_argument("--objective", choices=(TIME, DISTANCE), required=True)
    p.add_argument("--algo", choices=sorted(_ALGO_GROUP), default=FAST,
                   help="solver family; concrete names map to their family")
    p.add_argument("--deadline", type=_number, default=None,
                   help="deadline for the distance objective (overrides the document)")
    p.add_argument("--out", default=None, help="write the report here instead of stdout")
    p.set_defaults(func=cmd_solve, parser=p)

    p = subs.add_parser("generate", help="write random instance documents")
    p.add_argument("--left", type=int, default=5, help="customers left of the depot")
    p.add_argument("--right", type=int, default=5, help="customers right of the depot")
    p.add_argument("--max-edge", type=int, default=10)
    p.add_argument("--max-release", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--out", default=None, help="directory for the documents; stdout when --count is 1")
    p.set_defaults(func=cmd_generate, parser=p)

    p = subs.add_parser("crosscheck", help="compare fast solvers, baselines, and oracle")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--max-n", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--objective", choices=(TIME, DISTANCE, "both"), default="both")
    p.add_argument("--max-edge", type=int, default=10)
    p.add_argument("--max-release", type=int, default=50)
    p.set_defaults(func=cmd_crosscheck, parser=p)

    p = subs.add_parser("bench", help="time one algorithm across instance sizes, CSV out")
    p.add_argument("--algo", choices=sorted(_BENCH_ALGOS), required=True)
    p.add_argument("--sizes", required=True, help="comma-separated, e.g. 1e3,1e4,1e5")
    p.add_argument("--reps", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--csv", default=None, help="write CSV here instead of stdout")
    p.set_defaults(func=cmd_bench, parser=p)

    p = subs.add_parser("validate", help="re-check a solve report against its instance")
    p.add_argument("--instance", required=True)
    p.add_argument("--solution", required=True, help="report written by solve")
    p.add_argument("--deadline", type=_number, default=None)
    p.set_defaults(func=cmd_validate, parser=p)

    return parser


def main(argv=None):
    args = _build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
