"""Minimum travel distance under a deadline, depot inside the path.

Backwards dynamic program over pairs of side suffixes.  lam[p][q] is
the latest dispatch such that left customers p.. and right customers
q.. can all be served by the deadline, lam[n_l][n_r] = D.  The next
route serves a block of one side; cutting the left at w costs a route
of 2 taul[p] whose dispatch must also cover the block's last release:

    lam[p][q] = max( max over w in (p, n_l] of  lam[w][q] - 2 taul[p]
                         keeping w with lam[w][q] - rl[w-1] >= 2 taul[p],
                     the symmetric right term ),

absent when both terms come up empty; infeasible iff lam[0][0] is
absent.  Ties prefer the left term, then the smallest w.

The fast solver mirrors the 1-D heap solver per line: each column
carries a max-heap on lam paired with a min-heap on lam - release, and
each row likewise.  Scanning p (and q within a row) downward only
raises the release thresholds 2 taul[p] and 2 taur[q], so entries that
fail one are evicted from both heaps permanently.
"""

from dataclasses import dataclass

import numpy as np

from .errors import Infeasible
from .heaps import AddressableHeap
from .solution import DISTANCE, LEFT, RIGHT, Route, Solution

__all__ = ["DistDp2Trace", "solve_distance_2d_cubic", "solve_distance_2d_heap"]


@dataclass(frozen=True)
class DistDp2Trace:
    """lam[p][q]: latest feasible dispatch for the suffix pair (None when
    absent), lam[n_l][n_r] = deadline; succ[p][q]: (side, w) it came from."""

    lam: list
    succ: list


def _build_solution(inst, lam, succ):
    p = 0
    q = 0
    nl = inst.left.n
    nr = inst.right.n
    routes = []
    while p < nl or q < nr:
        side_name, w = succ[p][q]
        if side_name == LEFT:
            side = inst.left
            routes.append(
                Route(LEFT, p, w - 1, lam[p][q], 2 * side.tau[p], side.deliveries(p, w - 1))
            )
            p = w
        else:
            side = inst.right
            routes.append(
                Route(RIGHT, q, w - 1, lam[p][q], 2 * side.tau[q], side.deliveries(q, w - 1))
            )
            q = w
    value = sum(route.duration for route in routes)
    return Solution(DISTANCE, value, tuple(routes))


def solve_distance_2d_cubic(inst, deadline):
    """Reference solver: scan both successor lines of every state."""
    nl = inst.left.n
    nr = inst.right.n
    if nl == 0 and nr == 0:
        if deadline < 0:
            raise Infeasible(f"deadline {deadline} is before time zero")
        return DistDp2Trace([[deadline]], [[None]]), Solution(DISTANCE, 0, ())
    arrays = [np.asarray(deadline)]
    if nl:
        arrays += [np.asarray(inst.left.r), np.asarray(inst.left.tau)]
    if nr:
        arrays += [np.asarray(inst.right.r), np.asarray(inst.right.tau)]
    dt = np.result_type(*arrays)
    rl = np.asarray(inst.left.r, dtype=dt)
    twol = 2 * np.asarray(inst.left.tau, dtype=dt)
    rr = np.asarray(inst.right.r, dtype=dt)
    twor = 2 * np.asarray(inst.right.tau, dtype=dt)
    lam = np.zeros((nl + 1, nr + 1), dtype=dt)
    present = np.zeros((nl + 1, nr + 1), dtype=bool)
    lam[nl, nr] = deadline
    present[nl, nr] = True
    succ = [[None] * (nr + 1) for _ in range(nl + 1)]
    for p in range(nl, -1, -1):
        for q in range(nr, -1, -1):
            if p == nl and q == nr:
                continue
            best = None
            take = None
            if p < nl:
                col = lam[p + 1 :, q]
                ok = present[p + 1 :, q] & (col - rl[p:] >= twol[p])
                if ok.any():
                    vals = col - twol[p]
                    top = vals[ok].max()
                    w = p + 1 + int(np.flatnonzero(ok & (vals == top))[0])
                    best = top
                    take = (LEFT, w)
            if q < nr:
                row = lam[p, q + 1 :]
                ok = present[p, q + 1 :] & (row - rr[q:] >= twor[q])
                if ok.any():
                    vals = row - twor[q]
                    top = vals[ok].max()
                    if best is None or top > best:
                        best = top
                        take = (RIGHT, q + 1 + int(np.flatnonzero(ok & (vals == top))[0]))
            if take is not None:
                lam[p, q] = best
                present[p, q] = True
                succ[p][q] = take
    if not present[0, 0]:
        raise Infeasible(f"no plan finishes by {deadline}")
    lam_list = [
        [v if here else None for v, here in zip(vrow, hrow)]
        for vrow, hrow in zip(lam.tolist(), present)
    ]
    trace = DistDp2Trace(lam_list, succ)
    return trace, _build_solution(inst, lam_list, succ)


def solve_distance_2d_heap(inst, deadline, check=False):
    """Paired-heap solver; lam table matches solve_distance_2d_cubic.

    check=True asserts every eviction misses the current threshold,
    thresholds never decrease along a column or row, and heap contents
    only ever reference states computed earlier in the sweep.
    """
    nl = inst.left.n
    nr = inst.right.n
    if nl == 0 and nr == 0:
        if deadline < 0:
            raise Infeasible(f"deadline {deadline} is before time zero")
        return DistDp2Trace([[deadline]], [[None]]), Solution(DISTANCE, 0, ())
    rl = inst.left.r
    taul = inst.left.tau
    rr = inst.right.r
    taur = inst.right.tau
    lam = [[None] * (nr + 1) for _ in range(nl + 1)]
    succ = [[None] * (nr + 1) for _ in range(nl + 1)]
    lam[nl][nr] = deadline
    # column heaps serve the left term and live for the whole sweep
    col_lam = [AddressableHeap(mode="max") for _ in range(nr + 1)]
    col_slack = [AddressableHeap(mode="min") for _ in range(nr + 1)]
    if nl >= 1:
        partner = col_lam[nr].insert(deadline, nl)
        col_slack[nr].insert(deadline - rl[nl - 1], partner)
    col_thr = [None] * (nr + 1) if check else None
    for p in range(nl, -1, -1):
        # row heaps serve the right term and last for this row only
        row_lam = AddressableHeap(mode="max")
        row_slack = AddressableHeap(mode="min")
        if p == nl and nr >= 1:
            partner = row_lam.insert(deadline, nr)
            row_slack.insert(deadline - rr[nr - 1], partner)
        row_thr = None
        for q in range(nr, -1, -1):
            if p == nl and q == nr:
                continue
            best = None
            take = None
            if p < nl:
                threshold = 2 * taul[p]
                if check:
                    assert col_thr[q] is None or threshold >= col_thr[q]
                    col_thr[q] = threshold
                heap = col_slack[q]
                while len(heap):
                    slack, stale, handle = heap.peek()
                    if slack >= threshold:
                        break
                    if check:
                        assert slack < threshold
                    heap.remove(handle)
                    col_lam[q].remove(stale)
                if len(col_lam[q]):
                    top, w, _ = col_lam[q].peek()
                    if check:
                        assert w > p
                    best = top - threshold
                    take = (LEFT, w)
            if q < nr:
                threshold = 2 * taur[q]
                if check:
                    assert row_thr is None or threshold >= row_thr
                    row_thr = threshold
                while len(row_slack):
                    slack, stale, handle = row_slack.peek()
                    if slack >= threshold:
                        break
                    if check:
                        assert slack < threshold
                    row_slack.remove(handle)
                    row_lam.remove(stale)
                if len(row_lam):
                    top, w, _ = row_lam.peek()
                    if check:
                        assert w > q
                    cand = top - threshold
                    if best is None or cand > best:
                        best = cand
                        take = (RIGHT, w)
            if take is None:
                continue
            lam[p][q] = best
            succ[p][q] = take
            if p >= 1:
                partner = col_lam[q].insert(best, p)
                col_slack[q].insert(best - rl[p - 1], partner)
            if q >= 1:
                partner = row_lam.insert(best, q)
                row_slack.insert(best - rr[q - 1], partner)
    if lam[0][0] is None:
        raise Infeasible(f"no plan finishes by {deadline}")
    trace = DistDp2Trace(lam, succ)
    return trace, _build_solution(inst, lam, succ)
