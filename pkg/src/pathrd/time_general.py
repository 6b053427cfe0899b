"""Minimum completion time with the depot strictly inside the path.

Each route stays on one side of the depot, so a plan interleaves
routes over the two canonical sides.  c[i][j] is the earliest return
with the first i left and first j right customers served; the last
route covered a suffix of one side's served prefix,

    c[i][j] = min( min over w < i of  max(c[w][j], rl[i]) + 2 taul[w+1],
                   min over w < j of  max(c[i][w], rr[j]) + 2 taur[w+1] ),

1-based on the right-hand sides, with ties broken toward the left term
and the smallest w.  The cubic baseline scans both terms per state.

The fast solver plays the 1-D trick once per line: for the left term a
cursor and min-queue per column j (advanced as i grows), for the right
term one per row i.  States released at or before r split off a prefix
whose best candidate is the cursor itself; the queue serves the rest.
Each entry is enqueued and dequeued once, so states cost O(1) amortized
and the whole table O(n_l * n_r).
"""

from dataclasses import dataclass

import numpy as np

from .minqueue import MinQueue
from .solution import LEFT, RIGHT, TIME, Route, Solution

__all__ = ["TimeDp2Trace", "solve_time_2d_cubic", "solve_time_2d_minqueue"]


@dataclass(frozen=True)
class TimeDp2Trace:
    """c[i][j]: best completion serving i left / j right customers;
    pred[i][j]: (side, w) the minimum was taken at, None at the origin."""

    c: list
    pred: list


def _build_solution(inst, c, pred):
    i = inst.left.n
    j = inst.right.n
    rev = []
    while i or j:
        side_name, w = pred[i][j]
        if side_name == LEFT:
            side = inst.left
            dispatch = max(c[w][j], side.r[i - 1])
            rev.append(
                Route(LEFT, w, i - 1, dispatch, 2 * side.tau[w], side.deliveries(w, i - 1))
            )
            i = w
        else:
            side = inst.right
            dispatch = max(c[i][w], side.r[j - 1])
            rev.append(
                Route(RIGHT, w, j - 1, dispatch, 2 * side.tau[w], side.deliveries(w, j - 1))
            )
            j = w
    value = c[inst.left.n][inst.right.n]
    return Solution(TIME, value, tuple(rev[::-1]))


def solve_time_2d_cubic(inst):
    """Reference solver: full scans of both terms at every state."""
    nl = inst.left.n
    nr = inst.right.n
    if nl == 0 and nr == 0:
        return TimeDp2Trace([[0]], [[None]]), Solution(TIME, 0, ())
    arrays = []
    if nl:
        arrays += [np.asarray(inst.left.r), np.asarray(inst.left.tau)]
    if nr:
        arrays += [np.asarray(inst.right.r), np.asarray(inst.right.tau)]
    dt = np.result_type(*arrays)
    rl = np.asarray(inst.left.r, dtype=dt)
    twol = 2 * np.asarray(inst.left.tau, dtype=dt)
    rr = np.asarray(inst.right.r, dtype=dt)
    twor = 2 * np.asarray(inst.right.tau, dtype=dt)
    c = np.zeros((nl + 1, nr + 1), dtype=dt)
    pred = [[None] * (nr + 1) for _ in range(nl + 1)]
    for i in range(nl + 1):
        for j in range(nr + 1):
            if i == 0 and j == 0:
                continue
            best = None
            take = None
            if i >= 1:
                cand = np.maximum(c[:i, j], rl[i - 1]) + twol[:i]
                w = int(cand.argmin())
                best = cand[w]
                take = (LEFT, w)
            if j >= 1:
                cand = np.maximum(c[i, :j], rr[j - 1]) + twor[:j]
                w = int(cand.argmin())
                if best is None or cand[w] < best:
                    best = cand[w]
                    take = (RIGHT, w)
            c[i, j] = best
            pred[i][j] = take
    c = [row for row in c.tolist()]
    return TimeDp2Trace(c, pred), _build_solution(inst, c, pred)


def solve_time_2d_minqueue(inst, check=False):
    """Queue-and-cursor solver; output matches solve_time_2d_cubic.

    check=True re-verifies every cursor against its definition (the
    released states really form a prefix of the column or row), which
    is what the amortized advance silently relies on.
    """
    nl = inst.left.n
    nr = inst.right.n
    rl = inst.left.r
    taul = inst.left.tau
    rr = inst.right.r
    taur = inst.right.tau
    c = [[0] * (nr + 1) for _ in range(nl + 1)]
    pred = [[None] * (nr + 1) for _ in range(nl + 1)]
    # per-column state for the left term; -1 means no released candidate
    kl = [-1] * (nr + 1)
    ql = [MinQueue() for _ in range(nr + 1)]
    for i in range(nl + 1):
        kr = -1
        qr = MinQueue()
        ci = c[i]
        for j in range(nr + 1):
            best = None
            take = None
            if i >= 1:
                ri = rl[i - 1]
                q = ql[j]
                k = kl[j]
                while k < i - 1 and c[k + 1][j] <= ri:
                    k += 1
                    q.dequeue()
                kl[j] = k
                if check:
                    assert all(c[w][j] <= ri for w in range(k + 1))
                    assert all(c[w][j] > ri for w in range(k + 1, i))
                    assert len(q) == (i - 1) - k
                if k >= 0:
                    best = ri + 2 * taul[k]
                    take = (LEFT, k)
                if len(q):
                    a, w = q.find_min()
                    if best is None or a < best:
                        best = a
                        take = (LEFT, w)
            if j >= 1:
                rj = rr[j - 1]
                while kr < j - 1 and ci[kr + 1] <= rj:
                    kr += 1
                    qr.dequeue()
                if check:
                    assert all(ci[w] <= rj for w in range(kr + 1))
                    assert all(ci[w] > rj for w in range(kr + 1, j))
                if kr >= 0:
                    cand = rj + 2 * taur[kr]
                    if best is None or cand < best:
                        best = cand
                        take = (RIGHT, kr)
                if len(qr):
                    a, w = qr.find_min()
                    if best is None or a < best:
                        best = a
                        take = (RIGHT, w)
            if take is not None:
                ci[j] = best
                pred[i][j] = take
            if i < nl:
                ql[j].enqueue((ci[j] + 2 * taul[i], i))
            if j < nr:
                qr.enqueue((ci[j] + 2 * taur[j], j))
    return TimeDp2Trace(c, pred), _build_solution(inst, c, pred)
