"""Minimum completion time on one side of the depot.

c[i] is the earliest time a vehicle can be back at the depot with the
first i canonical customers served.  The last route picks up customers
j+1..i (1-based): it leaves once the vehicle has returned and customer
i is released, and drives to the farthest passenger and back,

    c[i] = min over j < i of  max(c[j], r[i]) + 2 tau[j+1].

Since tau strictly decreases along the canonical order, candidates with
c[j] <= r[i] are dominated by the largest such j; the rest enter a
sliding window whose minimum a monotone deque serves in O(1) amortized.
That replaces the quadratic scan with one linear pass.  Both solvers
return the same tables; the quadratic one exists as the baseline the
fast one is checked against.
"""

from collections import deque
from dataclasses import dataclass

import numpy as np

from .solution import RIGHT, TIME, Route, Solution

__all__ = ["TimeDpTrace", "solve_time_quadratic", "solve_time_linear"]


@dataclass(frozen=True)
class TimeDpTrace:
    """c[i]: best completion for the first i customers; pred[i]: the j
    the minimum was taken at, ties to the smallest j."""

    c: list
    pred: list


def _build_solution(side, label, c, pred):
    blocks = []
    i = side.n
    while i > 0:
        j = pred[i]
        blocks.append((j, i - 1))
        i = j
    blocks.reverse()
    routes = []
    for lo, hi in blocks:
        dispatch = max(c[lo], side.r[hi])
        routes.append(
            Route(label, lo, hi, dispatch, 2 * side.tau[lo], side.deliveries(lo, hi))
        )
    return Solution(TIME, c[side.n], tuple(routes))


def solve_time_quadratic(side, label=RIGHT):
    """Reference solver: evaluate every predecessor of every state."""
    n = side.n
    if n == 0:
        return TimeDpTrace([0], [0]), Solution(TIME, 0, ())
    r = np.asarray(side.r)
    two_tau = 2 * np.asarray(side.tau)
    c = np.zeros(n + 1, dtype=np.result_type(r, two_tau))
    pred = [0] * (n + 1)
    for i in range(1, n + 1):
        cand = np.maximum(c[:i], r[i - 1]) + two_tau[:i]
        j = int(cand.argmin())
        c[i] = cand[j]
        pred[i] = j
    c = c.tolist()
    return TimeDpTrace(c, pred), _build_solution(side, label, c, pred)


def solve_time_linear(side, label=RIGHT):
    """One-pass solver; output matches solve_time_quadratic exactly."""
    n = side.n
    r = side.r
    tau = side.tau
    c = [0] * (n + 1)
    pred = [0] * (n + 1)
    # cand holds (a_j, j) with a_j = c[j] + 2 tau[j+1] for j in (k, i-1],
    # values nondecreasing front to back; equal values all stay so the
    # front is always the smallest j among minima
    cand = deque()
    k = 0
    for i in range(1, n + 1):
        ri = r[i - 1]
        if i >= 2:
            a = c[i - 1] + 2 * tau[i - 1]
            while cand and cand[-1][0] > a:
                cand.pop()
            cand.append((a, i - 1))
        # grow the released region; its best candidate is always j = k
        # because tau strictly decreases
        while k < i - 1 and c[k + 1] <= ri:
            k += 1
            if cand and cand[0][1] <= k:
                cand.popleft()
        best = ri + 2 * tau[k]
        bj = k
        if cand:
            a, j = cand[0]
            if a < best:
                best = a
                bj = j
        c[i] = best
        pred[i] = bj
    return TimeDpTrace(c, pred), _build_solution(side, label, c, pred)
