"""Containers for dispatch plans."""

from dataclasses import dataclass

__all__ = ["Route", "Solution", "LEFT", "RIGHT", "TIME", "DISTANCE"]

LEFT = "left"
RIGHT = "right"

TIME = "time"
DISTANCE = "distance"


@dataclass(frozen=True)
class Route:
    """One round trip from the depot.

    lo and hi are 0-based positions into the canonical side arrays,
    inclusive on both ends.  The vehicle leaves at dispatch, serves the
    block, and is back after duration time units.  deliveries lists the
    original vertex labels served, dominated customers included.
    """

    side: str
    lo: int
    hi: int
    dispatch: int | float
    duration: int | float
    deliveries: tuple[int, ...]

    @property
    def completion(self):
        return self.dispatch + self.duration


@dataclass(frozen=True)
class Solution:
    """A full plan: routes in dispatch order plus the objective value."""

    objective: str
    value: int | float
    routes: tuple[Route, ...]
