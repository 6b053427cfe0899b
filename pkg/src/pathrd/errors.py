"""Exception types shared across the package."""


class PathrdError(Exception):
    """Base class for errors raised by this package."""


class MalformedDocument(PathrdError):
    """Instance document is not valid JSON or is missing required fields."""


class NotAPath(PathrdError):
    """Instance graph is not a single simple path."""


class UnknownDepot(PathrdError):
    """Depot id does not name a vertex of the instance."""


class NegativeValue(PathrdError):
    """A release date, edge length, or deadline is negative."""


class Empty(PathrdError):
    """Query on an empty queue or heap."""


class DeadHandle(PathrdError):
    """A heap handle was used after its entry was removed."""


class Infeasible(PathrdError):
    """No dispatch plan completes by the deadline."""


class TooLarge(PathrdError):
    """Instance exceeds the exhaustive oracle's size guard."""
