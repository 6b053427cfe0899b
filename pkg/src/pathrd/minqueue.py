"""FIFO queue with constant-time minimum queries.

Alongside the plain FIFO order the queue keeps a second deque of
candidate minima: elements that are still smaller than everything
enqueued after them.  The candidate deque is nonincreasing from back to
front, so its head is always the minimum of the live window.  Every
element enters and leaves each deque at most once, which keeps any
sequence of m operations at O(m) internal moves overall.
"""

from collections import deque

from .errors import Empty

__all__ = ["MinQueue"]


class MinQueue:
    """Queue of totally ordered values supporting enqueue, dequeue, find_min."""

    __slots__ = ("_values", "_cand", "_moves")

    def __init__(self):
        self._values = deque()
        self._cand = deque()
        self._moves = 0

    def __len__(self):
        return len(self._values)

    @property
    def moves(self):
        """Count of internal element moves since construction."""
        return self._moves

    def enqueue(self, value):
        """Append value at the back."""
        self._values.append(value)
        self._moves += 1
        cand = self._cand
        # values dominated by the newcomer can never be the minimum again
        while cand and cand[-1] > value:
            cand.pop()
            self._moves += 1
        cand.append(value)
        self._moves += 1

    def dequeue(self):
        """Remove and return the front value."""
        if not self._values:
            raise Empty("dequeue on empty queue")
        value = self._values.popleft()
        self._moves += 1
        # equal elements keep their own candidate entries, so one pop per match
        if self._cand and self._cand[0] == value:
            self._cand.popleft()
            self._moves += 1
        return value

    def find_min(self):
        """Return the smallest value currently in the queue."""
        if not self._values:
            raise Empty("find_min on empty queue")
        return self._cand[0]
