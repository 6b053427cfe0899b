"""Addressable binary heap with handle-based removal.

Entries removed by handle are only marked dead; they stay in the
underlying array until they surface at the top, where peek discards
them.  Each entry is pushed and popped at most once, so any m
operations cost O(m log m) comparisons even though remove itself is
constant time.
"""

import heapq
import itertools

from .errors import DeadHandle, Empty

__all__ = ["AddressableHeap", "HeapHandle"]


class HeapHandle:
    """Ticket for one heap entry, valid from insert until remove."""

    __slots__ = ("key", "payload", "_owner", "_alive")

    def __init__(self, key, payload, owner):
        self.key = key
        self.payload = payload
        self._owner = owner
        self._alive = True

    @property
    def alive(self):
        return self._alive

    def __repr__(self):
        state = "live" if self._alive else "dead"
        return f"HeapHandle(key={self.key!r}, payload={self.payload!r}, {state})"


class AddressableHeap:
    """Binary min- or max-heap over numeric keys with removable entries.

    mode is "min" or "max".  peek returns (key, payload, handle) for the
    extreme live entry; remove takes any live handle and returns its
    (key, payload).  Ties between equal keys break arbitrarily but
    deterministically (insertion order).
    """

    __slots__ = ("_heap", "_live", "_sign", "_seq")

    def __init__(self, mode="min"):
        if mode not in ("min", "max"):
            raise ValueError(f"mode must be 'min' or 'max', got {mode!r}")
        self._heap = []
        self._live = 0
        self._sign = 1 if mode == "min" else -1
        self._seq = itertools.count()

    def __len__(self):
        return self._live

    def insert(self, key, payload=None):
        """Add an entry and return its handle."""
        handle = HeapHandle(key, payload, self)
        ordkey = key if self._sign == 1 else -key
        # seq breaks key ties so handles are never compared
        heapq.heappush(self._heap, (ordkey, next(self._seq), handle))
        self._live += 1
        return handle

    def remove(self, handle):
        """Invalidate the entry behind handle and return (key, payload)."""
        if not isinstance(handle, HeapHandle) or handle._owner is not self:
            raise ValueError("handle does not belong to this heap")
        if not handle._alive:
            raise DeadHandle("entry was already removed")
        handle._alive = False
        self._live -= 1
        return handle.key, handle.payload

    def peek(self):
        """Return (key, payload, handle) for the extreme live entry."""
        if self._live == 0:
            raise Empty("peek on empty heap")
        heap = self._heap
        while not heap[0][2]._alive:
            heapq.heappop(heap)
        handle = heap[0][2]
        return handle.key, handle.payload, handle
