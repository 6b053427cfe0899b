import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pathrd import AddressableHeap, DeadHandle, Empty


def test_mode_validation():
    with pytest.raises(ValueError):
        AddressableHeap(mode="median")


def test_min_mode_basics():
    h = AddressableHeap()
    ha = h.insert(5, "a")
    hb = h.insert(2, "b")
    hc = h.insert(9, "c")
    assert len(h) == 3
    key, payload, top = h.peek()
    assert (key, payload) == (2, "b") and top is hb
    assert h.remove(hb) == (2, "b")
    assert h.peek()[:2] == (5, "a")
    assert h.remove(ha) == (5, "a")
    assert h.peek()[2] is hc
    assert len(h) == 1


def test_max_mode_basics():
    h = AddressableHeap(mode="max")
    h.insert(5, "a")
    top = h.insert(9, "c")
    h.insert(2, "b")
    assert h.peek()[:2] == (9, "c")
    h.remove(top)
    assert h.peek()[:2] == (5, "a")


def test_remove_by_handle_deep_in_heap():
    h = AddressableHeap()
    handles = [h.insert(k) for k in range(20)]
    # remove from the middle, never the top
    for k in (7, 13, 4, 18):
        h.remove(handles[k])
    seen = []
    while len(h):
        key, _, top = h.peek()
        seen.append(key)
        h.remove(top)
    assert seen == sorted(set(range(20)) - {7, 13, 4, 18})


def test_dead_handle_rejected():
    h = AddressableHeap()
    ha = h.insert(1)
    h.remove(ha)
    assert not ha.alive
    with pytest.raises(DeadHandle):
        h.remove(ha)


def test_foreign_handle_rejected():
    g = AddressableHeap()
    h = AddressableHeap()
    hg = g.insert(1)
    with pytest.raises(ValueError):
        h.remove(hg)
    with pytest.raises(ValueError):
        h.remove("not a handle")


def test_empty_peek_raises():
    h = AddressableHeap()
    with pytest.raises(Empty):
        h.peek()
    ha = h.insert(3)
    h.remove(ha)
    with pytest.raises(Empty):
        h.peek()


def test_duplicate_keys_all_come_out():
    h = AddressableHeap()
    for _ in range(5):
        h.insert(7, None)
    out = 0
    while len(h):
        key, _, top = h.peek()
        assert key == 7
        h.remove(top)
        out += 1
    assert out == 5


def _run_fuzz(mode, seed, ops):
    rng = random.Random(seed)
    h = AddressableHeap(mode=mode)
    live = {}
    best = max if mode == "max" else min
    serial = 0
    for _ in range(ops):
        r = rng.random()
        if live and (r < 0.35 or len(live) > 300):
            victim = rng.choice(list(live))
            key, payload = h.remove(victim)
            assert (key, payload) == live.pop(victim)
        elif r < 0.9:
            key = rng.randint(0, 25)
            payload = serial
            serial += 1
            handle = h.insert(key, payload)
            assert handle.alive
            live[handle] = (key, payload)
        assert len(h) == len(live)
        if live:
            key, payload, top = h.peek()
            assert key == best(k for k, _ in live.values())
            assert live[top] == (key, payload)


def test_fuzz_min_against_model():
    _run_fuzz("min", 101, 8000)


def test_fuzz_max_against_model():
    _run_fuzz("max", 202, 8000)


class CountingKey:
    __slots__ = ("v",)
    comparisons = 0

    def __init__(self, v):
        self.v = v

    def __lt__(self, other):
        CountingKey.comparisons += 1
        return self.v < other.v

    def __eq__(self, other):
        CountingKey.comparisons += 1
        return self.v == other.v


def test_comparisons_stay_logarithmic():
    rng = random.Random(3)
    h = AddressableHeap()
    live = []
    CountingKey.comparisons = 0
    m = 20000
    for _ in range(m):
        if live and rng.random() < 0.45:
            idx = rng.randrange(len(live))
            live[idx], live[-1] = live[-1], live[idx]
            h.remove(live.pop())
            if len(h):
                h.peek()
        else:
            live.append(h.insert(CountingKey(rng.randint(0, 10**6))))
    assert CountingKey.comparisons <= 6 * m * math.log2(m) + 64


@settings(max_examples=150, deadline=None)
@given(st.lists(st.tuples(st.booleans(), st.integers(0, 9)), max_size=50))
def test_matches_model_on_any_program(program):
    h = AddressableHeap()
    live = {}
    for is_remove, key in program:
        if is_remove and live:
            handle = next(iter(live))
            assert h.remove(handle) == live.pop(handle)
        else:
            handle = h.insert(key, None)
            live[handle] = (key, None)
        assert len(h) == len(live)
        if live:
            assert h.peek()[0] == min(k for k, _ in live.values())
