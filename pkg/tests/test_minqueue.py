import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pathrd import Empty, MinQueue


def test_empty_queries_raise():
    q = MinQueue()
    with pytest.raises(Empty):
        q.find_min()
    with pytest.raises(Empty):
        q.dequeue()
    assert len(q) == 0


def test_fifo_order_and_min():
    q = MinQueue()
    for x in [5, 3, 8, 3, 9]:
        q.enqueue(x)
    assert q.find_min() == 3
    assert q.dequeue() == 5
    assert q.find_min() == 3
    assert q.dequeue() == 3
    # the duplicate 3 is still inside
    assert q.find_min() == 3
    assert q.dequeue() == 8
    assert q.find_min() == 3
    assert q.dequeue() == 3
    assert q.find_min() == 9
    assert q.dequeue() == 9
    assert len(q) == 0


def test_increasing_then_decreasing():
    q = MinQueue()
    for x in range(10):
        q.enqueue(x)
        assert q.find_min() == 0
    for x in range(10):
        assert q.dequeue() == x
        if len(q):
            assert q.find_min() == x + 1


def test_tuples_order_lexicographically():
    q = MinQueue()
    q.enqueue((4, 2))
    q.enqueue((4, 1))
    q.enqueue((3, 9))
    assert q.find_min() == (3, 9)
    q.dequeue()
    q.dequeue()
    assert q.find_min() == (3, 9)


def test_moves_stay_linear():
    q = MinQueue()
    rng = random.Random(7)
    ops = 0
    for _ in range(5000):
        if len(q) and rng.random() < 0.4:
            q.dequeue()
        else:
            q.enqueue(rng.randint(0, 50))
        ops += 1
        if len(q):
            q.find_min()
    # each element moves through each internal deque at most once
    assert q.moves <= 4 * ops


def test_fuzz_against_list_model():
    rng = random.Random(20260826)
    q = MinQueue()
    model = []
    for _ in range(30000):
        r = rng.random()
        if model and (r < 0.35 or len(model) > 300):
            assert q.dequeue() == model.pop(0)
        elif r < 0.85:
            x = rng.randint(-20, 20)
            q.enqueue(x)
            model.append(x)
        if model:
            assert q.find_min() == min(model)
        else:
            assert len(q) == 0


@settings(max_examples=200, deadline=None)
@given(st.lists(st.one_of(st.integers(-8, 8), st.just("pop")), max_size=60))
def test_matches_model_on_any_program(program):
    q = MinQueue()
    model = []
    for step in program:
        if step == "pop":
            if model:
                assert q.dequeue() == model.pop(0)
            else:
                with pytest.raises(Empty):
                    q.dequeue()
        else:
            q.enqueue(step)
            model.append(step)
        assert len(q) == len(model)
        if model:
            assert q.find_min() == min(model)
