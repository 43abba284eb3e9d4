import itertools

import pytest
from hypothesis import given, strategies as st

from wincore.game import (
    LassoClass,
    ParityGame,
    classify_colors,
    classify_lasso,
    colors_dominating,
    colors_max_consecutive,
    is_j_dominating,
    max_consecutive_dominating,
    reward_less,
    reward_sorted,
)


def line_game(colors):
    """A path through states with the given colors, last state looping."""
    n = len(colors)
    succ = [[i + 1] for i in range(n - 1)] + [[n - 1]]
    return ParityGame([0] * n, list(colors), succ)


def test_reward_chain():
    assert reward_sorted(0, range(7)) == [5, 3, 1, 0, 2, 4, 6]
    assert reward_less(0, 3, 1)
    for j in (0, 1):
        for v in range(7):
            assert not reward_less(j, v, v)


def test_reward_total_order():
    d = 9
    vals = range(d + 1)
    for j in (0, 1):
        for v, u in itertools.product(vals, vals):
            if v != u:
                assert reward_less(j, v, u) != reward_less(j, u, v)
            assert reward_less(0, v, u) == reward_less(1, u, v)
            for w in vals:
                if reward_less(j, v, u) and reward_less(j, u, w):
                    assert reward_less(j, v, w)


def test_dominating_examples():
    assert colors_dominating([1, 4], 0)
    assert is_j_dominating(line_game([1, 4, 3, 4]), [0, 1, 2, 3], 0)
    assert not colors_dominating([6, 2, 3], 0)
    assert colors_dominating([6, 2, 3], 1)
    with pytest.raises(ValueError):
        is_j_dominating(line_game([1]), [0], 0)
    with pytest.raises(ValueError):
        is_j_dominating(line_game([1, 2, 3]), [0, 2], 0)


def test_max_consecutive_examples():
    assert max_consecutive_dominating(line_game([1, 4, 3, 4, 3]), [0, 1, 2, 3, 4], 0) == 2
    assert colors_max_consecutive([6, 2, 3, 2, 3, 2, 3], 0) == 1
    assert colors_max_consecutive([6, 2, 3, 2, 3, 2, 3], 1) == 3
    assert colors_max_consecutive([5], 0) == 0


def exhaustive_max(colors, j):
    n = len(colors)
    best = 0
    inner = range(1, n)
    for r in range(0, n):
        for cuts in itertools.combinations(inner, r):
            pts = (0,) + cuts
            ok = all(max(colors[a + 1 : b + 1]) % 2 == j for a, b in zip(pts, pts[1:]))
            if ok:
                best = max(best, len(pts) - 1)
    return best


@given(st.lists(st.integers(1, 6), min_size=1, max_size=10), st.integers(0, 1))
def test_max_consecutive_vs_exhaustive(colors, j):
    k = colors_max_consecutive(colors, j)
    assert k == exhaustive_max(colors, j)
    some_prefix = any(colors_dominating(colors[: i + 1], j) for i in range(1, len(colors)))
    assert (k >= 1) == some_prefix


@given(st.lists(st.integers(1, 6), min_size=2, max_size=10))
def test_dominating_exclusive(colors):
    assert colors_dominating(colors, 0) != colors_dominating(colors, 1)


def test_lasso_examples():
    assert classify_colors([2, 3], [2]) == LassoClass.OMEGA_0_ONLY
    assert classify_colors([], [2]) == LassoClass.LAMBDA_0
    assert classify_colors([], [1]) == LassoClass.LAMBDA_1
    assert LassoClass.OMEGA_0_ONLY.winner == 0 and not LassoClass.OMEGA_0_ONLY.dominating


def test_classify_lasso_checks_closing():
    g = ParityGame([0, 0, 0], [2, 3, 2], [[1], [2], [2]])
    assert classify_lasso(g, [0, 1], [2]) == LassoClass.OMEGA_0_ONLY
    with pytest.raises(ValueError):
        classify_lasso(g, [0], [1])
    with pytest.raises(ValueError):
        classify_lasso(g, [0], [])


def naive_lambda(prefix, cycle, j):
    """Lambda_j by definition: parity winner j and infinitely many consecutive
    j-dominating segments from the start. Unroll enough copies of the cycle
    that the segment count keeps growing."""
    if max(cycle) % 2 != j:
        return False
    seq = list(prefix) + list(cycle) * 8
    short = list(prefix) + list(cycle) * 4
    return colors_max_consecutive(seq, j) > colors_max_consecutive(short, j)


@given(st.lists(st.integers(1, 5), max_size=4), st.lists(st.integers(1, 5), min_size=1, max_size=4))
def test_lasso_class_vs_segments(prefix, cycle):
    cls = classify_colors(prefix, cycle)
    assert cls.winner == max(cycle) % 2
    assert cls.dominating == naive_lambda(prefix, cycle, cls.winner)
