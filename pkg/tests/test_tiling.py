import random

import pytest

from cfkit.contfrac import convergents
from cfkit.errors import BoundExceeded
from cfkit.sequences import fib_comb, lucas
from cfkit.tiling import count_board, count_bracelet, count_stacked


def test_board_counts():
    assert count_board(0) == 1
    assert count_board(4) == 5
    assert count_board(10) == 89


def test_board_matches_combinatorial_fibonacci():
    for n in range(23):
        assert count_board(n) == fib_comb(n)


def test_board_bounds():
    with pytest.raises(BoundExceeded):
        count_board(26)
    with pytest.raises(ValueError):
        count_board(-1)


def test_bracelet_counts():
    assert count_bracelet(0) == 2
    assert count_bracelet(2) == 3  # two squares, domino in phase, domino out of phase
    assert count_bracelet(5) == 11


def test_bracelet_matches_lucas():
    for n in range(19):
        assert count_bracelet(n) == lucas(n)


def test_bracelet_bounds():
    with pytest.raises(BoundExceeded):
        count_bracelet(21)


def test_stacked_counts():
    assert count_stacked([2, 3, 7]) == 51
    assert count_stacked([3, 7]) == 22
    for a in range(1, 6):
        assert count_stacked([a]) == a


def test_stacked_matches_convergent_numerator_and_denominator():
    rng = random.Random(1401)
    for _ in range(200):
        heights = [rng.randint(1, 5) for _ in range(rng.randint(1, 8))]
        table = convergents(heights)
        assert count_stacked(heights) == table.p[-1]
        if len(heights) > 1:
            assert count_stacked(heights[1:]) == table.q[-1]


def test_stacked_bounds_and_validation():
    with pytest.raises(BoundExceeded):
        count_stacked([1] * 11)
    with pytest.raises(BoundExceeded):
        count_stacked([13])
    with pytest.raises(ValueError):
        count_stacked([])
    with pytest.raises(ValueError):
        count_stacked([2, 0, 3])
