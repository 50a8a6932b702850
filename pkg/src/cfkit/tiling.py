"""Brute-force square/domino tiling counters.

These are oracles: each function enumerates explicit tilings one by one
and never applies a Fibonacci-style recurrence or any identity it might
be used to check. Size bounds keep the exhaustive enumeration fast.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence

from .errors import BoundExceeded

BOARD_MAX = 25
BRACELET_MAX = 20
STACK_MAX_CELLS = 10
STACK_MAX_HEIGHT = 12


def _tilings(length: int) -> Iterator[tuple[int, ...]]:
    """Yield every tiling of a 1 x length board as a tuple of piece widths."""
    if length == 0:
        yield ()
        return
    for rest in _tilings(length - 1):
        yield (1,) + rest
    if length >= 2:
        for rest in _tilings(length - 2):
            yield (2,) + rest


def count_board(n: int) -> int:
    """Number of square/domino tilings of a board of length n (n = 0 has one: the empty tiling)."""
    if n < 0:
        raise ValueError(f"board length must be >= 0, got {n}")
    if n > BOARD_MAX:
        raise BoundExceeded(f"board enumeration is bounded at {BOARD_MAX}, got {n}")
    return sum(1 for _ in _tilings(n))


def count_bracelet(n: int) -> int:
    """Number of square/domino tilings of a circular board of length n.

    A domino may wrap the boundary between cells n-1 and 0, and the wrapped
    covering counts separately from the unwrapped one (so n = 2 has three
    tilings: two squares, a domino in phase, a domino out of phase).
    n = 0 has two tilings by convention: the empty tiling in each phase.
    """
    if n < 0:
        raise ValueError(f"bracelet length must be >= 0, got {n}")
    if n > BRACELET_MAX:
        raise BoundExceeded(f"bracelet enumeration is bounded at {BRACELET_MAX}, got {n}")
    if n == 0:
        return 2
    total = sum(1 for _ in _tilings(n))
    if n >= 2:
        total += sum(1 for _ in _tilings(n - 2))
    return total


def count_stacked(heights: Sequence[int]) -> int:
    """Weighted tiling count of a board with per-cell stack capacities.

    Every square/domino tiling of the len(heights)-cell board contributes
    the product of heights[i] over its square-covered cells (a square on
    cell i can be stacked heights[i] ways; dominoes cannot be stacked).
    The total equals the continuant of the height vector, i.e. the final
    convergent numerator of the same integer sequence.
    """
    heights = list(heights)
    if not heights:
        raise ValueError("height vector must not be empty")
    if any(h < 1 for h in heights):
        raise ValueError("stack capacities must be >= 1")
    if len(heights) > STACK_MAX_CELLS:
        raise BoundExceeded(f"stacked enumeration is bounded at {STACK_MAX_CELLS} cells")
    if max(heights) > STACK_MAX_HEIGHT:
        raise BoundExceeded(f"stack capacities are bounded at {STACK_MAX_HEIGHT}")

    total = 0
    for tiling in _tilings(len(heights)):
        weight = 1
        cell = 0
        for width in tiling:
            if width == 1:
                weight *= heights[cell]
            cell += width
        total += weight
    return total
