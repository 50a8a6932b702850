"""Integer sequence generators: Fibonacci, Lucas and their relatives.

Index conventions are the whole game here, so each generator states its
seeds and its negative-index rule explicitly. Everything is computed by
the plain linear recurrence on Python ints; the non-negative prefixes are
memoised because identity sweeps hit the same indices over and over.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import EvenOrder, NegativeIndex


@lru_cache(maxsize=None)
def _fib_nonneg(n: int) -> int:
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


@lru_cache(maxsize=None)
def _lucas_nonneg(n: int) -> int:
    a, b = 2, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def fib(n: int) -> int:
    """Classical Fibonacci F_n (F_0 = 0, F_1 = 1), F_{-n} = (-1)^(n+1) F_n."""
    if n >= 0:
        return _fib_nonneg(n)
    value = _fib_nonneg(-n)
    return value if (-n) % 2 == 1 else -value


def fib_comb(n: int) -> int:
    """Tiling-count Fibonacci f_n (f_0 = 1), defined only for n >= 0.

    f_n counts the square/domino tilings of a board of length n and
    equals fib(n + 1).
    """
    if n < 0:
        raise NegativeIndex(f"f_n is a tiling count, undefined for n = {n}")
    return _fib_nonneg(n + 1)


def lucas(n: int) -> int:
    """Lucas numbers L_n (L_0 = 2, L_1 = 1), L_{-n} = (-1)^n L_n."""
    if n >= 0:
        return _lucas_nonneg(n)
    value = _lucas_nonneg(-n)
    return value if (-n) % 2 == 0 else -value


@lru_cache(maxsize=None)
def lucas_swapped(n: int) -> int:
    """Reordered Lucas sequence l_n = 1, 2, 3, 4, 7, 11, ...

    Seeds l_0..l_3 = 1, 2, 3, 4 (the first two Lucas values swapped, which
    makes l_3 = 4 irregular: l_1 + l_2 = 5); the recurrence applies from
    n = 4 on. Negative indices are clamped to 0.
    """
    if n < 0:
        return 0
    if n < 4:
        return (1, 2, 3, 4)[n]
    a, b = 3, 4
    for _ in range(n - 3):
        a, b = b, a + b
    return b


def gibonacci(k: int, n: int) -> int:
    """Fibonacci-recurrence sequence G with seeds G_0 = k, G_1 = 1."""
    if n < 0:
        raise NegativeIndex(f"G is defined for n >= 0, got {n}")
    a, b = k, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def gibonacci_closed(k: int, n: int) -> int:
    """Closed form fib(n) + k*fib(n-1) for gibonacci(k, n); n >= 0."""
    if n < 0:
        raise NegativeIndex(f"G is defined for n >= 0, got {n}")
    return fib(n) + k * fib(n - 1)


def scaled_fib(t: int, n: int) -> int:
    """Scaled Fibonacci F_{t*n} / F_t for odd t >= 1; always an integer.

    These are the convergent numerators of the uniform continued
    fractions [L_t, L_t, ...]: the family satisfies
    b_{n+1} = lucas(t)*b_n + b_{n-1}.
    """
    if t < 1 or t % 2 == 0:
        raise EvenOrder(f"order must be odd and positive, got {t}")
    if n < 0:
        raise NegativeIndex(f"scaled Fibonacci is defined for n >= 0, got {n}")
    value, rem = divmod(fib(t * n), fib(t))
    assert rem == 0
    return value


def lucas_odd_index_of(c: int) -> int | None:
    """The odd t with lucas(t) = c, or None if c is not an odd-index Lucas number.

    Odd-index Lucas numbers are strictly increasing (1, 4, 11, 29, 76, ...),
    so the scan stops as soon as they pass c.
    """
    if c < 1:
        raise ValueError(f"expected c >= 1, got {c}")
    t = 1
    while True:
        value = lucas(t)
        if value == c:
            return t
        if value > c:
            return None
        t += 2
