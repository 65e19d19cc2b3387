"""Exact counting primitives over unbounded ints and rationals.

Everything downstream is exact rational arithmetic; nothing in the
package touches floating point.  Scalars serialize as ``"num/den"``
with the denominator omitted when it is 1.
"""

import math
from fractions import Fraction
from functools import lru_cache


def factorial(n):
    """n! for nonnegative n."""
    if n < 0:
        raise ValueError("factorial of negative integer %d" % n)
    return math.factorial(n)


@lru_cache(maxsize=None)
def double_factorial(n):
    """n!! with the usual empty-product conventions (-1)!! = 0!! = 1."""
    if n < -1:
        raise ValueError("double factorial undefined below -1, got %d" % n)
    if n <= 0:
        return 1
    return n * double_factorial(n - 2)


def multinomial(top, parts):
    """top! / prod(parts!) for nonnegative parts summing to top."""
    parts = tuple(parts)
    if any(p < 0 for p in parts):
        raise ValueError("multinomial parts must be nonnegative")
    if sum(parts) != top:
        raise ValueError(
            "multinomial parts sum to %d, expected %d" % (sum(parts), top)
        )
    out = 1
    rest = top
    for p in parts:
        out *= math.comb(rest, p)
        rest -= p
    return out


def comb_count(pi):
    """(2|pi| + len(pi))! / prod((2*p+1)!!) -- always an exact integer.

    This is the number of linear extensions of a disjoint union of
    comb-shaped posets, one comb on 2*p+1 elements per part p.
    """
    pi = tuple(pi)
    if any(p <= 0 for p in pi):
        raise ValueError("comb sizes must be positive")
    num = factorial(2 * sum(pi) + len(pi))
    den = 1
    for p in pi:
        den *= double_factorial(2 * p + 1)
    if num % den:
        raise ArithmeticError("comb count division is not exact; bad input %r" % (pi,))
    return num // den


def _allowed_fz_part(p):
    # excluded sizes are 5, 8, 11, ...: congruent to 2 mod 3 and at least 5
    return not (p >= 5 and p % 3 == 2)


@lru_cache(maxsize=None)
def fz_count(n):
    """Partitions of n with no part of size 5, 8, 11, ... (2 mod 3, >= 5).

    Zero for negative n, one for n = 0.
    """
    if n < 0:
        return 0
    counts = [1] + [0] * n
    for p in range(1, n + 1):
        if not _allowed_fz_part(p):
            continue
        for m in range(p, n + 1):
            counts[m] += counts[m - p]
    return counts[n]


def format_scalar(x):
    """Render an exact scalar as 'num/den', dropping '/1'."""
    f = Fraction(x)
    if f.denominator == 1:
        return str(f.numerator)
    return "%d/%d" % (f.numerator, f.denominator)


def parse_scalar(s):
    """Inverse of format_scalar."""
    return Fraction(s)
