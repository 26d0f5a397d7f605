"""Exact binomial coefficients in the two conventions the engine needs.

Dimension counts truncate to zero as soon as the top argument drops below
the bottom one.  Euler characteristics instead continue the binomial as a
degree-k polynomial to every integer argument, so they can go negative.
The two conventions agree for non-negative arguments and must never be
substituted for each other elsewhere.
"""

from __future__ import annotations

from math import comb

# Dimensions of section spaces: arbitrary precision, never negative here.
Count = int
# Signed Euler characteristics: arbitrary precision integers.
EulerNumber = int


def binom_trunc(a: int, k: int) -> Count:
    """Binomial coefficient as a dimension count: 0 unless a >= k.

    For a >= k this equals the number of monomials of degree a - k in
    k + 1 variables.  Negative a always yields 0.
    """
    if k < 0:
        raise ValueError(f"lower index must be non-negative, got {k}")
    if a < k:
        return 0
    return comb(a, k)


def binom_poly(a: int, k: int) -> EulerNumber:
    """Binomial coefficient as the degree-k polynomial a(a-1)...(a-k+1)/k!.

    Defined for every integer a.  For a < 0 the value is
    (-1)^k * binom_trunc(k - a - 1, k), which is never zero.
    """
    if k < 0:
        raise ValueError(f"lower index must be non-negative, got {k}")
    if a < 0:
        sign = -1 if k % 2 else 1
        return sign * comb(k - a - 1, k)
    if a < k:
        return 0
    return comb(a, k)
