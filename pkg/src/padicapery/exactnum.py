"""Exact rational plumbing: p-adic valuations, digit expansions, size helpers.

Rationals are carried by `fractions.Fraction` throughout the package; it
normalises on construction (reduced form, positive denominator, 0 == 0/1),
which is exactly the representation contract the rest of the code relies on.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce

__all__ = [
    "INFINITY",
    "is_prime",
    "vp",
    "padic_digits",
    "lcm_upto",
    "log_size",
]

#: Valuation of zero.  Compares correctly against every integer valuation.
INFINITY = math.inf


def is_prime(p: int) -> bool:
    """Trial-division primality check; the moduli used here are tiny."""
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def _require_prime(p: int) -> None:
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"p must be a prime integer, got {p!r}")


def _int_valuation(n: int, p: int) -> int:
    # n must be nonzero
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def vp(x: Fraction | int, p: int):
    """p-adic valuation of a rational.

    Returns the integer v with x = p**v * (unit), and INFINITY iff x == 0,
    so that vp(x*y) = vp(x) + vp(y) holds without special cases.
    """
    _require_prime(p)
    x = Fraction(x)
    if x == 0:
        return INFINITY
    return _int_valuation(x.numerator, p) - _int_valuation(x.denominator, p)


def padic_digits(x: Fraction | int, p: int, count: int) -> list[tuple[int, int]]:
    """First `count` nonzero p-adic digits of x as (exponent, digit) pairs.

    Exponents are strictly increasing and digits lie in 1..p-1; summing
    digit * p**exponent over the list reproduces x to p-adic order beyond the
    last listed exponent.  A terminating expansion may return fewer pairs.

    >>> padic_digits(Fraction(1, 3), 2, 3)
    [(0, 1), (1, 1), (3, 1)]
    """
    _require_prime(p)
    if count < 1:
        raise ValueError("count must be positive")
    x = Fraction(x)
    out: list[tuple[int, int]] = []
    while x != 0 and len(out) < count:
        v = vp(x, p)
        unit = x / Fraction(p) ** v
        # unit is a p-adic unit, so its residue mod p is invertible
        d = unit.numerator * pow(unit.denominator, -1, p) % p
        out.append((v, d))
        x -= d * Fraction(p) ** v
    return out


def lcm_upto(n: int) -> int:
    """lcm(1, 2, ..., n); the denominator-clearing factor for approximant rows."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return reduce(math.lcm, range(2, n + 1), 1)


def _log_int(n: int) -> float:
    # Natural log of a positive integer, safe far beyond float overflow.
    if n.bit_length() <= 512:
        return math.log(n)
    shift = n.bit_length() - 64
    return math.log(n >> shift) + shift * math.log(2)


def log_size(x: Fraction | int) -> float:
    """log max(|numerator|, denominator), the Archimedean height of x.

    Good to well over 12 significant digits even for operands that overflow
    float conversion.
    """
    x = Fraction(x)
    if x == 0:
        raise ValueError("log_size(0) is undefined")
    return _log_int(max(abs(x.numerator), x.denominator))
