"""Special values and q-expansions of the Eisenstein-type series in play.

Conventions, fixed once and used everywhere:

* Bernoulli numbers follow x/2 + x/(e^x - 1) = sum B_n x^n / n!, i.e.
  B_1 = +1/2; even indices are unaffected and zeta(1-2k) = -B_{2k}/2k.
* zeta_star(p, 2k) = (1 - p^{2k-1}) * zeta(1-2k): the zeta value with its
  Euler factor at p removed, the constant of the weight-2k p-deprived series.
* Euler numbers are the secant numbers, sech x = sum E_n x^n / n! with
  E_0 = 1, E_2 = -1, E_4 = 5, pinned by L(-2k, chi) = E_{2k}/2 for the odd
  character chi mod 4 (chi(1 mod 4) = 1, chi(3 mod 4) = -1, chi(even) = 0).
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, gcd, isqrt

from .qseries import DEFAULT_PREC, QSeries

__all__ = [
    "bernoulli",
    "euler_number",
    "zeta_neg",
    "zeta_star",
    "l_chi4_neg",
    "chi4",
    "divisors",
    "sigma",
    "sigma_star",
    "sigma_chi",
    "series_e",
    "series_e_star",
    "series_evil",
    "series_e_prime",
    "series_f",
    "series_f_prime",
    "lambert_chi_series",
]

# ---------------------------------------------------------------------------
# special values

_BERNOULLI_EVEN: list[Fraction] = [Fraction(1)]  # B_0, B_2, B_4, ...


def bernoulli(n: int) -> Fraction:
    """B_n in the B_1 = +1/2 convention."""
    if n < 0:
        raise ValueError("index must be >= 0")
    if n == 1:
        return Fraction(1, 2)
    if n % 2 == 1:
        return Fraction(0)
    k = n // 2
    while len(_BERNOULLI_EVEN) <= k:
        m = 2 * len(_BERNOULLI_EVEN)
        # sum_{r=0}^{m} C(m+1, r) B_r = 0 with B_1 = -1/2 plugged in; only the
        # even r survive otherwise, so the sum runs over cached entries.
        s = Fraction(m + 1, 1) * Fraction(-1, 2)
        for j, bj in enumerate(_BERNOULLI_EVEN):
            s += comb(m + 1, 2 * j) * bj
        _BERNOULLI_EVEN.append(-s / (m + 1))
    return _BERNOULLI_EVEN[k]


_EULER: list[int] = [1]  # E_0, E_2, E_4, ...


def euler_number(n: int) -> int:
    """E_n for even n (secant numbers, signed)."""
    if n < 0 or n % 2 == 1:
        raise ValueError("Euler numbers are only used at even indices >= 0")
    k = n // 2
    while len(_EULER) <= k:
        m = len(_EULER)
        s = sum(comb(2 * m, 2 * j) * ej for j, ej in enumerate(_EULER))
        _EULER.append(-s)
    return _EULER[k]


def _require_even_weight(two_k: int, minimum: int) -> None:
    if two_k % 2 or two_k < minimum:
        raise ValueError(f"weight must be even and >= {minimum}, got {two_k}")


def zeta_neg(two_k: int) -> Fraction:
    """zeta(1 - 2k) = -B_{2k}/2k."""
    _require_even_weight(two_k, 2)
    return -bernoulli(two_k) / two_k


def zeta_star(p: int, two_k: int) -> Fraction:
    """(1 - p^{2k-1}) zeta(1-2k): the p-Euler-factor-free value."""
    return (1 - Fraction(p) ** (two_k - 1)) * zeta_neg(two_k)


def l_chi4_neg(two_k: int) -> Fraction:
    """L(-2k, chi) = E_{2k}/2 for the odd character mod 4."""
    _require_even_weight(two_k, 0)
    return Fraction(euler_number(two_k), 2)


def chi4(n: int) -> int:
    """The odd Dirichlet character of conductor 4."""
    if n % 2 == 0:
        return 0
    return 1 if n % 4 == 1 else -1


# ---------------------------------------------------------------------------
# divisor sums

def divisors(n: int) -> list[int]:
    if n < 1:
        raise ValueError("n must be >= 1")
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def sigma(n: int, w: int) -> Fraction:
    """sum of d**w over all divisors of n (w may be negative)."""
    return sum((Fraction(d) ** w for d in divisors(n)), Fraction(0))


def sigma_star(n: int, p: int, w: int) -> Fraction:
    """sum of d**w over divisors of n coprime to p."""
    return sum(
        (Fraction(d) ** w for d in divisors(n) if gcd(d, p) == 1), Fraction(0)
    )


def sigma_chi(n: int, w: int) -> Fraction:
    """sum of chi(d) d**w over divisors of n."""
    return sum((chi4(d) * Fraction(d) ** w for d in divisors(n)), Fraction(0))


# ---------------------------------------------------------------------------
# q-expansions

def series_e(two_k: int, prec: int = DEFAULT_PREC) -> QSeries:
    """Level-one Eisenstein series of weight 2k, constant zeta(1-2k)/2."""
    _require_even_weight(two_k, 2)
    return QSeries(
        [zeta_neg(two_k) / 2] + [sigma(n, two_k - 1) for n in range(1, prec)]
    )


def series_e_star(p: int, two_k: int, prec: int = DEFAULT_PREC) -> QSeries:
    """Weight-2k series with p-divisor terms and the p-Euler factor removed.

    Equals series_e(2k) - p^{2k-1} series_e(2k)(q -> q^p); the level-lowering
    identity is exercised in the tests rather than assumed here.
    """
    _require_even_weight(two_k, 2)
    return QSeries(
        [zeta_star(p, two_k) / 2]
        + [sigma_star(n, p, two_k - 1) for n in range(1, prec)]
    )


def series_evil(p: int, two_k: int, prec: int = DEFAULT_PREC) -> QSeries:
    """The cuspidal-at-infinity twin E_{2k}(tau) - E_{2k}(p tau).

    Its q^n coefficient is sigma_{2k-1}(n) - sigma_{2k-1}(n/p), the n/p term
    present only when p | n; the constant vanishes.
    """
    _require_even_weight(two_k, 4)
    coeffs = [Fraction(0)]
    for n in range(1, prec):
        c = sigma(n, two_k - 1)
        if n % p == 0:
            c -= sigma(n // p, two_k - 1)
        coeffs.append(c)
    return QSeries(coeffs)


def series_e_prime(p: int, two_k: int, prec: int = DEFAULT_PREC) -> QSeries:
    """Weight -2k antiderivative: theta^{2k+1} of it gives the evil twin of
    weight 2k+2.  Coefficient of q^n is sigma_star(n, p, -(2k+1)); zero
    constant term by construction."""
    _require_even_weight(two_k, 2)
    return QSeries(
        [Fraction(0)] + [sigma_star(n, p, -(two_k + 1)) for n in range(1, prec)]
    )


def series_f(weight: int, prec: int = DEFAULT_PREC) -> QSeries:
    """Odd-weight Eisenstein family for chi mod 4: weight 2k+1 has constant
    L(-2k, chi)/2 and q^n coefficient sum_{d|n} chi(d) d^{2k}."""
    if weight % 2 == 0 or weight < 1:
        raise ValueError(f"weight must be odd and >= 1, got {weight}")
    two_k = weight - 1
    return QSeries(
        [l_chi4_neg(two_k) / 2] + [sigma_chi(n, two_k) for n in range(1, prec)]
    )


def series_f_prime(prec: int = DEFAULT_PREC) -> QSeries:
    """Weight -1 antiderivative of the weight-3 member: coefficient of q^n is
    sum_{d|n} chi(d) d^{-2}, zero constant term."""
    return QSeries([Fraction(0)] + [sigma_chi(n, -2) for n in range(1, prec)])


def lambert_chi_series(w: int, prec: int = DEFAULT_PREC) -> QSeries:
    """The Lambert-type form sum_{n>=0} (-1)^n (2n+1)^w q^{2n+1}/(1-q^{2n+1}).

    With w = 2k this is the cuspidal part of series_f(2k+1); with w = -2 it is
    series_f_prime.  Kept as an independent construction so the two displayed
    forms can be checked against each other.
    """
    out = [Fraction(0)] * prec
    n = 0
    while 2 * n + 1 < prec:
        m = 2 * n + 1
        c = (-1) ** n * Fraction(m) ** w
        j = m
        while j < prec:
            out[j] += c
            j += m
        n += 1
    return QSeries(out)
