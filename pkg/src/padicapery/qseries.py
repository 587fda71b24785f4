"""Truncated formal power series in q with exact rational coefficients.

A series of precision N is the jet c_0 + c_1 q + ... + c_{N-1} q^{N-1}; all
arithmetic is exact, and binary operations narrow to the smaller precision of
the two operands rather than padding with fabricated zeros.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

__all__ = ["DEFAULT_PREC", "QSeries", "ProductRecipe", "expand_product"]

#: Working precision used by callers that do not have a better-informed choice.
DEFAULT_PREC = 64

_Scalar = (int, Fraction)


class QSeries:
    """Dense truncated power series; immutable once constructed."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Fraction | int], prec: int | None = None):
        cs = [Fraction(c) for c in coeffs]
        if prec is not None:
            if prec < 1:
                raise ValueError("precision must be >= 1")
            cs = cs[:prec] + [Fraction(0)] * (prec - len(cs))
        if not cs:
            raise ValueError("a series needs at least its constant term")
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, prec: int) -> "QSeries":
        return cls([], prec)

    @classmethod
    def one(cls, prec: int) -> "QSeries":
        return cls([1], prec)

    @classmethod
    def gen(cls, prec: int) -> "QSeries":
        """The series q."""
        return cls([0, 1], prec)

    # -- basic protocol ----------------------------------------------------

    @property
    def prec(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def __eq__(self, other) -> bool:
        # Jets agree when they agree on every index both sides can see.
        if not isinstance(other, QSeries):
            return NotImplemented
        n = min(self.prec, other.prec)
        return self.coeffs[:n] == other.coeffs[:n]

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self) -> str:
        body = " + ".join(
            f"{c}*q^{i}" for i, c in enumerate(self.coeffs[:6]) if c
        ) or "0"
        return f"QSeries({body} + O(q^{self.prec}))"

    # -- ring operations ---------------------------------------------------

    def __neg__(self) -> "QSeries":
        return QSeries([-c for c in self.coeffs])

    def __add__(self, other) -> "QSeries":
        if isinstance(other, _Scalar):
            cs = list(self.coeffs)
            cs[0] += other
            return QSeries(cs)
        n = min(self.prec, other.prec)
        return QSeries([self.coeffs[i] + other.coeffs[i] for i in range(n)])

    __radd__ = __add__

    def __sub__(self, other) -> "QSeries":
        return self + (-other if isinstance(other, QSeries) else -Fraction(other))

    def __rsub__(self, other) -> "QSeries":
        return -self + other

    def __mul__(self, other) -> "QSeries":
        if isinstance(other, _Scalar):
            c = Fraction(other)
            return QSeries([a * c for a in self.coeffs])
        n = min(self.prec, other.prec)
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * n
        for i in range(n):
            ai = a[i]
            if ai:
                for j in range(n - i):
                    bj = b[j]
                    if bj:
                        out[i + j] += ai * bj
        return QSeries(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "QSeries":
        if e < 0:
            raise ValueError("negative powers: call invert() explicitly")
        out = QSeries.one(self.prec)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base if e > 1 else base
            e >>= 1
        return out

    def invert(self) -> "QSeries":
        """Multiplicative inverse; requires a nonzero constant term."""
        a = self.coeffs
        if a[0] == 0:
            raise ValueError("series with zero constant term has no inverse")
        inv0 = 1 / a[0]
        out = [inv0] + [Fraction(0)] * (self.prec - 1)
        for n in range(1, self.prec):
            s = Fraction(0)
            for i in range(1, n + 1):
                if a[i]:
                    s += a[i] * out[n - i]
            out[n] = -inv0 * s
        return QSeries(out)

    # -- operators specific to q-expansions ---------------------------------

    def theta(self) -> "QSeries":
        """q d/dq: multiplies the n-th coefficient by n."""
        return QSeries([n * c for n, c in enumerate(self.coeffs)])

    def theta_inverse_power(self, m: int) -> "QSeries":
        """Formal theta^{-m}: divides the n-th coefficient by n**m.

        Only defined on series with zero constant term (the constant is kept
        at zero); m must be >= 1.
        """
        if m < 1:
            raise ValueError("m must be >= 1")
        if self.coeffs[0] != 0:
            raise ValueError("theta_inverse_power needs a zero constant term")
        return QSeries(
            [Fraction(0)]
            + [c / Fraction(n) ** m for n, c in enumerate(self.coeffs) if n]
        )

    def substitute_q_power(self, k: int) -> "QSeries":
        """q -> q**k at unchanged precision (used for level raising)."""
        if k < 1:
            raise ValueError("k must be >= 1")
        out = [Fraction(0)] * self.prec
        for i, c in enumerate(self.coeffs):
            if i * k >= self.prec:
                break
            out[i * k] = c
        return QSeries(out)

    def shift_down(self, k: int) -> "QSeries":
        """Divide by q**k; the first k coefficients must vanish."""
        if k < 0 or k >= self.prec:
            raise ValueError("shift amount out of range")
        if any(self.coeffs[:k]):
            raise ValueError("series is not divisible by q**%d" % k)
        return QSeries(self.coeffs[k:])

    def truncate(self, prec: int) -> "QSeries":
        if prec > self.prec:
            raise ValueError("cannot extend a truncated series")
        return QSeries(self.coeffs[:prec])


@dataclass(frozen=True)
class ProductRecipe:
    """q**leading_power * prod over factors (sign, stride, exponent) of
    prod_{n>=1} (1 + sign * q**(stride*n)) ** exponent.

    Signs are +-1, strides positive, exponents any integer (negative exponents
    expand through the generalized binomial series, which stays integral).
    """

    leading_power: int
    factors: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        if self.leading_power < 0:
            raise ValueError("leading power must be >= 0")
        for sign, stride, exponent in self.factors:
            if sign not in (1, -1):
                raise ValueError("factor sign must be +1 or -1")
            if stride < 1:
                raise ValueError("factor stride must be >= 1")
            if not isinstance(exponent, int):
                raise ValueError("factor exponent must be an integer")


def _mul_binomial_factor(acc: list[Fraction], sign: int, m: int, e: int) -> list[Fraction]:
    # acc *= (1 + sign q^m)^e, truncated to len(acc).
    prec = len(acc)
    terms: list[tuple[int, Fraction]] = []
    coef = Fraction(1)
    j = 1
    while m * j < prec:
        coef = coef * (e - j + 1) / j
        terms.append((m * j, coef * sign**j))
        j += 1
    if not terms:
        return acc
    out = list(acc)
    for off, c in terms:
        if not c:
            continue
        for i in range(prec - off):
            if acc[i]:
                out[i + off] += c * acc[i]
    return out


def expand_product(recipe: ProductRecipe, prec: int) -> QSeries:
    """Expand an eta-like infinite product to the requested precision."""
    if prec < 1:
        raise ValueError("precision must be >= 1")
    acc = [Fraction(0)] * prec
    if recipe.leading_power < prec:
        acc[recipe.leading_power] = Fraction(1)
    for sign, stride, exponent in recipe.factors:
        n = 1
        while stride * n < prec:
            acc = _mul_binomial_factor(acc, sign, stride * n, exponent)
            n += 1
    return QSeries(acc)
