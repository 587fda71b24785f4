"""Re-expansion of H = (weight series) * (antiderivative + eta) in powers of
the uniformizer, and the approximant sequence tables it produces.

Writing H = sum (A_n + eta B_n) f^n, the B-list is the re-expansion of the
normalized weight series alone and the A-list that of its product with the
antiderivative; the published tables are these lists up to per-case sign
flags.  The quantity approximated is the reduced ratio 2 a_n / b_n.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction

from . import curves, eisenstein
from .exactnum import lcm_upto
from .qseries import QSeries

__all__ = [
    "reexpand",
    "SequenceRow",
    "SequenceTable",
    "sequences",
    "IntegralityError",
    "integrality_report",
    "max_terms_cap",
]

#: Environment knob for the largest table the CLI will compute.
MAX_TERMS_ENV = "PADICAPERY_MAX_TERMS"
_DEFAULT_MAX_TERMS = 64


def max_terms_cap() -> int:
    raw = os.environ.get(MAX_TERMS_ENV)
    if raw is None:
        return _DEFAULT_MAX_TERMS
    try:
        cap = int(raw)
    except ValueError as exc:
        raise ValueError(f"{MAX_TERMS_ENV} must be an integer") from exc
    if cap < 1:
        raise ValueError(f"{MAX_TERMS_ENV} must be >= 1")
    return cap


def reexpand(h: QSeries, f: QSeries, count: int) -> list[Fraction]:
    """First `count` coefficients of H rewritten as a series in f.

    Requires f = q + O(q^2) exactly (the triangular peel consumes one q-order
    per output order, so `count` may not exceed the shared precision).
    """
    prec = min(h.prec, f.prec)
    if count < 1 or count > prec:
        raise ValueError("count must be within the available precision")
    if f[0] != 0 or f[1] != 1:
        raise ValueError("re-expansion needs a uniformizer f = q + O(q^2)")
    rem = list(h.coeffs[:prec])
    fc = f.coeffs[:prec]
    fpow = [Fraction(1)] + [Fraction(0)] * (prec - 1)  # f**m, starts at q^m
    out: list[Fraction] = []
    for m in range(count):
        c = rem[m]
        out.append(c)
        if c:
            for i in range(m, prec):
                if fpow[i]:
                    rem[i] -= c * fpow[i]
        if m + 1 < count:
            nxt = [Fraction(0)] * prec
            for i in range(m, prec):
                a = fpow[i]
                if a:
                    for j in range(1, prec - i):
                        if fc[j]:
                            nxt[i + j] += a * fc[j]
            fpow = nxt
    return out


@dataclass(frozen=True)
class SequenceRow:
    n: int
    a: Fraction
    b: Fraction
    p_n: int | None   # numerator of reduced 2a/b, None when b == 0
    q_n: int | None

    @property
    def degenerate(self) -> bool:
        return self.p_n is None


@dataclass(frozen=True)
class SequenceTable:
    case_id: str
    count: int
    sign_a: int
    sign_b: int
    rows: tuple[SequenceRow, ...]

    def a_list(self) -> list[Fraction]:
        return [r.a for r in self.rows]

    def b_list(self) -> list[Fraction]:
        return [r.b for r in self.rows]

    def ratio(self, n: int) -> Fraction:
        row = self.rows[n]
        if row.p_n is None:
            raise ZeroDivisionError(f"row {n} is degenerate (b_n = 0)")
        return Fraction(row.p_n, row.q_n)


def _series_pair(config: curves.CaseConfig, prec: int) -> tuple[QSeries, QSeries]:
    if config.family == "catalan-p2":
        w = eisenstein.series_f(1, prec)
        wp = eisenstein.series_f_prime(prec)
    else:
        w = eisenstein.series_e_star(config.p, config.weight, prec)
        wp = eisenstein.series_e_prime(config.p, config.weight, prec)
    return w, wp


def sequences(config: curves.CaseConfig, count: int) -> SequenceTable:
    """Compute the first `count` rows (n = 0 .. count-1) of the approximant
    table for one case.

    Runs the catalog's identity canaries first; a canary failure is raised as
    curves.IdentityError and means no output can be trusted.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    curves.run_canaries(config)
    # One q-order is consumed per output order; the factor two leaves enough
    # slack that a working-precision doubling reproduces the same rows.
    prec = 2 * count + 8
    w, wp = _series_pair(config, prec)
    f = curves.uniformizer_series(config, prec)
    scaled = config.lam * w
    b_list = reexpand(scaled, f, count)
    a_list = reexpand(scaled * wp, f, count)
    rows = []
    for n in range(count):
        a = config.sign_a * a_list[n]
        b = config.sign_b * b_list[n]
        if b == 0:
            p_n = q_n = None
        else:
            ratio = 2 * a / b
            p_n, q_n = ratio.numerator, ratio.denominator
        rows.append(SequenceRow(n=n, a=a, b=b, p_n=p_n, q_n=q_n))
    return SequenceTable(
        case_id=config.case_id,
        count=count,
        sign_a=config.sign_a,
        sign_b=config.sign_b,
        rows=tuple(rows),
    )


class IntegralityError(AssertionError):
    """A row violates the integrality the construction guarantees."""


@dataclass(frozen=True)
class IntegralityWitness:
    n: int
    a_denominator: int
    clearing_power: int   # lcm(1..max(n,1)) ** D, which must absorb it


@dataclass(frozen=True)
class IntegralityReport:
    case_id: str
    D: int
    witnesses: tuple[IntegralityWitness, ...]


def integrality_report(
    table: SequenceTable, config: curves.CaseConfig
) -> IntegralityReport:
    """Assert b_n in Z and lcm(1..n)^D * a_n in Z for every row.

    Returns the per-row denominators together with the clearing power that
    witnesses the divisibility; any violation is a hard failure.
    """
    witnesses = []
    for row in table.rows:
        if row.b.denominator != 1:
            raise IntegralityError(
                f"{table.case_id}: b_{row.n} = {row.b} is not an integer"
            )
        clearing = lcm_upto(max(row.n, 1)) ** config.D
        if (clearing * row.a).denominator != 1:
            raise IntegralityError(
                f"{table.case_id}: lcm^{config.D} * a_{row.n} is not an "
                f"integer (a_{row.n} = {row.a})"
            )
        witnesses.append(
            IntegralityWitness(
                n=row.n,
                a_denominator=row.a.denominator,
                clearing_power=clearing,
            )
        )
    return IntegralityReport(
        case_id=table.case_id, D=config.D, witnesses=tuple(witnesses)
    )
