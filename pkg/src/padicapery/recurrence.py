"""Polynomial-coefficient recurrences satisfied by the sequence tables.

A recurrence of order r and degree d is a relation

    P_0(n) u_{n+1} + P_1(n) u_n + ... + P_r(n) u_{n+1-r} = 0

with integer polynomial coefficients, holding for all n past some start.
The Catalan table satisfies a second-order, degree-two recurrence shared
by its a- and b-columns (the b-column from n = 1 on, the a-column only
from n = 2 because its seed breaks the single relation that touches it).

``fit_recurrence`` recovers such a relation from raw sequence values by
exact linear algebra over the rationals, so a fitted spec is a proof of
nothing by itself, but verifying it on rows not used in the fit is a
strong structural check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

CoeffPoly = tuple[int, ...]


@dataclass(frozen=True)
class RecurrenceSpec:
    """Coefficient polynomials, ascending powers of n, index i = 0..order."""

    coeff_polys: tuple[CoeffPoly, ...]

    def __post_init__(self):
        if not self.coeff_polys:
            raise ValueError("a recurrence needs at least one coefficient")
        if any(len(poly) == 0 for poly in self.coeff_polys):
            raise ValueError("empty coefficient polynomial")
        if all(c == 0 for c in self.coeff_polys[0]):
            raise ValueError("leading coefficient polynomial is identically zero")

    @property
    def order(self) -> int:
        return len(self.coeff_polys) - 1

    @property
    def degree(self) -> int:
        return max(len(poly) - 1 for poly in self.coeff_polys)

    def poly_value(self, i: int, n: int) -> int:
        value = 0
        for power, coeff in enumerate(self.coeff_polys[i]):
            value += coeff * n**power
        return value


def catalan_recurrence() -> RecurrenceSpec:
    """(n+1)^2 u_{n+1} + (32 n^2 - 4) u_n + 256 (n-1)^2 u_{n-1} = 0."""
    return RecurrenceSpec(((1, 2, 1), (-4, 0, 32), (256, -512, 256)))


def residual(spec: RecurrenceSpec, seq: Sequence, n: int) -> Fraction:
    """The left-hand side of the relation at index n."""
    if n + 1 >= len(seq) or n + 1 - spec.order < 0:
        raise IndexError("sequence does not cover the relation at this n")
    total = Fraction(0)
    for i in range(spec.order + 1):
        total += spec.poly_value(i, n) * Fraction(seq[n + 1 - i])
    return total


def verify_recurrence(
    spec: RecurrenceSpec, seq: Sequence, start: int, end: int
) -> list[tuple[int, Fraction]]:
    """Residuals that fail to vanish for n in [start, end]."""
    if start < spec.order - 1:
        raise ValueError("start must be at least order - 1")
    if end + 1 >= len(seq):
        raise ValueError("end + 1 must be inside the sequence")
    violations = []
    for n in range(start, end + 1):
        value = residual(spec, seq, n)
        if value != 0:
            violations.append((n, value))
    return violations


def run_recurrence(
    spec: RecurrenceSpec, seed: dict[int, Fraction], end: int
) -> list[Fraction]:
    """Extend a seed to u_0..u_end by solving the relation for u_{n+1}.

    The seed must cover a contiguous block 0..s with s >= order, and
    P_0(n) must not vanish at any step used.
    """
    top = max(seed)
    if sorted(seed) != list(range(top + 1)):
        raise ValueError("seed must cover a contiguous block starting at 0")
    if top < spec.order:
        raise ValueError("seed must reach at least the order of the recurrence")
    values = [Fraction(seed[i]) for i in range(top + 1)]
    for n in range(top, end):
        lead = spec.poly_value(0, n)
        if lead == 0:
            raise ZeroDivisionError(f"leading polynomial vanishes at n = {n}")
        acc = Fraction(0)
        for i in range(1, spec.order + 1):
            acc += spec.poly_value(i, n) * values[n + 1 - i]
        values.append(-acc / lead)
    return values


def _nullspace(rows: list[list[Fraction]], width: int) -> list[list[Fraction]]:
    """Basis of the solution space of rows * x = 0, by exact elimination."""
    matrix = [row[:] for row in rows]
    pivots: list[int] = []
    rank = 0
    for col in range(width):
        pivot_row = None
        for r in range(rank, len(matrix)):
            if matrix[r][col] != 0:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        matrix[rank], matrix[pivot_row] = matrix[pivot_row], matrix[rank]
        lead = matrix[rank][col]
        matrix[rank] = [entry / lead for entry in matrix[rank]]
        for r in range(len(matrix)):
            if r != rank and matrix[r][col] != 0:
                factor = matrix[r][col]
                matrix[r] = [
                    entry - factor * matrix[rank][j]
                    for j, entry in enumerate(matrix[r])
                ]
        pivots.append(col)
        rank += 1
        if rank == len(matrix):
            break
    free = [col for col in range(width) if col not in pivots]
    basis = []
    for free_col in free:
        vector = [Fraction(0)] * width
        vector[free_col] = Fraction(1)
        for row_index, pivot_col in enumerate(pivots):
            vector[pivot_col] = -matrix[row_index][free_col]
        basis.append(vector)
    return basis


def _normalize(vector: list[Fraction], order: int, degree: int) -> RecurrenceSpec:
    denom = 1
    for entry in vector:
        denom = denom * entry.denominator // gcd(denom, entry.denominator)
    ints = [int(entry * denom) for entry in vector]
    content = 0
    for value in ints:
        content = gcd(content, value)
    if content:
        ints = [value // content for value in ints]
    polys = [
        tuple(ints[i * (degree + 1) : (i + 1) * (degree + 1)])
        for i in range(order + 1)
    ]
    leading = next((c for c in reversed(polys[0]) if c != 0), 0)
    if leading < 0:
        polys = [tuple(-c for c in poly) for poly in polys]
    return RecurrenceSpec(tuple(polys))


def fit_recurrence(seq: Sequence, order: int, degree: int) -> RecurrenceSpec:
    """Recover an order/degree recurrence annihilating the sequence.

    Uses every relation index n = order .. len(seq) - 2 as an equation.
    Raises ValueError when no nonzero relation exists or when the leading
    polynomial of every candidate vanishes identically (which would mean
    the true order is smaller; refit with it).
    """
    if order < 1 or degree < 0:
        raise ValueError("order must be >= 1 and degree >= 0")
    width = (order + 1) * (degree + 1)
    equations = []
    for n in range(order, len(seq) - 1):
        row = []
        for i in range(order + 1):
            u = Fraction(seq[n + 1 - i])
            for power in range(degree + 1):
                row.append(u * n**power)
        equations.append(row)
    if len(equations) < width:
        raise ValueError("not enough sequence values for this order and degree")
    basis = _nullspace(equations, width)
    candidates = []
    for vector in basis:
        head = vector[: degree + 1]
        if all(entry == 0 for entry in head):
            continue
        profile = tuple(
            max((p for p, c in enumerate(vector[i * (degree + 1) : (i + 1) * (degree + 1)]) if c != 0), default=-1)
            for i in range(order + 1)
        )
        candidates.append((profile, vector))
    if not candidates:
        if basis:
            raise ValueError("leading polynomial vanishes; reduce the order")
        raise ValueError("no recurrence of this order and degree fits")
    candidates.sort(key=lambda item: item[0])
    return _normalize(candidates[0][1], order, degree)
