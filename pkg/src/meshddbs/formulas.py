"""Exact taxicab ball counts on the two lattices, plus leading asymptotics.

The even ball of radius p is every integer point within true distance p
of the origin.  The odd ball is every point of the half-shifted lattice
within true distance p + 1/2 of the midpoint between the two closest
lattice points; in doubled coordinates that midpoint is the origin.
Counts are exact integers, computed from binomial sums.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import NamedTuple

from .lattice_core import LatticeParity, Point

#: Refuse to materialise balls with more points than this by default.
DEFAULT_ENUMERATION_CAP = 10_000_000


@dataclass(frozen=True)
class BallSpec:
    """One ball: lattice parity, dimension k >= 1, radius parameter p >= 0."""

    parity: LatticeParity
    k: int
    p: int

    def __post_init__(self):
        if not isinstance(self.parity, LatticeParity):
            raise ValueError(f"parity must be a LatticeParity, got {self.parity!r}")
        if not isinstance(self.k, int) or self.k < 1:
            raise ValueError(f"dimension k must be an integer >= 1, got {self.k!r}")
        if not isinstance(self.p, int) or self.p < 0:
            raise ValueError(f"radius parameter p must be an integer >= 0, got {self.p!r}")


class AsymptoticTerms(NamedTuple):
    """Coefficients of p^k and p^(k-1) in the ball count, exact rationals."""

    lead: Fraction
    second: Fraction


def count_points(parity: LatticeParity, k: int, p: int) -> int:
    """Ball count as a plain function of (parity, k, p).

    Accepts k = 0 as the degenerate case used by bound comparisons: the
    even ball collapses to the single center point, the odd ball to the
    two points astride the midpoint.
    """
    if k == 0:
        return 1 if parity is LatticeParity.EVEN else 2
    if parity is LatticeParity.EVEN:
        return sum((1 << i) * comb(k, i) * comb(p, i) for i in range(k + 1))
    return sum((1 << i) * (comb(k, i) + comb(k - 1, i)) * comb(p, i) for i in range(k + 1))


def ball_count(spec: BallSpec) -> int:
    """Exact number of lattice points in the ball."""
    return count_points(spec.parity, spec.k, spec.p)


def ball_enumerate(spec: BallSpec, cap: int = DEFAULT_ENUMERATION_CAP) -> set:
    """Materialise the ball as a set of doubled-coordinate points.

    Raises:
        ValueError: the ball holds more than ``cap`` points; the message
            names the cap so callers can raise it deliberately.
    """
    total = ball_count(spec)
    if total > cap:
        raise ValueError(
            f"ball holds {total} points, beyond the enumeration cap of {cap}"
        )
    k, p = spec.k, spec.p
    pts = []
    append = pts.append
    cur = [0] * k

    def walk(axis: int, budget: int) -> None:
        if axis == k - 1:
            for t in range(-budget, budget + 1):
                cur[axis] = 2 * t
                append(tuple(cur))
            return
        for t in range(-budget, budget + 1):
            cur[axis] = 2 * t
            walk(axis + 1, budget - abs(t))

    if spec.parity is LatticeParity.EVEN:
        walk(0, p)
    else:
        # Doubled odd points (2b+1, 2t2, ..., 2tk) within doubled
        # distance 2p+1 of the origin; |2b+1| is odd so the constraint
        # is |b| + sum|t| <= p with b shifted across both signs.
        def walk_odd(budget: int) -> None:
            if k == 1:
                for b in range(-budget - 1, budget + 1):
                    half = 2 * b + 1
                    if abs(half) <= 2 * budget + 1:
                        append((half,))
                return
            rest = [0] * (k - 1)

            def tail(axis: int, budget2: int, prefix_first: int) -> None:
                if axis == k - 2:
                    for t in range(-budget2, budget2 + 1):
                        rest[axis] = 2 * t
                        append((prefix_first, *rest))
                    return
                for t in range(-budget2, budget2 + 1):
                    rest[axis] = 2 * t
                    tail(axis + 1, budget2 - abs(t), prefix_first)

            for b in range(-budget - 1, budget + 1):
                half = 2 * b + 1
                slack = (2 * budget + 1 - abs(half)) // 2
                if slack >= 0:
                    tail(0, slack, half)

        walk_odd(p)
    return set(pts)


def leading_terms(parity: LatticeParity, k: int) -> AsymptoticTerms:
    """Coefficients of the two highest powers of p in the ball count.

    Even lattice: 2^k / k! and 2^(k-1) / (k-1)!.
    Odd lattice:  2^k / k! and 2^k / (k-1)!.

    Raises:
        ValueError: k < 1.
    """
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"dimension k must be an integer >= 1, got {k!r}")
    lead = Fraction(1 << k, factorial(k))
    if parity is LatticeParity.EVEN:
        second = Fraction(1 << (k - 1), factorial(k - 1))
    else:
        second = Fraction(1 << k, factorial(k - 1))
    return AsymptoticTerms(lead, second)


def two_term_value(parity: LatticeParity, k: int, p: int) -> Fraction:
    """The two-term approximation lead*p^k + second*p^(k-1), exact."""
    terms = leading_terms(parity, k)
    return terms.lead * p**k + terms.second * p ** (k - 1)


BALL_CSV_HEADER = "parity,k,p,count,two_term_value,residual"


def ball_rows(parity: LatticeParity, k: int, p_values) -> list:
    """Rows (parity, k, p, count, two-term value, residual) for a sweep."""
    ps = list(p_values)
    if not ps:
        raise ValueError("empty p range")
    rows = []
    for p in ps:
        count = count_points(parity, k, p)
        approx = two_term_value(parity, k, p)
        rows.append((parity.value, k, p, count, approx, count - approx))
    return rows


def ball_rows_to_csv(rows) -> str:
    """CSV text for ball_rows output, header included."""
    lines = [BALL_CSV_HEADER]
    for parity, k, p, count, approx, residual in rows:
        lines.append(
            f"{parity},{k},{p},{count},{float(approx)!r},{float(residual)!r}"
        )
    return "\n".join(lines) + "\n"
