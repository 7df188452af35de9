"""Non-central Stirling numbers of the first kind s(n, k, alpha) as
integer-coefficient polynomials in alpha.

Two independent constructions are provided and must agree exactly:

* the triangle recurrence
      s(n+1, i, a) = (-a - n) s(n, i, a) + s(n, i-1, a)
  with boundary rows s(n+1, 0, a) = (-a - n) s(n, 0, a) and
  s(n+1, n+1, a) = s(n, n, a), seeded by s(0, 0, a) = 1;

* the explicit binomial sum over classical Stirling numbers
      s(n, i, a) = sum_k C(n, k) (-a)(-a-1)...(-a-k+1) s(n-k, i).

Specializing alpha = 0 recovers the classical signed numbers.
"""
from __future__ import annotations

import json
import math
from fractions import Fraction
from typing import Optional

from .exact import (
    AlphaPoly,
    RationalLike,
    binomial,
    binomial_rational,
    falling_factorial,
    falling_factorial_poly,
)
from .stirling import StirlingTable, build_stirling_table


class NoncentralTriangle:
    """Immutable triangle of AlphaPoly entries indexed (n, k), 0 <= k <= n <= n_max.

    ``construction`` records how the triangle was produced ("recurrence",
    "explicit", or "parsed" for deserialized instances).
    """

    __slots__ = ("n_max", "construction", "_rows")

    def __init__(self, rows, construction: str) -> None:
        self._rows = tuple(tuple(row) for row in rows)
        self.n_max = len(self._rows) - 1
        self.construction = construction

    def _check(self, n: int, k: int) -> None:
        if not 0 <= n <= self.n_max:
            raise IndexError("n=%d outside [0, %d]" % (n, self.n_max))
        if not 0 <= k <= n:
            raise IndexError("k=%d outside [0, %d]" % (k, n))

    def entry(self, n: int, k: int) -> AlphaPoly:
        self._check(n, k)
        return self._rows[n][k]

    def row(self, n: int) -> tuple:
        self._check(n, 0)
        return self._rows[n]

    def evaluate(self, n: int, k: int, alpha: RationalLike) -> Fraction:
        """s(n, k, alpha) at a concrete rational alpha, exactly."""
        return Fraction(self.entry(n, k)(Fraction(alpha)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, NoncentralTriangle):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        return "NoncentralTriangle(n_max=%d, construction=%r)" % (
            self.n_max,
            self.construction,
        )


def build_by_recurrence(n_max: int) -> NoncentralTriangle:
    """Build the triangle row by row from the recurrence, seeded at 1."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    rows = [(AlphaPoly.one(),)]
    for n in range(n_max):
        prev = rows[-1]
        shift = AlphaPoly((-n, -1))  # the factor (-alpha - n)
        row = []
        for i in range(n + 2):
            acc = shift * prev[i] if i <= n else AlphaPoly.zero()
            if i >= 1:
                acc = acc + prev[i - 1]
            row.append(acc)
        rows.append(row)
    return NoncentralTriangle(rows, "recurrence")


def build_by_explicit(n_max: int, table: Optional[StirlingTable] = None) -> NoncentralTriangle:
    """Assemble each entry from the explicit sum over classical Stirling numbers."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    if table is None or table.n_max < n_max:
        table = build_stirling_table(n_max)
    ff = [falling_factorial_poly(k) for k in range(n_max + 1)]
    rows = []
    for n in range(n_max + 1):
        row = []
        for i in range(n + 1):
            acc = AlphaPoly.zero()
            for k in range(n - i + 1):
                scalar = binomial(n, k) * table.signed(n - k, i)
                if scalar:
                    acc = acc + scalar * ff[k]
            row.append(acc)
        rows.append(row)
    return NoncentralTriangle(rows, "explicit")


def s_n1_sum_formula(n: int, alpha: RationalLike) -> Fraction:
    """s(n, 1, alpha) by the alternating binomial sum, independent of any triangle:

        n! * sum_{k=0}^{n-1} (-1)^(n-k-1) C(-alpha, k) / (n - k)
    """
    if n < 1:
        raise ValueError("n must be positive")
    a = Fraction(alpha)
    total = Fraction(0)
    for k in range(n):
        term = binomial_rational(-a, k) / (n - k)
        total += term if (n - k - 1) % 2 == 0 else -term
    return math.factorial(n) * total


def s_n1_recurrence(n: int, alpha: RationalLike) -> Fraction:
    """s(n, 1, alpha) by the scalar recurrence

        s(1,1,a) = 1,   s(m,1,a) = (-a - m + 1) s(m-1,1,a) + (-a)(-a-1)...(-a-m+2).
    """
    if n < 1:
        raise ValueError("n must be positive")
    a = Fraction(alpha)
    value = Fraction(1)
    for m in range(2, n + 1):
        value = (-a - m + 1) * value + falling_factorial(-a, m - 1)
    return value


def triangle_to_json(triangle: NoncentralTriangle) -> str:
    """Canonical JSON for a triangle; numbers are decimal strings so
    arbitrary-precision coefficients survive. Deterministic byte-for-byte."""
    entries = []
    for n in range(triangle.n_max + 1):
        for k in range(n + 1):
            entries.append(
                {
                    "n": str(n),
                    "k": str(k),
                    "coeffs": triangle.entry(n, k).coefficient_strings(),
                }
            )
    doc = {"n_max": str(triangle.n_max), "entries": entries}
    return json.dumps(doc, separators=(",", ":")) + "\n"


def triangle_from_json(text: str) -> NoncentralTriangle:
    doc = json.loads(text)
    n_max = int(doc["n_max"])
    rows = [[AlphaPoly.zero()] * (n + 1) for n in range(n_max + 1)]
    seen = set()
    for item in doc["entries"]:
        n, k = int(item["n"]), int(item["k"])
        if not 0 <= k <= n <= n_max:
            raise ValueError("entry (%d, %d) outside triangle" % (n, k))
        rows[n][k] = AlphaPoly.from_coefficient_strings(item["coeffs"])
        seen.add((n, k))
    expected = {(n, k) for n in range(n_max + 1) for k in range(n + 1)}
    if seen != expected:
        raise ValueError("triangle entries missing or duplicated")
    return NoncentralTriangle(rows, "parsed")


def corrupt_entry(triangle: NoncentralTriangle, n: int, k: int, delta: int = 1) -> NoncentralTriangle:
    """Copy of the triangle with the constant coefficient of entry (n, k)
    shifted by delta. Verification test hook only: the result must fail
    the structural checks."""
    if delta == 0:
        raise ValueError("delta must be nonzero")
    triangle._check(n, k)
    rows = [list(row) for row in triangle._rows]
    rows[n][k] = rows[n][k] + AlphaPoly((delta,))
    return NoncentralTriangle(rows, triangle.construction)
