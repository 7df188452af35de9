"""Classical (signed and unsigned) Stirling numbers of the first kind,
plus exact harmonic numbers.

The signed numbers are the stored primitive; unsigned values are a view.
"""
from __future__ import annotations

import io
from fractions import Fraction

from .exact import AlphaPoly


class StirlingTable:
    """Triangle of signed first-kind Stirling numbers s(n, k), 0 <= k <= n <= n_max.

    Built once with the two-term recurrence
    s(n, k) = s(n-1, k-1) - (n-1) * s(n-1, k); immutable afterwards, so
    concurrent reads are safe.
    """

    __slots__ = ("n_max", "_rows")

    def __init__(self, n_max: int) -> None:
        if n_max < 0:
            raise ValueError("n_max must be nonnegative")
        self.n_max = n_max
        rows = [(1,)]
        for n in range(1, n_max + 1):
            prev = rows[-1]
            row = []
            for k in range(n + 1):
                above_left = prev[k - 1] if 1 <= k else 0
                above = prev[k] if k <= n - 1 else 0
                row.append(above_left - (n - 1) * above)
            rows.append(tuple(row))
        self._rows = tuple(rows)

    def _check(self, n: int, k: int) -> None:
        if not 0 <= n <= self.n_max:
            raise IndexError("n=%d outside [0, %d]" % (n, self.n_max))
        if not 0 <= k <= n:
            raise IndexError("k=%d outside [0, %d]" % (k, n))

    def signed(self, n: int, k: int) -> int:
        self._check(n, k)
        return self._rows[n][k]

    def unsigned(self, n: int, k: int) -> int:
        """|s(n, k)|, i.e. (-1)^(n-k) * s(n, k); counts n-permutations with k cycles."""
        self._check(n, k)
        return abs(self._rows[n][k])

    def row(self, n: int) -> tuple:
        self._check(n, 0)
        return self._rows[n]


def build_stirling_table(n_max: int) -> StirlingTable:
    return StirlingTable(n_max)


def stirling_expansion_oracle(n: int) -> list:
    """Coefficients of x(x-1)...(x-n+1) as a polynomial in x, low-to-high.

    Independent construction of row n of the signed triangle: the falling
    factorial is expanded with the generic polynomial product rather than
    the table recurrence.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    poly = AlphaPoly.one()
    for j in range(n):
        poly = poly * AlphaPoly((-j, 1))
    coeffs = list(poly.coefficients)
    return coeffs + [0] * (n + 1 - len(coeffs))


def harmonic(n: int) -> Fraction:
    """H_n = 1 + 1/2 + ... + 1/n exactly; H_0 = 0."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    total = Fraction(0)
    for k in range(1, n + 1):
        total += Fraction(1, k)
    return total


def table_to_csv(table: StirlingTable) -> str:
    """Dump the signed triangle as CSV with header "n,k,value"."""
    out = io.StringIO()
    out.write("n,k,value\n")
    for n in range(table.n_max + 1):
        for k in range(n + 1):
            out.write("%d,%d,%d\n" % (n, k, table.signed(n, k)))
    return out.getvalue()
