"""Exact arithmetic substrate: dense integer polynomials in one indeterminate,
exact rationals, and binomial coefficients with generalized arguments.

Python ints are arbitrary precision and ``fractions.Fraction`` is always
reduced with a positive denominator, so those two stdlib types carry the
integer and rational values throughout the package. Everything here is
immutable and pure; values are safe to share across threads.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Sequence, Union

RationalLike = Union[int, Fraction]

_RATIONAL_RE = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


class AlphaPoly:
    """Dense polynomial in alpha with integer coefficients.

    Coefficients are stored low-to-high; trailing zeros are trimmed on
    construction, so the zero polynomial stores no coefficients at all and
    equality is plain tuple equality.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        cs = list(coeffs)
        for c in cs:
            if not isinstance(c, int) or isinstance(c, bool):
                raise TypeError(
                    "AlphaPoly coefficients must be ints, got %r" % (c,)
                )
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def zero(cls) -> "AlphaPoly":
        return cls()

    @classmethod
    def one(cls) -> "AlphaPoly":
        return cls((1,))

    @property
    def coefficients(self) -> tuple:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    def coefficient(self, power: int) -> int:
        if power < 0:
            raise IndexError("negative power")
        if power >= len(self._coeffs):
            return 0
        return self._coeffs[power]

    @property
    def leading_coefficient(self) -> int:
        return self._coeffs[-1] if self._coeffs else 0

    def is_zero(self) -> bool:
        return not self._coeffs

    def __add__(self, other: "AlphaPoly") -> "AlphaPoly":
        if not isinstance(other, AlphaPoly):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return AlphaPoly(out)

    def __neg__(self) -> "AlphaPoly":
        return AlphaPoly(tuple(-c for c in self._coeffs))

    def __sub__(self, other: "AlphaPoly") -> "AlphaPoly":
        if not isinstance(other, AlphaPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, AlphaPoly):
            a, b = self._coeffs, other._coeffs
            if not a or not b:
                return AlphaPoly()
            out = [0] * (len(a) + len(b) - 1)
            for i, ca in enumerate(a):
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
            return AlphaPoly(out)
        if isinstance(other, int) and not isinstance(other, bool):
            return AlphaPoly(tuple(other * c for c in self._coeffs))
        return NotImplemented

    __rmul__ = __mul__

    def __call__(self, x: RationalLike) -> RationalLike:
        """Evaluate at x by Horner's rule. Exact for int/Fraction arguments."""
        acc = 0
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlphaPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return "AlphaPoly(%r)" % (list(self._coeffs),)

    def coefficient_strings(self) -> list:
        """Coefficients as decimal strings, low-to-high (JSON-safe at any size)."""
        return [str(c) for c in self._coeffs]

    @classmethod
    def from_coefficient_strings(cls, strings: Sequence[str]) -> "AlphaPoly":
        return cls(int(s) for s in strings)


def falling_factorial_poly(k: int) -> AlphaPoly:
    """The product (-alpha)(-alpha-1)...(-alpha-k+1) as a polynomial in alpha.

    k=0 gives the empty product 1.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    poly = AlphaPoly.one()
    for j in range(k):
        poly = poly * AlphaPoly((-j, -1))
    return poly


def falling_factorial(x: RationalLike, k: int) -> RationalLike:
    """x(x-1)...(x-k+1), exact; the empty product (k=0) is 1."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    out: RationalLike = 1
    for j in range(k):
        out = out * (x - j)
    return out


def binomial(n: int, k: int) -> int:
    """C(n, k) for any integer n (negative allowed) and k >= 0, exactly.

    Each intermediate value equals C(n, i) for some i, so the floor
    divisions below are exact regardless of sign.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    result = 1
    for i in range(1, k + 1):
        result = result * (n - i + 1) // i
    return result


def binomial_rational(x: RationalLike, k: int) -> Fraction:
    """Generalized binomial coefficient C(x, k) = x(x-1)...(x-k+1)/k!."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return Fraction(falling_factorial(Fraction(x), k), math.factorial(k))


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or plain integer decimal strings into a reduced Fraction."""
    m = _RATIONAL_RE.match(text.strip())
    if m is None:
        raise ValueError("not a rational literal: %r" % (text,))
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError("zero denominator: %r" % (text,))
    return Fraction(num, den)


def format_rational(value: RationalLike) -> str:
    """Render a rational as "p" or "p/q", reduced, denominator positive."""
    f = Fraction(value)
    if f.denominator == 1:
        return str(f.numerator)
    return "%d/%d" % (f.numerator, f.denominator)
