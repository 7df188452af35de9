"""Truncated-Taylor (jet) arithmetic in binary64, used as an independent
numerical check of the derivative expansion of f(x) = x^(-alpha) * ln^beta(x):

    f^(n)(x) = x^(-alpha-n) * sum_i s(n, i, alpha) * (beta)_i * ln^(beta-i)(x).

A jet of order n holds the Taylor coefficients [f(x0), f'(x0), f''(x0)/2!, ...]
of a function at a point; arithmetic on jets has no truncation error, only
float rounding, so derivatives up to moderate order come out almost exact.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence

from .exact import RationalLike, format_rational
from .noncentral import NoncentralTriangle

Jet = List[float]

MAX_DERIVATIVE_ORDER = 12
RESIDUAL_FLOOR = 1e-300

GRID_ALPHAS = (
    Fraction(-2), Fraction(-1), Fraction(-1, 2), Fraction(0),
    Fraction(1, 2), Fraction(1), Fraction(2),
)
GRID_BETAS = (0.0, 0.5, 1.0, 2.0, 2.5)
GRID_X0S = (1.5, 2.0, math.e, 5.0)
GRID_MAX_ORDER = 8


class JetDomainError(ValueError):
    """Raised when ln/pow is applied to a jet whose constant term is not positive."""


def jet_seed(x0: float, order: int) -> Jet:
    """Jet of the identity function at x0: [x0, 1, 0, ..., 0]."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    out = [0.0] * (order + 1)
    out[0] = float(x0)
    if order >= 1:
        out[1] = 1.0
    return out


def jet_mul(a: Sequence[float], b: Sequence[float]) -> Jet:
    """Truncated Cauchy product; both jets must share one truncation order."""
    if len(a) != len(b):
        raise ValueError("jet orders differ: %d vs %d" % (len(a) - 1, len(b) - 1))
    out = [0.0] * len(a)
    for k in range(len(a)):
        s = 0.0
        for j in range(k + 1):
            s += a[j] * b[k - j]
        out[k] = s
    return out


def jet_scale(a: Sequence[float], c: float) -> Jet:
    return [c * v for v in a]


def jet_ln(a: Sequence[float]) -> Jet:
    """ln of a jet via b' = a'/a; requires a positive constant term."""
    if not a[0] > 0.0:
        raise JetDomainError("ln of a jet needs a positive constant term, got %r" % a[0])
    out = [0.0] * len(a)
    out[0] = math.log(a[0])
    for k in range(1, len(a)):
        s = 0.0
        for j in range(1, k):
            s += j * out[j] * a[k - j]
        out[k] = (a[k] - s / k) / a[0]
    return out


def jet_exp(a: Sequence[float]) -> Jet:
    """exp of a jet via b' = a' * b."""
    out = [0.0] * len(a)
    out[0] = math.exp(a[0])
    for k in range(1, len(a)):
        s = 0.0
        for j in range(1, k + 1):
            s += j * a[j] * out[k - j]
        out[k] = s / k
    return out


def jet_pow_real(a: Sequence[float], p: float) -> Jet:
    """a**p truncated; requires a positive constant term.

    Small nonnegative integer exponents are multiplied out directly so that
    identically-zero higher coefficients stay exactly zero (exp(p*ln a) would
    smear ~1e-16 rounding noise into them); every other exponent goes through
    exp(p * ln a).
    """
    if not a[0] > 0.0:
        raise JetDomainError("pow of a jet needs a positive constant term, got %r" % a[0])
    p = float(p)
    if p.is_integer() and 0 <= p <= 128:
        out = [0.0] * len(a)
        out[0] = 1.0
        for _ in range(int(p)):
            out = jet_mul(out, a)
        return out
    return jet_exp(jet_scale(jet_ln(a), p))


def derivative_by_jets(x0: float, alpha: float, beta: float, n: int) -> float:
    """n-th derivative of x^(-alpha) * ln^beta(x) at x0 by jet arithmetic.

    The function is built as exp(-alpha ln x) * exp(beta ln ln x) (with the
    integer-power shortcut of jet_pow_real), which needs x0 > 1 so that both
    logs are defined for arbitrary real exponents. Beyond order 12 the
    factorial scaling of the top coefficient erodes binary64 accuracy, so
    larger n is rejected; the exact modules carry correctness there.
    """
    if not x0 > 1.0:
        raise ValueError("x0 must exceed 1, got %r" % (x0,))
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > MAX_DERIVATIVE_ORDER:
        raise ValueError("derivative order capped at %d, got %d" % (MAX_DERIVATIVE_ORDER, n))
    x = jet_seed(float(x0), n)
    f = jet_mul(jet_pow_real(x, -float(alpha)), jet_pow_real(jet_ln(x), float(beta)))
    return math.factorial(n) * f[n]


def real_falling_factorial(x: float, k: int) -> float:
    """x(x-1)...(x-k+1) by direct product; exact zero when x is an integer < k."""
    out = 1.0
    for j in range(k):
        out *= x - j
    return out


@dataclass(frozen=True)
class ExpansionTerm:
    """One surviving term of the derivative expansion: coefficient is
    s(n, i, alpha) * (beta)_i as a float, log_exponent is beta - i."""

    index: int
    coefficient: float
    log_exponent: float


def expansion_terms(n: int, alpha: RationalLike, beta: float,
                    triangle: NoncentralTriangle) -> List[ExpansionTerm]:
    """The terms of the derivative expansion of order n; terms whose falling
    factorial (beta)_i vanishes are dropped (they are exactly zero)."""
    a = Fraction(alpha)
    terms = []
    for i in range(n + 1):
        weight = real_falling_factorial(float(beta), i)
        if weight == 0.0:
            continue
        coeff = float(triangle.evaluate(n, i, a)) * weight
        terms.append(ExpansionTerm(index=i, coefficient=coeff,
                                   log_exponent=float(beta) - i))
    return terms


def evaluate_expansion(x0: float, alpha: RationalLike, beta: float, n: int,
                       triangle: NoncentralTriangle) -> float:
    """Evaluate the derivative expansion

        sum_{i=0}^{n} s(n, i, alpha) * (beta)_i * x0^(-alpha-n) * ln(x0)^(beta-i)

    with exact polynomial values rounded to float at the end. Dropping the
    zero-weight terms leaves the sum bit-for-bit unchanged and keeps
    integer-beta cases exact."""
    if not x0 > 1.0:
        raise ValueError("x0 must exceed 1, got %r" % (x0,))
    log_x0 = math.log(x0)
    power = float(x0) ** float(-Fraction(alpha) - n)
    total = 0.0
    for term in expansion_terms(n, alpha, beta, triangle):
        total += term.coefficient * power * log_x0 ** term.log_exponent
    return total


@dataclass(frozen=True)
class ResidualReport:
    """One comparison of the jet derivative against the expansion value."""

    n: int
    alpha: Fraction
    beta: float
    x0: float
    jet_value: float
    expansion_value: float
    rel_residual: float
    passed: bool


def verify_derivative_expansion(triangle: NoncentralTriangle, x0: float,
                                alpha: RationalLike, beta: float, n: int,
                                rel_tol: float = 1e-6) -> ResidualReport:
    """Relative residual |jet - expansion| / max(|jet|, 1e-300); passes iff <= rel_tol."""
    a = Fraction(alpha)
    jet_value = derivative_by_jets(x0, float(a), beta, n)
    expansion_value = evaluate_expansion(x0, a, beta, n, triangle)
    rel = abs(jet_value - expansion_value) / max(abs(jet_value), RESIDUAL_FLOOR)
    return ResidualReport(
        n=n,
        alpha=a,
        beta=float(beta),
        x0=float(x0),
        jet_value=jet_value,
        expansion_value=expansion_value,
        rel_residual=rel,
        passed=rel <= rel_tol,
    )


def expansion_grid(triangle: NoncentralTriangle, rel_tol: float = 1e-6,
                   max_order: int = GRID_MAX_ORDER,
                   alphas=GRID_ALPHAS, betas=GRID_BETAS,
                   x0s=GRID_X0S) -> List[ResidualReport]:
    """Run the validation grid; grid points are independent pure computations."""
    reports = []
    for n in range(max_order + 1):
        for alpha in alphas:
            for beta in betas:
                for x0 in x0s:
                    reports.append(
                        verify_derivative_expansion(triangle, x0, alpha, beta, n, rel_tol)
                    )
    return reports


def residuals_to_json_records(reports: List[ResidualReport]) -> List[dict]:
    """ResidualReports as JSON-ready dicts; all numbers are decimal strings."""
    out = []
    for r in reports:
        out.append(
            {
                "n": str(r.n),
                "alpha": format_rational(r.alpha),
                "beta": repr(r.beta),
                "x0": repr(r.x0),
                "jet_value": repr(r.jet_value),
                "expansion_value": repr(r.expansion_value),
                "rel_residual": repr(r.rel_residual),
                "pass": r.passed,
            }
        )
    return out
