"""Scalar kernels shared by every evaluator in the package.

Hosts the validated deformation parameter, the q-bracket, rising-factorial
binomial coefficients, a complex log-Gamma, and the truncation contract
used by all geometric-tail series.  Everything here is a pure function of
its arguments; nothing keeps state.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable

from .errors import NonConvergenceError, PoleError

__all__ = [
    "QParameter",
    "EngineConfig",
    "SeriesValue",
    "DEFAULT_CONFIG",
    "as_qparameter",
    "cpow",
    "q_bracket",
    "gen_binomial",
    "gen_binomial_log_deriv",
    "log_gamma",
    "sum_series_geometric",
]

_HALF_LOG_TWO_PI = 0.5 * math.log(2.0 * math.pi)

# Lanczos coefficients, g = 7, 9 terms; roughly 15 significant digits on the
# right half-plane, which reflection extends to Re(z) < 0.5.
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


@dataclass(frozen=True)
class QParameter:
    """Deformation parameter restricted to the open unit disk.

    |q| < 1 keeps every 1 + q^(h+k) denominator away from zero and makes the
    geometric tails of the series evaluators honest.
    """

    q: complex

    def __post_init__(self):
        object.__setattr__(self, "q", complex(self.q))
        if not abs(self.q) < 1.0:
            raise ValueError(f"deformation parameter needs |q| < 1, got {self.q!r}")


def as_qparameter(q) -> QParameter:
    """Coerce a bare number into a validated QParameter."""
    return q if isinstance(q, QParameter) else QParameter(complex(q))


@dataclass(frozen=True)
class EngineConfig:
    """Numeric policy shared by the series evaluators."""

    rel_tol: float = 1e-12
    max_terms: int = 10000
    fd_step: float = 1e-5

    def __post_init__(self):
        if not 0.0 < self.rel_tol < 1.0:
            raise ValueError("rel_tol must lie in (0, 1)")
        if self.max_terms < 16:
            raise ValueError("max_terms must be at least 16")
        if self.fd_step <= 0.0:
            raise ValueError("fd_step must be positive")


DEFAULT_CONFIG = EngineConfig()


@dataclass(frozen=True)
class SeriesValue:
    """A series result bundled with its truncation diagnostics.

    ``error_bound`` is an absolute bound on the discarded tail (0.0 for sums
    that terminate exactly).  ``converged`` is True when the bound met the
    configured relative tolerance before ``max_terms`` ran out.
    """

    value: complex
    error_bound: float
    terms_used: int
    converged: bool


def _as_small_int(z: complex, bound: int = 4096):
    """Return z as a Python int when it is exactly a small integer, else None."""
    if z.imag != 0.0:
        return None
    r = z.real
    if not math.isfinite(r) or r != int(r) or abs(r) > bound:
        return None
    return int(r)


def cpow(base: complex, exponent: complex) -> complex:
    """base**exponent on the principal branch of the logarithm.

    Integer exponents are dispatched to exact binary powering so that, e.g.,
    q**3 carries no log/exp rounding.  A zero base demands Re(exponent) > 0
    (0**0 = 1 by convention).
    """
    base = complex(base)
    exponent = complex(exponent)
    k = _as_small_int(exponent)
    if k is not None:
        if base == 0 and k < 0:
            raise PoleError("0 raised to a negative power")
        return base**k
    if base == 0:
        if exponent.real > 0:
            return 0j
        raise PoleError(f"0 raised to power {exponent!r}")
    return cmath.exp(exponent * cmath.log(base))


def q_bracket(x, q) -> complex:
    """The q-analog of x: (1 - q**x) / (1 - q).

    For integer x >= 0 this is the geometric sum 1 + q + ... + q^(x-1) and is
    evaluated that way, so the agreement is exact.  Non-integer powers use the
    principal branch.
    """
    qq = as_qparameter(q).q
    xi = _as_small_int(complex(x), bound=256)
    if xi is not None and xi >= 0:
        # Horner form of the finite geometric sum.
        acc = 0j
        for _ in range(xi):
            acc = 1.0 + qq * acc
        return acc
    return (1.0 - cpow(qq, x)) / (1.0 - qq)


def gen_binomial(s, k: int) -> complex:
    """Rising-factorial binomial Gamma(s+k) / (Gamma(s) k!).

    Computed as the finite product prod_{j<k} (s+j)/(j+1), never as a Gamma
    quotient, so a nonpositive-integer s with -s < k yields an exact zero
    rather than pole arithmetic.
    """
    if k < 0:
        raise ValueError("k must be a nonnegative integer")
    s = complex(s)
    out = 1 + 0j
    for j in range(k):
        out *= (s + j) / (j + 1)
        if out == 0:
            return 0j
    return out


def gen_binomial_log_deriv(s, k: int) -> complex:
    """Logarithmic derivative of gen_binomial in s: sum_{j<k} 1/(s+j).

    Raises PoleError when some s+j vanishes; callers needing the derivative
    at such points must use the product rule on the finite product instead.
    """
    if k < 0:
        raise ValueError("k must be a nonnegative integer")
    s = complex(s)
    acc = 0j
    for j in range(k):
        d = s + j
        if d == 0:
            raise PoleError(f"log-derivative pole at s = {s!r}, j = {j}")
        acc += 1.0 / d
    return acc


def log_gamma(z) -> complex:
    """Principal-branch log-Gamma via the Lanczos approximation.

    Accurate to about 14 significant digits for Re(z) in [0.5, 50]; the
    reflection formula covers Re(z) < 0.5.  Nonpositive integers raise
    PoleError.
    """
    z = complex(z)
    if z.imag == 0.0 and z.real <= 0.0 and z.real == int(z.real):
        raise PoleError(f"log-Gamma pole at {z!r}")
    if z.real < 0.5:
        # log Gamma(z) = log(pi / sin(pi z)) - log Gamma(1 - z)
        return math.log(math.pi) - cmath.log(cmath.sin(math.pi * z)) - log_gamma(1.0 - z)
    zz = z - 1.0
    acc = _LANCZOS[0]
    for i, c in enumerate(_LANCZOS[1:], start=1):
        acc += c / (zz + i)
    t = zz + 7.5
    return _HALF_LOG_TWO_PI + (zz + 0.5) * cmath.log(t) - t + cmath.log(acc)


def sum_series_geometric(
    term_fn: Callable[[int], complex],
    ratio_mag: float,
    growth_mag: float,
    config: EngineConfig,
) -> SeriesValue:
    """Accumulate term_fn(0), term_fn(1), ... under the shared truncation rule.

    ``term_fn`` is called once per index, in order.  After adding term K the
    tail is modelled as geometric with ratio rho = ratio_mag * (1 +
    growth_mag / (K+1)); once rho < 1 and |t_K| * rho / (1-rho) <=
    rel_tol * |partial sum|, the sum stops and that bound is reported.
    Exhausting max_terms raises NonConvergenceError carrying the partial.
    """
    total = 0j
    last = 0j
    for k in range(config.max_terms):
        last = term_fn(k)
        total += last
        rho = ratio_mag * (1.0 + growth_mag / (k + 1))
        if rho < 1.0:
            bound = abs(last) * rho / (1.0 - rho)
            if bound <= config.rel_tol * abs(total):
                return SeriesValue(total, bound, k + 1, True)
    raise NonConvergenceError(
        f"series did not meet rel_tol={config.rel_tol} within {config.max_terms} terms",
        partial=SeriesValue(total, abs(last), config.max_terms, False),
    )
