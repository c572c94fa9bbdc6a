"""Continuation of the q-Euler numbers and polynomials to real order.

The number continuation is the zeta reflection E_q(s) = zeta_q(-s): it runs
through every q-Euler number of positive order and through the positive-order
zeta values at negative arguments.  Its derivative is -zeta_q'(-s) by the
chain rule (the reflection flips the sign of the derivative, whatever the
evaluation point).

The polynomial family deforms through a Gamma-weighted sum over the integer
part of the order,

    E_q(s, w) = sum_{k=-1}^{[s]} Gamma(1+s) C(k+s-[s]) q^((k+s-[s])w)
                [w]_q^([s]-k) / (Gamma(1+k+s-[s]) Gamma(1+[s]-k)),

with [s] the floor and C the continued order-coefficient function.  At
integer s the k = -1 term is 0 (a 1/Gamma(0) factor) and the sum collapses
to the binomial expansion of E_{s,q}(w).

One wrinkle: the plain zeta continuation misses the n = 0 term of the
defining series, so its value at order 0 sits exactly [2]_q below the
order-0 number E_{0,q} = [2]_q / 2.  Fed naively into the sum above, that
defect would make the deformation jump by [2]_q [w]^([s]+1) at every integer
order instead of joining the polynomial curves.  The coefficient function C
therefore blends the defect back in linearly over arguments in (-1, 1):
C(a) = zeta_q(-a) + [2]_q max(0, 1 - |a|).  This restores C(0) = E_{0,q},
leaves every other integer argument untouched, and makes the deformation
continuous; elsewhere the blend only affects the interior of the first unit
interval of arguments.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import CurveSampleError, QEulerError
from .kernel import (
    DEFAULT_CONFIG,
    EngineConfig,
    QParameter,
    as_qparameter,
    cpow,
    log_gamma,
    q_bracket,
)
from .zeta import qzeta, qzeta_deriv

__all__ = [
    "CurveGrid",
    "euler_continuation",
    "euler_continuation_deriv",
    "euler_poly_continuation",
    "curve_grid",
]


def euler_continuation(s, q, config: EngineConfig | None = None) -> complex:
    """E_q(s) = zeta_q(-s): the q-Euler numbers continued in the order.

    Matches euler_number(n, q) at integer s = n >= 1 and equals the
    positive-order zeta values at negative integers.
    """
    return qzeta(-complex(s), 0, q, config).value


def euler_continuation_deriv(s, q, config: EngineConfig | None = None) -> complex:
    """d/ds E_q(s) = -zeta_q'(-s) (chain rule through the reflection)."""
    return -qzeta_deriv(-complex(s), 0, q, config=config).value


@lru_cache(maxsize=8192)
def _order_coefficient(a: float, qc: complex, cfg: EngineConfig) -> complex:
    # Continued coefficient C(a) with the order-0 defect blended back in.
    v = qzeta(complex(-a), 0, QParameter(qc), cfg).value
    if abs(a) < 1.0:
        v += (1.0 + qc) * (1.0 - abs(a))
    return v


def euler_poly_continuation(s, w, q, config: EngineConfig | None = None) -> complex:
    """The deformed polynomial value E_q(s, w) for real order s >= 0.

    At integer s this telescopes to the binomial expansion
    sum_k C(s,k) E_{k,q} q^(k w) [w]_q^(s-k); between integers it deforms one
    polynomial curve into the next.  Gamma ratios are taken in log space so
    orders up to ~50 stay in range.
    """
    sc = complex(s)
    if sc.imag != 0.0:
        raise ValueError("the polynomial continuation takes a real order")
    sv = sc.real
    if sv < 0:
        raise ValueError("the polynomial continuation needs s >= 0")
    qp = as_qparameter(q)
    cfg = config or DEFAULT_CONFIG
    fs = math.floor(sv)
    frac = sv - fs
    qq = qp.q
    ww = complex(w)
    bw = q_bracket(ww, qp)
    bw_pows = [1 + 0j]
    for _ in range(fs + 1):
        bw_pows.append(bw_pows[-1] * bw)
    lg_top = log_gamma(1.0 + sv)
    total = 0j
    for k in range(-1, fs + 1):
        if k == -1 and frac == 0.0:
            continue  # 1/Gamma(0) = 0
        arg = k + frac
        weight = cmath.exp(lg_top - log_gamma(1.0 + k + frac) - log_gamma(1.0 + fs - k))
        coeff = _order_coefficient(arg, qq, cfg)
        total += weight * coeff * cpow(qq, arg * ww) * bw_pows[fs - k]
    return total


@dataclass(frozen=True)
class CurveGrid:
    """Rectangular sampling of the deformation E_q(s, w), s outer, w inner."""

    q: QParameter
    s_values: tuple[float, ...]
    w_values: tuple[float, ...]
    values: tuple[tuple[complex, ...], ...]
    metadata: dict

    def __post_init__(self):
        if len(self.values) != len(self.s_values):
            raise ValueError("grid row count does not match s sampling")
        for row in self.values:
            if len(row) != len(self.w_values):
                raise ValueError("grid column count does not match w sampling")


def inclusive_range(lo: float, hi: float, step: float) -> list[float]:
    """Points lo, lo+step, ...; endpoints inclusive, final point clamped to hi."""
    if step <= 0:
        raise ValueError("step must be positive")
    if hi < lo:
        raise ValueError("range must run upward")
    count = int(math.floor((hi - lo) / step + 1e-9)) + 1
    pts = [lo + i * step for i in range(count)]
    if pts[-1] > hi:
        pts[-1] = hi
    return pts


def curve_grid(
    s_min: float,
    s_max: float,
    s_step: float,
    w_min: float,
    w_max: float,
    w_step: float,
    q,
    config: EngineConfig | None = None,
) -> CurveGrid:
    """Sample euler_poly_continuation over an inclusive (s, w) grid.

    Samples are independent; they are evaluated in deterministic order
    (s outer, w inner) and a failing sample aborts with its grid indices.
    """
    if s_min < 0:
        raise ValueError("s_min must be nonnegative")
    qp = as_qparameter(q)
    cfg = config or DEFAULT_CONFIG
    svals = inclusive_range(s_min, s_max, s_step)
    wvals = inclusive_range(w_min, w_max, w_step)
    rows = []
    for i, sv in enumerate(svals):
        row = []
        for j, wv in enumerate(wvals):
            try:
                z = euler_poly_continuation(sv, wv, qp, cfg)
            except (QEulerError, ValueError, OverflowError) as exc:
                raise CurveSampleError(
                    f"sample failed at s[{i}]={sv!r}, w[{j}]={wv!r}: {exc}", i, j
                ) from exc
            if not (math.isfinite(z.real) and math.isfinite(z.imag)):
                raise CurveSampleError(
                    f"non-finite sample at s[{i}]={sv!r}, w[{j}]={wv!r}", i, j
                )
            row.append(z)
        rows.append(tuple(row))
    metadata = {
        "rel_tol": cfg.rel_tol,
        "max_terms": cfg.max_terms,
        "fd_step": cfg.fd_step,
        "s_range": {"min": s_min, "max": s_max, "step": s_step},
        "w_range": {"min": w_min, "max": w_max, "step": w_step},
    }
    return CurveGrid(qp, tuple(svals), tuple(wvals), tuple(rows), metadata)
