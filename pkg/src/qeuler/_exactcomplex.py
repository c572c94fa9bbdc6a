"""Exact complex-rational arithmetic for the terminating series branches.

A binary64 complex number is an exact element of Q(i), so the finite
alternating sums that define the order -n values can be evaluated without
rounding and converted back to complex once at the end.  This sidesteps the
severe cancellation those sums suffer in floating point: their value is
smaller than the largest term by a factor on the order of (1-q)^n.
"""

from __future__ import annotations

import math
from fractions import Fraction

__all__ = ["terminating_alt_sum"]

# A Q(i) number is a (real, imag) pair of Fractions.
_ZERO = (Fraction(0), Fraction(0))
_ONE = (Fraction(1), Fraction(0))


def _from_complex(z: complex):
    return (Fraction(z.real), Fraction(z.imag))


def _to_complex(a) -> complex:
    return complex(float(a[0]), float(a[1]))


def _add(a, b):
    return (a[0] + b[0], a[1] + b[1])


def _sub(a, b):
    return (a[0] - b[0], a[1] - b[1])


def _mul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _div(a, b):
    d = b[0] * b[0] + b[1] * b[1]
    if d == 0:
        raise ZeroDivisionError("exact complex division by zero")
    return ((a[0] * b[0] + a[1] * b[1]) / d, (a[1] * b[0] - a[0] * b[1]) / d)


def _scale(a, c: int):
    return (a[0] * c, a[1] * c)


def _pow(a, k: int):
    out = _ONE
    base = a
    while k:
        if k & 1:
            out = _mul(out, base)
        base = _mul(base, base)
        k >>= 1
    return out


def terminating_alt_sum(n: int, h: int, q: complex, x: int | None) -> complex:
    """Exact order -n value of the re-expanded alternating series.

    Returns [2]_q * (1-q)^(-n) * sum_{k=0}^{n} (-1)^k C(n,k) f_k evaluated
    over Q(i) and rounded once, where

        f_k = q^(x*k) / (1 + q^(h+k))   for integer x >= 0 (Hurwitz form),
        f_k = -q^(h+k) / (1 + q^(h+k))  for x is None (plain form).
    """
    if n < 0 or h < 0:
        raise ValueError("n and h must be nonnegative integers")
    if x is not None and x < 0:
        raise ValueError("x must be a nonnegative integer")
    qe = _from_complex(q)
    qhk = _pow(qe, h)
    qx = _pow(qe, x) if x is not None else None
    qxk = _ONE
    total = _ZERO
    for k in range(n + 1):
        denom = _add(_ONE, qhk)
        if denom == _ZERO:  # impossible for |q| < 1; guarded anyway
            raise ZeroDivisionError("1 + q^(h+k) vanished")
        num = qxk if x is not None else (-qhk[0], -qhk[1])
        coef = math.comb(n, k) if k % 2 == 0 else -math.comb(n, k)
        total = _add(total, _scale(_div(num, denom), coef))
        qhk = _mul(qhk, qe)
        if qx is not None:
            qxk = _mul(qxk, qx)
    two_q = _add(_ONE, qe)
    pow_one_minus_q = _pow(_sub(_ONE, qe), n)
    return _to_complex(_div(_mul(total, two_q), pow_one_minus_q))
