"""Exact arithmetic in Q(q) and symbolic verification of the q-Euler identities.

PolyZ is a dense integer-coefficient polynomial in the indeterminate q;
RationalQ is a quotient of two of them kept in canonical form (coprime,
denominator with positive leading coefficient, no common integer content).
On top of those sit closed forms for the q-Euler numbers and polynomials and
an identity checker that decides the shift/expansion identities by exact
cross-multiplied equality.
"""

from __future__ import annotations

import math
import threading

from .errors import PoleError

__all__ = [
    "PolyZ",
    "RationalQ",
    "ratq_arith",
    "ratq_eval",
    "exact_euler_number",
    "exact_euler_poly",
    "verify_identity",
    "IDENTITY_NAMES",
]


class PolyZ:
    """Integer-coefficient polynomial in q, coefficients indexed by power.

    Invariant: the trailing (highest-power) coefficient is nonzero; the zero
    polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = [int(v) for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls) -> "PolyZ":
        return cls(())

    @classmethod
    def one(cls) -> "PolyZ":
        return cls((1,))

    @classmethod
    def const(cls, c: int) -> "PolyZ":
        return cls((c,))

    @classmethod
    def monomial(cls, c: int, k: int) -> "PolyZ":
        if k < 0:
            raise ValueError("monomial power must be nonnegative")
        return cls((0,) * k + (c,))

    @classmethod
    def bracket(cls, m: int) -> "PolyZ":
        """[m]_q as the explicit geometric sum 1 + q + ... + q^(m-1)."""
        if m < 0:
            raise ValueError("bracket index must be nonnegative")
        return cls((1,) * m)

    # -- structure ------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, PolyZ) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other: "PolyZ") -> "PolyZ":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return PolyZ(out)

    def __neg__(self) -> "PolyZ":
        return PolyZ(tuple(-v for v in self.coeffs))

    def __sub__(self, other: "PolyZ") -> "PolyZ":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return PolyZ(tuple(other * v for v in self.coeffs))
        if not isinstance(other, PolyZ):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return PolyZ()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return PolyZ(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "PolyZ":
        if k < 0:
            raise ValueError("polynomial power must be nonnegative")
        out = PolyZ.one()  # zero**0 == one, matching the 0^0 = 1 convention
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- content and division --------------------------------------------

    def content(self) -> int:
        g = 0
        for v in self.coeffs:
            g = math.gcd(g, v)
        return g

    def primitive(self) -> "PolyZ":
        c = self.content()
        return self if c in (0, 1) else self.div_scalar(c)

    def div_scalar(self, c: int) -> "PolyZ":
        out = []
        for v in self.coeffs:
            q, r = divmod(v, c)
            if r:
                raise ValueError("scalar division is not exact")
            out.append(q)
        return PolyZ(out)

    def divexact(self, d: "PolyZ") -> "PolyZ":
        """Quotient self / d, valid only when the division is exact in Z[q]."""
        if d.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero:
            return PolyZ()
        if self.degree < d.degree:
            raise ValueError("division is not exact")
        r = list(self.coeffs)
        dd, dl, dc = d.degree, d.leading, d.coeffs
        out = [0] * (self.degree - dd + 1)
        for i in range(self.degree - dd, -1, -1):
            top = r[dd + i]
            qc, rem = divmod(top, dl)
            if rem:
                raise ValueError("division is not exact")
            out[i] = qc
            if qc:
                for j in range(dd + 1):
                    r[i + j] -= qc * dc[j]
        if any(r[:dd]):
            raise ValueError("division is not exact")
        return PolyZ(out)

    def eval(self, x):
        """Horner evaluation; works for int, Fraction, float, and complex x."""
        acc = 0
        for v in reversed(self.coeffs):
            acc = acc * x + v
        return acc

    # -- gcd --------------------------------------------------------------

    @staticmethod
    def gcd(a: "PolyZ", b: "PolyZ") -> "PolyZ":
        """Primitive gcd with positive leading coefficient.

        Subresultant pseudo-remainder sequence on integer coefficients, which
        keeps the intermediate coefficient growth polynomial instead of the
        exponential blowup of the naive Euclidean PRS.
        """
        if a.is_zero and b.is_zero:
            return PolyZ()
        if a.is_zero or b.is_zero:
            g = (b if a.is_zero else a).primitive()
            return -g if g.leading < 0 else g
        A, B = a.primitive(), b.primitive()
        if A.degree < B.degree:
            A, B = B, A
        gg, hh = 1, 1
        while True:
            if B.degree == 0:
                result = PolyZ.one()
                break
            delta = A.degree - B.degree
            R = _pseudo_rem(A, B)
            if R.is_zero:
                result = B.primitive()
                break
            if R.degree == 0:
                result = PolyZ.one()
                break
            A, B = B, R.div_scalar(gg * hh**delta)
            gg = A.leading
            hh = hh if delta == 0 else (gg**delta) // (hh ** (delta - 1))
        return -result if result.leading < 0 else result

    # -- rendering ---------------------------------------------------------

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                var = "q" if k == 1 else f"q^{k}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"PolyZ({self.coeffs!r})"


def _pseudo_rem(a: PolyZ, b: PolyZ) -> PolyZ:
    # lc(b)^(deg a - deg b + 1) * a  mod  b, by pre-scaled exact long division
    da, db = a.degree, b.degree
    lb = b.leading
    scale = lb ** (da - db + 1)
    r = [c * scale for c in a.coeffs]
    bc = b.coeffs
    for i in range(da - db, -1, -1):
        top = r[db + i]
        if top == 0:
            continue
        qc, rem = divmod(top, lb)
        assert rem == 0, "pseudo-division lost exactness"
        for j in range(db + 1):
            r[i + j] -= qc * bc[j]
    return PolyZ(r[:db])


class RationalQ:
    """Canonical rational function in q over arbitrary-precision integers.

    Canonical form: numerator and denominator coprime in Q[q], denominator
    leading coefficient positive, and no integer content shared between the
    two.  Equality is decided by cross-multiplication (structural equality
    would do, given canonicity, but cross-multiplication is self-checking).
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = self._coerce_poly(num)
        den = PolyZ.one() if den is None else self._coerce_poly(den)
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero:
            num, den = PolyZ(), PolyZ.one()
        else:
            g = PolyZ.gcd(num, den)
            if g.degree > 0:
                num, den = num.divexact(g), den.divexact(g)
            c = math.gcd(num.content(), den.content())
            if c > 1:
                num, den = num.div_scalar(c), den.div_scalar(c)
            if den.leading < 0:
                num, den = -num, -den
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @staticmethod
    def _coerce_poly(p) -> PolyZ:
        if isinstance(p, PolyZ):
            return p
        if isinstance(p, int):
            return PolyZ.const(p)
        raise TypeError(f"cannot build a rational function from {type(p).__name__}")

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __add__(self, other: "RationalQ") -> "RationalQ":
        return RationalQ(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other: "RationalQ") -> "RationalQ":
        return RationalQ(self.num * other.den - other.num * self.den, self.den * other.den)

    def __neg__(self) -> "RationalQ":
        return RationalQ(-self.num, self.den)

    def __mul__(self, other: "RationalQ") -> "RationalQ":
        return RationalQ(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "RationalQ") -> "RationalQ":
        if other.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        return RationalQ(self.num * other.den, self.den * other.num)

    def __eq__(self, other):
        if not isinstance(other, RationalQ):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        return hash((self.num.coeffs, self.den.coeffs))

    def eval(self, q0):
        den = self.den.eval(q0)
        if den == 0:
            raise PoleError(f"denominator vanishes at q = {q0!r}")
        return self.num.eval(q0) / den

    def __str__(self):
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RationalQ({self.num.coeffs!r}, {self.den.coeffs!r})"


_RQ_ZERO = RationalQ(0)
_RQ_TWO_Q = RationalQ(PolyZ.bracket(2))  # [2]_q = 1 + q


def ratq_arith(a: RationalQ, b: RationalQ, op: str) -> RationalQ:
    """Exact field arithmetic on RationalQ; op is one of add/sub/mul/div."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def ratq_eval(a: RationalQ, q0) -> complex:
    """Evaluate a rational function at a complex point (Horner both sides)."""
    return a.eval(complex(q0))


# -- q-Euler closed forms -----------------------------------------------------

_LOCK = threading.Lock()
_EULER_TABLE: list[RationalQ] = []


def exact_euler_number(n: int) -> RationalQ:
    """The n-th q-Euler number as an exact rational function of q.

    E_0 = (1+q)/2 and, for n >= 1,
    E_n = -(1/(1+q^n)) * sum_{l<n} C(n,l) q^l E_l.
    Values are memoized; the table is guarded so concurrent readers see a
    consistent prefix.
    """
    if n < 0:
        raise ValueError("n must be a nonnegative integer")
    with _LOCK:
        while len(_EULER_TABLE) <= n:
            m = len(_EULER_TABLE)
            if m == 0:
                _EULER_TABLE.append(RationalQ(PolyZ((1, 1)), PolyZ((2,))))
                continue
            acc = _RQ_ZERO
            for l in range(m):
                acc = acc + RationalQ(PolyZ.monomial(math.comb(m, l), l)) * _EULER_TABLE[l]
            one_plus_qm = RationalQ(PolyZ.one() + PolyZ.monomial(1, m))
            _EULER_TABLE.append(-(acc / one_plus_qm))
        return _EULER_TABLE[n]


def exact_euler_poly(n: int, x: int, h: int) -> RationalQ:
    """The two-parameter q-Euler polynomial value E_n(x, h | q), exact.

    Built from the explicit alternating sum
        ([2]_q / (1-q)^n) * sum_{l<=n} C(n,l) (-1)^l q^(l x) / (1 + q^(l+h)),
    with integer x, h >= 0 so every ingredient stays inside Q(q).  The
    apparent (1-q)^n pole must cancel in canonical form; this is asserted by
    checking the reduced denominator at q = 1.
    """
    if n < 0 or x < 0 or h < 0:
        raise ValueError("n, x, h must be nonnegative integers")
    acc = _RQ_ZERO
    for l in range(n + 1):
        coef = math.comb(n, l) if l % 2 == 0 else -math.comb(n, l)
        num = PolyZ.monomial(coef, l * x) * PolyZ.bracket(2)
        den = PolyZ.one() + PolyZ.monomial(1, l + h)
        acc = acc + RationalQ(num, den)
    out = acc / RationalQ(PolyZ((1, -1)) ** n)
    assert out.den.eval(1) != 0, "the (1-q)^n pole failed to cancel"
    return out


# -- identity checking ---------------------------------------------------------

IDENTITY_NAMES = (
    "poly-vs-recurrence",
    "binomial-expansion",
    "even-shift",
    "odd-shift",
    "even-shift-recombined",
    "odd-shift-recombined",
    "even-shift-wrong-sign",
)


def _signed_bracket_power_sum(n: int, k: int, flip: bool) -> RationalQ:
    # sum_{l<k} (-1)^l [l]_q^n, negated when flip is True ((-1)^(l-1) variant).
    # [0]_q^0 contributes 1 via the 0^0 = 1 convention.
    acc = PolyZ.zero()
    for l in range(k):
        term = PolyZ.bracket(l) ** n
        sign = -1 if (l % 2 == 1) != flip else 1
        acc = acc + term * sign
    return RationalQ(acc)


def _binomial_shift_sum(n: int, k: int, upper: int) -> RationalQ:
    # sum_{l<upper} C(n,l) q^(k l) E_l [k]_q^(n-l)
    acc = _RQ_ZERO
    bk = PolyZ.bracket(k)
    for l in range(upper):
        weight = PolyZ.monomial(math.comb(n, l), k * l) * (bk ** (n - l))
        acc = acc + RationalQ(weight) * exact_euler_number(l)
    return acc


def verify_identity(identity: str, n: int, k: int = 0) -> bool:
    """Exact equality test of one q-Euler identity at (n, k).

    Identities and their offset-parity requirements:

    * ``poly-vs-recurrence``   -- E_n(0,0|q) equals the recurrence value
      (k ignored).
    * ``binomial-expansion``   -- E_n(x) = sum_l C(n,l) q^(xl) E_l [x]^(n-l)
      at the integer shift x = k >= 0.
    * ``even-shift``           -- E_n(k) - E_n = [2]_q sum_{l<k} (-1)^(l-1)
      [l]^n, k even.  Flipping that sign breaks the identity; the flipped
      variant is exposed as ``even-shift-wrong-sign`` and kept as a negative
      control that is expected to FAIL.
    * ``odd-shift``            -- E_n(k) + E_n = [2]_q sum_{l<k} (-1)^l [l]^n,
      k odd.
    * ``even-shift-recombined`` / ``odd-shift-recombined`` -- the same shifts
      re-expressed through the binomial expansion, with the second sum
      running to n-1 (the limit forced by the expansion itself).

    Returns True when both sides agree as elements of Q(q).
    """
    if identity not in IDENTITY_NAMES:
        raise ValueError(f"unknown identity {identity!r}; choose from {IDENTITY_NAMES}")
    if n < 0:
        raise ValueError("n must be a nonnegative integer")

    if identity == "poly-vs-recurrence":
        return exact_euler_poly(n, 0, 0) == exact_euler_number(n)

    if identity == "binomial-expansion":
        if k < 0:
            raise ValueError("the shift x = k must be a nonnegative integer")
        return exact_euler_poly(n, k, 0) == _binomial_shift_sum(n, k, n + 1)

    if identity in ("even-shift", "even-shift-recombined", "even-shift-wrong-sign"):
        if k <= 0 or k % 2 != 0:
            raise ValueError(f"{identity} requires a positive even k, got {k}")
    else:
        if k <= 0 or k % 2 != 1:
            raise ValueError(f"{identity} requires a positive odd k, got {k}")

    e_n = exact_euler_number(n)
    if identity == "even-shift":
        lhs = exact_euler_poly(n, k, 0) - e_n
        rhs = _RQ_TWO_Q * _signed_bracket_power_sum(n, k, flip=True)
        return lhs == rhs
    if identity == "even-shift-wrong-sign":
        lhs = exact_euler_poly(n, k, 0) - e_n
        rhs = _RQ_TWO_Q * _signed_bracket_power_sum(n, k, flip=False)
        return lhs == rhs
    if identity == "odd-shift":
        lhs = exact_euler_poly(n, k, 0) + e_n
        rhs = _RQ_TWO_Q * _signed_bracket_power_sum(n, k, flip=False)
        return lhs == rhs

    # recombined forms
    shift = RationalQ(PolyZ.monomial(1, k * n))
    tail = _binomial_shift_sum(n, k, n)
    if identity == "even-shift-recombined":
        lhs = _RQ_TWO_Q * _signed_bracket_power_sum(n, k, flip=True)
        rhs = (shift - RationalQ(1)) * e_n + tail
    else:  # odd-shift-recombined
        lhs = _RQ_TWO_Q * _signed_bracket_power_sum(n, k, flip=False)
        rhs = (shift + RationalQ(1)) * e_n + tail
    return lhs == rhs
