from fractions import Fraction

import pytest

from qeuler import (
    PolyZ,
    RationalQ,
    classical_euler_number,
    euler_number,
    exact_euler_number,
    exact_euler_poly,
    ratq_arith,
    ratq_eval,
    verify_identity,
)
from qeuler.errors import PoleError


def RQ(num, den=None):
    return RationalQ(PolyZ(num), PolyZ(den) if den is not None else None)


class TestPolyZ:
    def test_trailing_zeros_trimmed(self):
        assert PolyZ((1, 2, 0, 0)).coeffs == (1, 2)
        assert PolyZ((0, 0)).is_zero

    def test_zero_power_convention(self):
        assert PolyZ.zero() ** 0 == PolyZ.one()
        assert PolyZ.zero() ** 3 == PolyZ.zero()

    def test_bracket(self):
        assert PolyZ.bracket(0).is_zero
        assert PolyZ.bracket(3).coeffs == (1, 1, 1)

    def test_gcd_subresultant(self):
        # (1+q)(1-q+q^2) = 1+q^3 shares (1+q) with (1+q)^2
        a = PolyZ((1, 0, 0, 1))
        b = PolyZ((1, 2, 1))
        assert PolyZ.gcd(a, b) == PolyZ((1, 1))
        assert PolyZ.gcd(a, PolyZ((7,))) == PolyZ.one()

    def test_divexact_rejects_inexact(self):
        with pytest.raises(ValueError):
            PolyZ((1, 1, 1)).divexact(PolyZ((1, 1)))


class TestCanonicalForm:
    def test_shared_content_removed(self):
        r = RQ((2, 2), (4,))
        assert (str(r.num), str(r.den)) == ("1 + q", "2")

    def test_polynomial_factor_cancelled(self):
        # (1-q^2)/(1-q) -> (1+q)/1
        r = RQ((1, 0, -1), (1, -1))
        assert str(r) == "(1 + q)/(1)"

    def test_denominator_leading_positive(self):
        r = RQ((1,), (1, -2))  # 1/(1-2q) -> (-1)/(-1+2q)
        assert r.den.leading > 0
        assert str(r) == "(-1)/(-1 + 2*q)"

    def test_idempotent(self):
        r = RQ((-1, 2, 2, -1), (2, 0, 2, 2, 0, 2))
        again = RationalQ(r.num, r.den)
        assert (again.num, again.den) == (r.num, r.den)

    def test_zero_denominator_rejected(self):
        with pytest.raises(ZeroDivisionError):
            RQ((1,), (0,))


class TestArithmetic:
    def test_add_example(self):
        # (1+q)/2 + (-1)/2 = q/2
        out = ratq_arith(RQ((1, 1), (2,)), RQ((-1,), (2,)), "add")
        assert out == RQ((0, 1), (2,))

    def test_mul_cancellation(self):
        # ((1-q)/(1+q)) * ((1+q)/1) = 1-q
        out = ratq_arith(RQ((1, -1), (1, 1)), RQ((1, 1)), "mul")
        assert out == RQ((1, -1))

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            ratq_arith(RQ((1,)), RQ((0,)), "div")

    def test_equality_cross_multiplied(self):
        assert RQ((1, 1), (2,)) == RQ((2, 2), (4,))
        assert RQ((1,)) != RQ((0, 1))


class TestEval:
    def test_simple(self):
        assert ratq_eval(RQ((1, 1), (2,)), 0.5) == pytest.approx(0.75)

    def test_hand_value(self):
        # -(1-q)/(2(1+q^2)) at q = 1/2 is -0.2
        r = RQ((-1, 1), (2, 0, 2))
        assert ratq_eval(r, 0.5) == pytest.approx(-0.2)

    def test_pole(self):
        with pytest.raises(PoleError):
            ratq_eval(RQ((1,), (1, -1)), 1.0)


class TestExactEulerNumbers:
    def test_order_zero(self):
        assert exact_euler_number(0) == RQ((1, 1), (2,))

    def test_order_one_constant(self):
        assert exact_euler_number(1) == RQ((-1,), (2,))

    def test_order_three_matches_hand_recurrence(self):
        # (-1+2q+2q^2-q^3) / (2(1+q^2)(1+q^3)), compared after canonicalization
        expected = RQ((-1, 2, 2, -1), (2, 0, 2, 2, 0, 2))
        assert exact_euler_number(3) == expected
        assert ratq_eval(exact_euler_number(3), 0.5).real == pytest.approx(2 / 15, rel=1e-14)

    def test_rendering(self):
        assert str(exact_euler_number(1)) == "(-1)/(2)"
        assert str(exact_euler_number(2)) == "(-1 + q)/(2 + 2*q^2)"

    def test_classical_limit_at_q_one(self):
        for n in range(9):
            assert exact_euler_number(n).eval(Fraction(1)) == classical_euler_number(n)

    def test_matches_numeric_engine(self):
        for q0 in (0.2, 0.5, 0.9):
            for n in range(11):
                ev = ratq_eval(exact_euler_number(n), q0)
                nv = euler_number(n, q0)
                assert abs(ev - nv) <= 1e-11 * max(abs(ev), 1e-300)


class TestExactEulerPoly:
    def test_order_zero(self):
        assert exact_euler_poly(0, 0, 0) == RQ((1, 1), (2,))

    def test_reduces_to_numbers(self):
        for n in range(11):
            assert exact_euler_poly(n, 0, 0) == exact_euler_number(n)

    def test_hand_value_at_shift_two(self):
        assert ratq_eval(exact_euler_poly(2, 2, 0), 0.5).real == pytest.approx(1.3, rel=1e-14)

    def test_pole_cancellation(self):
        for n in range(1, 9):
            for x in (0, 1, 3):
                assert exact_euler_poly(n, x, 1).den.eval(1) != 0

    def test_rejects_negative_arguments(self):
        with pytest.raises(ValueError):
            exact_euler_poly(2, -1, 0)


class TestIdentities:
    def test_poly_vs_recurrence(self):
        assert all(verify_identity("poly-vs-recurrence", n) for n in range(9))

    def test_binomial_expansion(self):
        assert all(
            verify_identity("binomial-expansion", n, x) for n in range(9) for x in range(5)
        )

    def test_even_shift(self):
        assert all(
            verify_identity("even-shift", n, k) for n in range(9) for k in (2, 4, 6)
        )

    def test_odd_shift(self):
        assert all(
            verify_identity("odd-shift", n, k) for n in range(9) for k in (1, 3, 5)
        )

    def test_recombined_forms(self):
        assert all(
            verify_identity("even-shift-recombined", n, k)
            for n in range(9)
            for k in (2, 4, 6)
        )
        assert all(
            verify_identity("odd-shift-recombined", n, k)
            for n in range(9)
            for k in (1, 3, 5)
        )

    def test_wrong_sign_variant_fails(self):
        # flipping the sign negates the right side; hand check at q = 1/2
        # gives LHS = 1.5 against a flipped RHS of -1.5
        assert not verify_identity("even-shift-wrong-sign", 2, 2)

    def test_odd_shift_at_k_one_reduces_to_recurrence(self):
        assert verify_identity("odd-shift-recombined", 3, 1)

    def test_parity_enforced(self):
        with pytest.raises(ValueError):
            verify_identity("even-shift", 2, 3)
        with pytest.raises(ValueError):
            verify_identity("odd-shift", 2, 2)
        with pytest.raises(ValueError):
            verify_identity("even-shift-recombined", 2, 1)

    def test_unknown_identity(self):
        with pytest.raises(ValueError):
            verify_identity("nope", 2, 2)
