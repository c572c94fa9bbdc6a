import cmath
import math
import random
from fractions import Fraction

import pytest

from qeuler import (
    EngineConfig,
    QParameter,
    classical_euler_number,
    classical_euler_poly,
    euler_number,
    euler_poly,
    euler_poly_series_oracle,
    euler_table,
    q_bracket,
)
from qeuler.errors import NonConvergenceError

Q_SET = (0.2, 0.5, 0.9, 0.3 + 0.4j)


def rel_err(a, b):
    return abs(a - b) / max(abs(a), abs(b), 1e-300)


class TestEulerNumbers:
    def test_first_values_at_half(self):
        q = QParameter(0.5)
        assert euler_number(0, q) == pytest.approx(0.75)
        assert euler_number(1, q) == pytest.approx(-0.5)
        assert euler_number(2, q) == pytest.approx(-0.2)
        assert euler_number(3, q).real == pytest.approx(2 / 15, rel=1e-13)

    def test_order_one_is_constant_in_q(self):
        rng = random.Random(2101)
        for _ in range(100):
            r = rng.uniform(0, 0.95)
            phi = rng.uniform(0, 2 * math.pi)
            q = QParameter(r * cmath.exp(1j * phi))
            assert abs(euler_number(1, q) + 0.5) <= 1e-14

    def test_table_invariants(self):
        for qv in Q_SET:
            table = euler_table(10, qv)
            q = table.q.q
            assert table.values[0] == (1 + q) / 2
            # re-substitute each value into the recurrence
            for n in range(1, 11):
                acc = sum(
                    math.comb(n, l) * q**l * table.values[l] for l in range(n)
                )
                resid = table.values[n] + acc / (1 + q**n)
                assert abs(resid) <= 1e-13 * max(1.0, abs(table.values[n]))

    def test_classical_limit(self):
        for n in range(7):
            gap = abs(euler_number(n, 0.9999) - float(classical_euler_number(n)))
            assert gap <= 1e-2


class TestConcurrency:
    def test_memo_tables_are_consistent_across_threads(self):
        import threading

        results = []

        def worker():
            results.append(
                tuple(euler_number(n, QParameter(0.77)) for n in range(30, 0, -1))
            )

        threads = [threading.Thread(target=worker) for _ in range(8)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        assert all(r == results[0] for r in results)


class TestClassical:
    def test_numbers(self):
        assert classical_euler_number(0) == 1
        assert classical_euler_number(2) == 0
        assert classical_euler_number(3) == Fraction(1, 4)
        assert classical_euler_number(9) == Fraction(-31, 2)

    def test_poly(self):
        assert classical_euler_poly(0, 123.4) == 1
        assert abs(classical_euler_poly(1, 0.5)) == 0  # x - 1/2
        assert abs(classical_euler_poly(2, 1)) == 0  # x^2 - x


class TestEulerPoly:
    def test_hand_value(self):
        assert euler_poly(2, 2, 0, QParameter(0.5)).real == pytest.approx(1.3, rel=1e-13)

    def test_reduces_to_numbers_at_zero_shift(self):
        for qv in Q_SET:
            qp = QParameter(qv)
            for n in range(9):
                assert rel_err(euler_poly(n, 0, 0, qp), euler_number(n, qp)) <= 1e-13

    def test_shift_one_order_one(self):
        # binomial-shift expansion: E_1(x) = E_0 [x]_q + q^x E_1,
        # so at x = 1 the value is (1+q)/2 - q/2 = 1/2 for every q
        for qv in Q_SET:
            assert euler_poly(1, 1, 0, QParameter(qv)) == pytest.approx(0.5, abs=1e-13)

    def test_integer_and_expansion_paths_agree(self):
        # the exact integer-shift path and the binomial-shift expansion meet
        # at integer x approached as a float computation
        for qv in (0.3, 0.8):
            qp = QParameter(qv)
            for n in range(7):
                a = euler_poly(n, 2, 0, qp)
                b = euler_poly(n, 2.0000000001, 0, qp)
                assert abs(a - b) <= 1e-7 * max(1.0, abs(a))

    def test_weight_exponent(self):
        # E_0(x, h | q) = [2]_q / (1 + q^h)
        for qv in Q_SET:
            for h in range(3):
                expect = (1 + complex(qv)) / (1 + complex(qv) ** h)
                assert rel_err(euler_poly(0, 0, h, QParameter(qv)), expect) <= 1e-14

    def test_complex_shift(self):
        # expansion evaluated directly for complex x
        qp = QParameter(0.5)
        x = 0.7 + 0.3j
        q = 0.5
        total = sum(
            math.comb(3, l)
            * q ** (x * l)
            * euler_poly(l, 0, 0, qp)
            * q_bracket(x, qp) ** (3 - l)
            for l in range(4)
        )
        assert rel_err(euler_poly(3, x, 0, qp), total) <= 1e-12

    def test_validation(self):
        with pytest.raises(ValueError):
            euler_poly(-1, 0, 0, QParameter(0.5))
        with pytest.raises(ValueError):
            euler_poly(2, 0, -1, QParameter(0.5))


class TestNumericShiftIdentities:
    def test_odd_shift(self):
        for qv in Q_SET:
            qp = QParameter(qv)
            q = complex(qv)
            for n in range(9):
                for k in (1, 3, 5):
                    lhs = euler_poly(n, k, 0, qp) + euler_number(n, qp)
                    rhs = (1 + q) * sum(
                        (-1) ** l * q_bracket(l, qp) ** n for l in range(k)
                    )
                    assert abs(lhs - rhs) <= 1e-10 * max(abs(rhs), 1.0)

    def test_even_shift_sign(self):
        for qv in Q_SET:
            qp = QParameter(qv)
            q = complex(qv)
            for n in range(9):
                for k in (2, 4, 6):
                    lhs = euler_poly(n, k, 0, qp) - euler_number(n, qp)
                    rhs = (1 + q) * sum(
                        (-1) ** (l - 1) * q_bracket(l, qp) ** n for l in range(k)
                    )
                    assert abs(lhs - rhs) <= 1e-10 * max(abs(rhs), 1.0)


class TestSeriesOracle:
    def test_matches_number(self):
        sv = euler_poly_series_oracle(2, 0, 0, QParameter(0.5), depth=2)
        assert sv.converged
        assert abs(sv.value - (-0.2)) <= 1e-8

    def test_convergent_geometric_case(self):
        # order 0 with weight exponent 1: [2]_q * sum (-q)^k = [2]_q/(1+q) = 1
        sv = euler_poly_series_oracle(0, 0, 1, QParameter(0.5))
        assert abs(sv.value - 1.0) <= 1e-10

    def test_matches_poly_at_shift_two(self):
        sv = euler_poly_series_oracle(2, 2, 0, QParameter(0.5), depth=2)
        assert abs(sv.value - 1.3) <= 1e-8

    def test_agreement_grid(self):
        for qv in (0.3, 0.5, 0.8):
            qp = QParameter(qv)
            for n in range(9):
                for x in (0.0, 0.5, 1.0, 2.0):
                    sv = euler_poly_series_oracle(n, x, 0, qp, depth=2)
                    assert abs(sv.value - euler_poly(n, x, 0, qp)) <= 1e-8

    def test_error_bound_reported(self):
        sv = euler_poly_series_oracle(3, 0.5, 0, QParameter(0.5))
        assert sv.error_bound >= 0
        assert sv.terms_used >= 16

    def test_non_convergence(self):
        cfg = EngineConfig(max_terms=24)
        with pytest.raises(NonConvergenceError):
            euler_poly_series_oracle(8, 0, 0, QParameter(0.9), depth=1, config=cfg)

    def test_rejects_complex_q(self):
        with pytest.raises(ValueError):
            euler_poly_series_oracle(2, 0, 0, QParameter(0.3 + 0.4j))

    def test_rejects_negative_weight(self):
        with pytest.raises(ValueError):
            euler_poly_series_oracle(2, 0, -1, QParameter(0.5))
