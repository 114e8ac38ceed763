import random

import pytest

from tljones.laurent import ExactDivisionError, LaurentPoly, convert_to_t


def random_poly(rng: random.Random, span: int = 6, size: int = 5) -> LaurentPoly:
    return LaurentPoly(
        {rng.randint(-span, span): rng.randint(-9, 9) for _ in range(rng.randint(0, size))}
    )


class TestArithmetic:
    def test_zero_normalization(self):
        assert LaurentPoly({3: 0, 1: 2}).coeffs == {1: 2}
        assert LaurentPoly({}).is_zero()

    def test_add_sub(self):
        a = LaurentPoly({0: 1, 2: 3})
        b = LaurentPoly({2: -3, -1: 4})
        assert a + b == LaurentPoly({0: 1, -1: 4})
        assert (a + b) - b == a

    def test_mul(self):
        a = LaurentPoly({1: 1, -1: 1})
        assert a * a == LaurentPoly({2: 1, 0: 2, -2: 1})

    def test_int_operands(self):
        a = LaurentPoly({1: 2})
        assert a + 1 == LaurentPoly({1: 2, 0: 1})
        assert 3 * a == LaurentPoly({1: 6})
        assert a - 1 == LaurentPoly({1: 2, 0: -1})

    def test_pow(self):
        d = LaurentPoly({2: -1, -2: -1})
        assert d**0 == LaurentPoly.one()
        assert d**3 == d * d * d

    def test_pow_negative_rejected(self):
        with pytest.raises(ValueError):
            LaurentPoly({1: 1}) ** -1

    def test_ring_properties_random(self):
        rng = random.Random(0)
        for _ in range(100):
            a, b, c = (random_poly(rng) for _ in range(3))
            assert (a + b) * c == a * c + b * c
            assert a * b == b * a
            assert (a * b) * c == a * (b * c)

    def test_substitute_inverse_is_involution(self):
        rng = random.Random(1)
        for _ in range(50):
            a = random_poly(rng)
            assert a.substitute_inverse().substitute_inverse() == a


class TestDivision:
    def test_exact_division(self):
        d = LaurentPoly({2: -1, -2: -1})
        rng = random.Random(2)
        for _ in range(50):
            q = random_poly(rng)
            if q.is_zero():
                continue
            assert (q * d).div_exact(d) == q

    def test_inexact_division_raises(self):
        d = LaurentPoly({2: -1, -2: -1})
        with pytest.raises(ExactDivisionError):
            LaurentPoly({0: 1}).div_exact(d)

    def test_zero_dividend(self):
        assert LaurentPoly.zero().div_exact(LaurentPoly({1: 3})) == LaurentPoly.zero()


class TestEvaluation:
    def test_monomial(self):
        assert LaurentPoly({3: 2}).evaluate(2.0) == pytest.approx(16.0)

    def test_negative_exponent(self):
        assert LaurentPoly({-2: 1}).evaluate(2.0) == pytest.approx(0.25)

    def test_matches_horner_free_form(self):
        rng = random.Random(3)
        for _ in range(20):
            a = random_poly(rng)
            x = complex(rng.uniform(0.5, 2), rng.uniform(-1, 1))
            expected = sum(c * x**e for e, c in a.coeffs.items())
            assert a.evaluate(x) == pytest.approx(expected)


class TestVariableChange:
    def test_t_conversion(self):
        # trefoil: A^4 + A^12 - A^16  ->  t^-1 + t^-3 - t^-4
        poly = LaurentPoly({4: 1, 12: 1, 16: -1})
        assert convert_to_t(poly) == LaurentPoly({-1: 1, -3: 1, -4: -1})

    def test_conversion_rejects_bad_exponent(self):
        with pytest.raises(ValueError, match="divisible by 4"):
            convert_to_t(LaurentPoly({2: -1, 10: -1}))


class TestSerialization:
    def test_json_round_trip(self):
        rng = random.Random(4)
        for _ in range(30):
            a = random_poly(rng)
            assert LaurentPoly.from_json_dict(a.to_json_dict("A")) == a

    def test_json_shape(self):
        data = LaurentPoly({-1: 2, 3: -1}).to_json_dict("t")
        assert data == {"variable": "t", "terms": [[-1, "2"], [3, "-1"]]}

    def test_big_coefficients_survive(self):
        big = 12345678901234567890123456789
        a = LaurentPoly({0: big})
        assert LaurentPoly.from_json_dict(a.to_json_dict("A")).coeffs[0] == big

    def test_format(self):
        assert LaurentPoly({2: -1, -2: -1}).format() == "-A^-2 - A^2"
        assert LaurentPoly.zero().format() == "0"
