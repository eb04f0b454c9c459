"""BigReal construction, certified fractional parts, and precision policy."""

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ubenford.bigreal import DEFAULT_POLICY, BigReal, PrecisionPolicy, \
    from_fixed
from ubenford.errors import InsufficientPrecision


class TestConstruction:
    def test_from_int(self):
        x = BigReal.from_int(1234)
        assert (x.mantissa, x.exponent, x.exact) == (1234, 0, True)
        assert x.precision >= 16

    def test_from_decimal_string(self):
        x = BigReal.from_decimal_string("3.7")
        assert (x.mantissa, x.exponent) == (37, -1)
        assert BigReal.from_decimal_string("-0.25").mantissa == -25
        assert BigReal.from_decimal_string("+4.50").mantissa == 450
        assert BigReal.from_decimal_string("12").exponent == 0
        assert BigReal.from_decimal_string(" 0.0 ").is_zero()

    def test_from_float_is_exact_binary(self):
        x = BigReal.from_float(0.1)
        # 0.1 as a double is 3602879701896397 / 2**55
        assert x.mantissa == 3602879701896397 * 5 ** 55
        assert x.exponent == -55
        assert x.exact

    def test_from_float_integers(self):
        assert BigReal.from_float(8.0).compare_int(8) == 0

    def test_from_float_rejects_nonfinite(self):
        with pytest.raises(ValueError):
            BigReal.from_float(math.inf)
        with pytest.raises(ValueError):
            BigReal.from_float(math.nan)

    def test_immutable(self):
        x = BigReal.from_int(1)
        with pytest.raises(AttributeError):
            x.mantissa = 2


class TestStructure:
    def test_integer_digits(self):
        assert BigReal.from_decimal_string("0.5").integer_digits() == 0
        assert BigReal.from_int(1).integer_digits() == 1
        assert BigReal.from_int(999).integer_digits() == 3
        assert BigReal.from_int(1000).integer_digits() == 4
        assert BigReal(9999, -2, 16, True).integer_digits() == 2
        assert BigReal.from_int(0).integer_digits() == 0

    def test_significant_digits(self):
        # 123.45 certified to 10 digits: relative error can reach 1e-9
        assert BigReal(12345, -2, 10, False).significant_digits() == 9
        # 0.0012345: the leading zeros do not count as significant
        assert BigReal(12345, -7, 10, False).significant_digits() == 7
        assert BigReal.from_int(5).significant_digits() > 10 ** 8

    def test_compare(self):
        a = BigReal.from_decimal_string("2.5")
        b = BigReal.from_int(3)
        assert a.compare(b) == -1
        assert b.compare(a) == 1
        assert a.compare(BigReal(25, -1, 16, True)) == 0
        assert a.compare(BigReal(250, -2, 16, True)) == 0
        assert BigReal.from_int(10 ** 40).compare_int(10 ** 40) == 0
        assert BigReal.from_decimal_string("-1.5").compare_int(0) == -1

    def test_sign(self):
        assert BigReal.from_int(-3).sign() == -1
        assert BigReal.from_int(0).sign() == 0
        assert BigReal.from_decimal_string("0.001").sign() == 1


class TestFrac:
    def test_short_decimals_round_trip(self):
        assert BigReal.from_decimal_string("3.7").frac() == 0.7
        assert BigReal.from_decimal_string("0.25").frac() == 0.25
        assert BigReal.from_int(42).frac() == 0.0

    def test_negative_values_wrap_up(self):
        assert BigReal.from_decimal_string("-0.25").frac() == 0.75
        assert BigReal.from_decimal_string("-2.5").frac() == 0.5

    def test_frac_scaled(self):
        x = BigReal.from_decimal_string("5.123456")
        assert x.frac_scaled(3) == 123
        assert x.frac_scaled(8) == 12345600
        assert BigReal.from_decimal_string("-2.75").frac_scaled(2) == 25

    def test_huge_exact_int(self):
        assert BigReal.from_int(10 ** 5000 + 7).frac() == 0.0

    def test_insufficient_precision(self):
        # 13 integer digits certified to 20 leaves 7 fractional digits
        x = BigReal(12345678901234567890123, -10, 20, False)
        assert x.frac_scaled(7) == 4567890
        with pytest.raises(InsufficientPrecision):
            x.frac_scaled(8)
        with pytest.raises(InsufficientPrecision):
            x.frac(12)

    def test_exact_values_never_refuse(self):
        x = BigReal.from_decimal_string("123456789012345.625")
        assert x.frac() == 0.625

    @given(st.floats(min_value=1e-6, max_value=0.999999))
    def test_from_float_frac_identity(self, v):
        # 24 materialized fractional digits pin down any double here
        assert BigReal.from_float(v).frac() == v

    @given(st.floats(min_value=0.0, max_value=1e6, exclude_max=True))
    def test_frac_range(self, v):
        f = BigReal.from_float(v).frac()
        assert 0.0 <= f < 1.0


class TestArithmetic:
    def test_mul_exact(self):
        a = BigReal.from_decimal_string("0.25")
        b = BigReal.from_int(4)
        c = a.mul(b)
        assert c.exact and c.compare_int(1) == 0

    def test_mul_truncates_to_min_precision(self):
        a = BigReal(31415926535897932384, -19, 20, False)
        b = BigReal(27182818284590452353, -19, 12, False)
        c = a.mul(b)
        assert not c.exact
        assert c.precision == 12
        assert abs(c.to_float() - math.pi * math.e) < 1e-9

    def test_square(self):
        s = BigReal.from_int(12).square()
        assert s.compare_int(144) == 0

    def test_add_int(self):
        x = BigReal.from_decimal_string("0.75").add_int(2)
        assert x.compare(BigReal.from_decimal_string("2.75")) == 0
        y = BigReal(75, -2, 18, False).add_int(2)
        assert not y.exact
        assert y.precision == 19  # grew by the new leading digit
        assert y.frac() == 0.75

    def test_add_int_exact_negative(self):
        x = BigReal.from_decimal_string("0.25").add_int(-1)
        assert x.frac() == 0.25
        assert x.sign() == -1


class TestConversion:
    def test_to_float(self):
        assert BigReal.from_decimal_string("2.5").to_float() == 2.5
        assert BigReal.from_int(0).to_float() == 0.0
        assert BigReal.from_int(10 ** 400).to_float() == math.inf
        assert BigReal(1, -400, 16, True).to_float() == 0.0
        big = BigReal.from_int(123456789123456789123456789)
        assert abs(big.to_float() - 1.23456789123456789e26) < 1e11

    def test_from_fixed(self):
        x = from_fixed(31415926535897932384, 19)
        assert abs(x.to_float() - math.pi) < 1e-18
        y = from_fixed(27182818284590452353, 19, exponent10=43, precision=19)
        assert abs(y.to_float() - 2.7182818284590452e43) < 1e28


class TestPrecisionPolicy:
    def test_defaults(self):
        p = DEFAULT_POLICY
        assert p.initial == 32 and p.guard == 15
        assert p.agreement == 12 and p.cap == 30000

    def test_validation(self):
        with pytest.raises(ValueError):
            PrecisionPolicy(guard=14)
        with pytest.raises(ValueError):
            PrecisionPolicy(agreement=11)
        with pytest.raises(ValueError):
            PrecisionPolicy(initial=100, cap=150)
        PrecisionPolicy(initial=64, guard=20, agreement=16, cap=200)
