"""Sequence terms, prime generation, sampling, and growth diagnostics."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from mpmath import mp

from ubenford.errors import InsufficientPrecision, InvalidParameter
from ubenford.sequences import (ExpN, Factorial, FracSample, NPowN, PiN,
                                PowerLaw, Primes, SqrtN, frac_sample,
                                growth_criterion, nth_prime, odd_nonsquare,
                                parse_sequence)
from ubenford.transforms import (IDENTITY, LOG10, LOGLOG, PI_SQUARE, SQRT,
                                 eval_transform)


def trial_division_primes(count):
    """Independent oracle for the sieve."""
    found = []
    c = 2
    while len(found) < count:
        if all(c % p for p in found if p * p <= c):
            found.append(c)
        c += 1
    return found


class TestPrimes:
    def test_frozen_milestones(self):
        assert nth_prime(1) == 2
        assert nth_prime(100) == 541
        assert nth_prime(1000) == 7919
        assert nth_prime(10000) == 104729

    def test_against_trial_division(self):
        want = trial_division_primes(200)
        assert [nth_prime(i) for i in range(1, 201)] == want

    def test_rejects_zero_index(self):
        with pytest.raises(InvalidParameter):
            nth_prime(0)


class TestTerms:
    def test_sqrt_n_exactness(self):
        assert SqrtN().nth_term(49).exact
        assert SqrtN().nth_term(49).compare_int(7) == 0
        x = SqrtN().nth_term(2, sig_digits=30)
        assert not x.exact
        assert abs(x.to_float() - math.sqrt(2)) < 1e-15

    def test_pi_n(self):
        x = PiN().nth_term(7, sig_digits=30)
        assert abs(x.to_float() - 7 * math.pi) < 1e-13

    def test_exp_n(self):
        x = ExpN().nth_term(100, sig_digits=30)
        assert x.integer_digits() == 44
        assert ExpN().int_digits_estimate(100) == 44
        assert abs(x.to_float() / math.exp(100) - 1) < 1e-13
        assert ExpN().int_digits_estimate(1000) == 435

    def test_exp_n_single_constant_consistency(self):
        a = ExpN().nth_term(9, sig_digits=30).to_float()
        b = ExpN().nth_term(10, sig_digits=30).to_float()
        assert abs(b / a - math.e) < 1e-12

    def test_exact_integer_sequences(self):
        assert Factorial().nth_term(10).compare_int(3628800) == 0
        assert Factorial().nth_term(10).exact
        assert NPowN().nth_term(5).compare_int(3125) == 0
        assert Primes().nth_term(4).compare_int(7) == 0

    def test_int_digit_estimates_match(self):
        for seq in (SqrtN(), PiN(), Primes(), Factorial(), NPowN()):
            for n in (1, 2, 17, 300):
                est = seq.int_digits_estimate(n)
                real = seq.nth_term(n, sig_digits=30).integer_digits()
                assert est >= real, (seq.name, n)
                assert est <= real + 2, (seq.name, n)

    def test_term_log10(self):
        assert abs(Factorial().term_log10(5) - math.log10(120)) < 1e-12
        assert abs(NPowN().term_log10(4) - math.log10(256)) < 1e-12
        assert abs(ExpN().term_log10(2) - math.log10(math.exp(2))) < 1e-12


class TestPowerLaw:
    def test_inv_pi_token(self):
        pl = PowerLaw("1/pi")
        assert pl.name == "power_law(1/pi)"
        got = pl.nth_term(10, sig_digits=40).to_float()
        mp.dps = 40
        want = float(mp.power(10, 1 / mp.pi))
        mp.dps = 15
        assert abs(got - want) < 1e-14

    def test_integer_exponent_exact(self):
        x = PowerLaw(3.0).nth_term(7)
        assert x.exact and x.compare_int(343) == 0

    def test_half_integer_exact_on_squares(self):
        x = PowerLaw(0.5).nth_term(16)
        assert x.exact and x.compare_int(4) == 0
        y = PowerLaw(0.5).nth_term(2, sig_digits=30)
        assert not y.exact
        assert abs(y.to_float() - math.sqrt(2)) < 1e-14

    def test_float_exponent(self):
        got = PowerLaw(0.37).nth_term(123, sig_digits=40).to_float()
        assert abs(got / 123.0 ** 0.37 - 1) < 1e-13

    def test_rejects_bad_alpha(self):
        with pytest.raises(InvalidParameter):
            PowerLaw(0.0)
        with pytest.raises(InvalidParameter):
            PowerLaw(-1.5)
        with pytest.raises(InvalidParameter):
            PowerLaw(math.inf)


class TestParse:
    def test_names(self):
        assert isinstance(parse_sequence("sqrt_n"), SqrtN)
        assert isinstance(parse_sequence("primes"), Primes)
        assert isinstance(parse_sequence("n_pow_n"), NPowN)

    def test_power_law(self):
        assert parse_sequence("power_law").name == "power_law(1/pi)"
        assert parse_sequence("power_law:1/pi").name == "power_law(1/pi)"
        assert parse_sequence("power_law:0.5").name == "power_law(0.5)"

    def test_unknown(self):
        with pytest.raises(InvalidParameter):
            parse_sequence("fibonacci")


class TestFracSample:
    def test_loglog_excludes_unit_terms(self):
        fs = frac_sample(SqrtN(), LOGLOG, 100)
        assert fs.size == 99 and fs.excluded == 1 and fs.n_requested == 100
        fs = frac_sample(Factorial(), LOGLOG, 50)
        assert fs.size == 49 and fs.excluded == 1

    def test_no_exclusions_on_log(self):
        fs = frac_sample(Primes(), LOG10, 60)
        assert fs.size == 60 and fs.excluded == 0

    def test_values_match_float_oracle(self):
        fs = frac_sample(SqrtN(), LOG10, 200)
        ref = np.array([math.log10(math.sqrt(n)) % 1.0
                        for n in range(1, 201)])
        d = np.abs(fs.values - ref)
        assert np.minimum(d, 1.0 - d).max() < 1e-9

    def test_filtered_subsequence(self):
        fs = frac_sample(SqrtN(), LOG10, 1000, index_filter=odd_nonsquare)
        assert fs.n_requested == 484
        assert fs.size == 484 and fs.excluded == 0

    def test_range_and_dtype(self):
        fs = frac_sample(NPowN(), PI_SQUARE, 40)
        assert fs.values.dtype == np.float64
        assert ((fs.values >= 0) & (fs.values < 1)).all()

    def test_rejects_empty_request(self):
        with pytest.raises(InvalidParameter):
            frac_sample(SqrtN(), LOG10, 0)

    def test_two_routes_for_n_pow_n_log(self):
        # direct certified evaluation vs n*log10(n) in multiprecision
        fs = frac_sample(NPowN(), LOG10, 300)
        mp.dps = 45
        ref = np.array([float(mp.frac(n * mp.log10(n)))
                        for n in range(1, 301)])
        mp.dps = 15
        d = np.abs(fs.values - ref)
        assert np.minimum(d, 1.0 - d).max() < 1e-10

    def test_sqrt_of_n_pow_n_exact_iff_even_or_square(self):
        for n in range(1, 61):
            r = eval_transform(NPowN().nth_term(n), SQRT)
            expect = (n % 2 == 0) or (math.isqrt(n) ** 2 == n)
            assert r.exact == expect, n


class TestOddNonsquare:
    def test_count_matches(self):
        assert sum(odd_nonsquare(n) for n in range(1, 1001)) == 484

    def test_examples(self):
        assert odd_nonsquare(3) and odd_nonsquare(5)
        assert not odd_nonsquare(9)  # odd square
        assert not odd_nonsquare(4)  # even


class TestGrowthCriterion:
    @pytest.mark.parametrize("seq,t,verdict", [
        (Factorial(), LOGLOG, True),
        (NPowN(), LOGLOG, True),
        (Primes(), LOGLOG, True),
        (Primes(), LOG10, True),
        (SqrtN(), LOGLOG, True),
        (ExpN(), LOG10, False),     # constant gaps
        (SqrtN(), PI_SQUARE, False),  # constant gaps
        (Factorial(), LOG10, False),  # growing gaps
        (NPowN(), SQRT, False),
    ])
    def test_verdicts(self, seq, t, verdict):
        assert growth_criterion(seq, t).vanishing == verdict

    def test_structure(self):
        g = growth_criterion(SqrtN(), SQRT, n_max=100)
        # gaps of n**(1/4) at the end of the range
        want = 100 ** 0.25 - 99 ** 0.25
        assert abs(g.last_gap - want) < 1e-9
        with pytest.raises(InvalidParameter):
            growth_criterion(SqrtN(), SQRT, n_max=2)


@given(st.integers(min_value=5, max_value=40))
@settings(max_examples=20, deadline=None)
def test_sample_values_stay_in_unit_interval(n_max):
    for seq in (SqrtN(), PiN(), ExpN()):
        for t in (LOG10, SQRT, IDENTITY):
            fs = frac_sample(seq, t, n_max)
            assert ((fs.values >= 0) & (fs.values < 1)).all()
            assert fs.size + fs.excluded == fs.n_requested
