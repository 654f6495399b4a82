import pytest
from hypothesis import given, settings, strategies as st

from gotzmann.combinatorics import binom, borel_enumerate, enumerate_monomials
from gotzmann.maxgen import (
    MgDecomposition,
    f_poly_eval,
    maxgen_of_set,
    mg_closed,
    mg_oracle,
    mg_shifted,
    target_decompose,
)
from gotzmann.monomial import Monomial, deg, embed, mul, one, parse, truncate, variable_power


def slice_elements(n_lo=1, n_hi=4, d_lo=0, d_hi=5):
    out = []
    for n in range(n_lo, n_hi + 1):
        for d in range(d_lo, d_hi + 1):
            out.extend(enumerate_monomials(n, d))
    return out


def test_maxgen_known_value():
    assert str(maxgen_of_set(enumerate_monomials(3, 2))) == "x1*x2^2*x3^3"


def test_maxgen_of_empty_set_is_unit():
    from gotzmann.combinatorics import MonomialSet

    assert maxgen_of_set(MonomialSet(3, ())) == one(3)


def test_maxgen_degree_counts_elements():
    # one last-variable factor per element
    for u in enumerate_monomials(3, 3):
        closure = borel_enumerate(u)
        assert deg(maxgen_of_set(closure)) == len(closure)


class TestMgClosed:
    @pytest.mark.parametrize(
        "text,n,want",
        [
            ("x2^2*x4", 5, "x3*x4^2*x5^5"),
            ("x2^3", 5, "x3^3*x4^4*x5^5"),
            ("x2^2", 4, "x3*x4"),
            ("x2^2", 3, "x3"),
        ],
    )
    def test_known_values(self, text, n, want):
        assert str(mg_closed(parse(text, n))) == want

    def test_quadratic_family_in_three_variables(self):
        for b in range(7):
            got = mg_closed(variable_power(2, b, 3))
            assert got == variable_power(3, binom(b, 2), 3)

    def test_unit_and_pure_last_variable_power(self):
        assert mg_closed(one(4)) == one(4)
        assert mg_closed(parse("x4^7", 4)) == one(4)

    def test_matches_oracle_everywhere_small(self):
        for u in slice_elements():
            assert mg_closed(u) == mg_oracle(u), u

    def test_truncation_compatibility(self):
        # removing the last variable commutes with the gap form
        for n in (3, 4, 5):
            for d in range(5):
                for u0 in enumerate_monomials(n - 1, d):
                    lifted = mg_closed(embed(u0, n))
                    assert truncate(lifted, n - 1) == mg_closed(u0)


class TestMgShifted:
    def test_matches_direct_computation(self):
        for n in (3, 4):
            for d in range(4):
                for u in enumerate_monomials(n, d):
                    for t in range(4):
                        shifted = mul(u, variable_power(n, t, n)) if t else u
                        assert mg_shifted(u, t) == mg_closed(shifted)

    def test_zero_shift(self):
        u = parse("x2^2*x4", 5)
        assert mg_shifted(u, 0) == mg_closed(u)


class TestTargetDecompose:
    def test_parts_multiply_back(self):
        u0 = parse("x2^2*x4", 4)
        dec = target_decompose(u0, 5, 3)
        assert isinstance(dec, MgDecomposition)
        rebuilt = mul(dec.base, variable_power(5, dec.xn_exp, 5))
        assert rebuilt == mg_shifted(embed(u0, 5), 3)
        assert dec.base.exps[4] == 0

    def test_requires_one_smaller_ambient(self):
        with pytest.raises(ValueError):
            target_decompose(parse("x2", 3), 3, 1)


class TestFPoly:
    def test_worked_family(self):
        u0 = parse("x2^2*x4", 4)
        for t in range(13):
            assert f_poly_eval(u0, 5, t) == binom(t + 1, 2) + 2 * t + 5

    def test_two_exponent_family(self):
        # f for x2^b*x3^c one ambient up, as an explicit binomial sum
        for b in range(5):
            for c in range(5):
                u0 = Monomial(3, (0, b, c))
                for t in range(8):
                    want = (
                        binom(b, 2) * t
                        + binom(b + 1, 3)
                        + c * binom(b, 2)
                        + (b + 1) * binom(c + 1, 2)
                        + binom(c + 1, 3)
                        - c
                    )
                    assert f_poly_eval(u0, 4, t) == want

    def test_agrees_with_decomposition(self):
        for d in range(5):
            for u0 in enumerate_monomials(3, d):
                for t in range(5):
                    assert f_poly_eval(u0, 4, t) == target_decompose(u0, 4, t).xn_exp

    def test_short_monomials_contribute_nothing(self):
        assert f_poly_eval(one(3), 4, 5) == 0
        assert f_poly_eval(parse("x2", 3), 4, 5) == 0


@given(st.integers(2, 5), st.integers(0, 4), st.integers(0, 4), st.data())
@settings(max_examples=80, deadline=None)
def test_mg_closed_matches_oracle_random(n, d, t, data):
    sl = list(enumerate_monomials(n, d))
    u = data.draw(st.sampled_from(sl))
    shifted = mul(u, variable_power(n, t, n)) if t else u
    assert mg_closed(shifted) == mg_oracle(shifted)
