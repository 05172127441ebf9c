from fractions import Fraction
from math import gcd, prod

import pytest

from cycloclass.characters import (
    DirichletChar,
    bernoulli,
    char_sum_closed_form,
    enumerate_chars,
    field_even_chars,
    galois_orbits,
    group_exponent,
    odd_square_sum_helper,
    orbit_bernoulli_product,
    primitive_weighted_sum,
    subfield_odd_chars,
    sum_abs_squares_odd,
    weighted_char_sum,
)
from cycloclass.cyclotomic import CycNum


def quadratic_char(N):
    """The unique odd quadratic character of conductor N in {3, 4}."""
    return [c for c in enumerate_chars(N, "odd") if c.order == 2][0]


class TestEnumeration:
    def test_trivial_modulus(self):
        chars = enumerate_chars(1)
        assert len(chars) == 1 and chars[0].is_trivial()

    def test_odd_mod8(self):
        odd = enumerate_chars(8, "odd")
        assert len(odd) == 2
        assert sorted(c.conductor for c in odd) == [4, 8]

    def test_totally_multiplicative(self):
        for chi in enumerate_chars(24):
            for a in range(1, 24):
                for b in range(1, 24):
                    lhs = chi(a * b)
                    rhs = chi(a) * chi(b)
                    assert lhs == rhs

    def test_counts_all_families(self):
        for s in (3, 4, 5):
            assert len(subfield_odd_chars("pow2", s)) == 2 ** (s - 2)
            assert len(subfield_odd_chars("sqrt3", s)) == 2 ** (s - 2)
            assert len(subfield_odd_chars("sqrtp", s)) == 2 ** (s - 2)
            assert len(subfield_odd_chars("3pow2", s)) == 2 ** (s - 1)
            assert len(subfield_odd_chars("sqrtuplus", s)) == 2 ** (s - 1)

    def test_sqrtp_filter_is_fixed_subgroup(self):
        s = 4
        for chi in subfield_odd_chars("sqrtp", s):
            assert chi.value_exponent(2 ** s - 1) == 0
            assert chi.is_odd()

    def test_sqrtuplus_conductors(self):
        # 2^(s-2) characters each of conductor 2^(s+1) and 3*2^(s+1); the
        # fixing automorphism forces the 2-part to have full order
        for s in (3, 4, 5):
            conds = sorted(c.conductor for c in subfield_odd_chars("sqrtuplus", s))
            assert conds == [2 ** (s + 1)] * 2 ** (s - 2) + \
                [3 * 2 ** (s + 1)] * 2 ** (s - 2)

    def test_duplicate_free(self):
        chars = subfield_odd_chars("3pow2", 4)
        assert len(chars) == len(set(chars))


class TestConductorPrimitive:
    def test_conductor_divides_modulus(self):
        for N in (8, 12, 16, 24, 48):
            for chi in enumerate_chars(N):
                assert N % chi.conductor == 0

    def test_primitive_induces_back(self):
        for N in (16, 24):
            for chi in enumerate_chars(N):
                prim = chi.primitive()
                assert prim.conductor == prim.N == chi.conductor
                for a in range(1, N):
                    if gcd(a, N) == 1:
                        assert chi(a) == prim(a % prim.N if prim.N > 1 else 0) \
                            or (prim.N == 1 and chi(a) == CycNum.from_rational(1, 1))

    def test_parity_flag(self):
        for N in (8, 24):
            for chi in enumerate_chars(N):
                val = chi(N - 1)
                expected = CycNum.from_rational(chi.order, -1 if chi.is_odd() else 1)
                assert val == expected


class TestOrthogonality:
    @pytest.mark.parametrize("N", [3, 4, 5, 8, 12, 16, 21, 24, 36, 40, 48])
    def test_full_orthogonality(self, N):
        chars = enumerate_chars(N)
        phi_n = len({a for a in range(1, N + 1) if gcd(a, N) == 1})
        e = group_exponent(N)
        for i in range(1, N):
            if gcd(i, N) != 1:
                continue
            for j in range(1, N):
                if gcd(j, N) != 1:
                    continue
                total = CycNum.from_rational(max(e, 1), 0)
                for chi in chars:
                    ki = chi.value_exponent(i)
                    kj = chi.value_exponent(j)
                    total = total + CycNum.zeta(max(e, 1), (ki - kj) % e if e > 1 else 0)
                expected = phi_n if i % N == j % N else 0
                assert total == CycNum.from_rational(max(e, 1), expected)


class TestBernoulli:
    def test_b1_quadratic_mod4(self):
        assert bernoulli(quadratic_char(4), "B1").as_rational() == Fraction(-1, 2)

    def test_b1_quadratic_mod3(self):
        assert bernoulli(quadratic_char(3), "B1").as_rational() == Fraction(-1, 3)

    def test_b2_even_quadratic_mod8(self):
        chi = [c for c in enumerate_chars(8, "even") if c.conductor == 8][0]
        assert bernoulli(chi, "B2").as_rational() == 2

    def test_b2_trivial(self):
        triv = enumerate_chars(1)[0]
        assert bernoulli(triv, "B2").as_rational() == Fraction(1, 6)

    def test_imprimitive_rejected(self):
        lifted = [c for c in enumerate_chars(8, "odd") if c.conductor == 4][0]
        with pytest.raises(ValueError):
            bernoulli(lifted, "B1")

    def test_orbit_products_are_integers(self):
        # Galois orbit product of f * B_(1,chi) is a rational integer
        for N in (16, 24, 32, 48):
            odd = enumerate_chars(N, "odd")
            for orbit in galois_orbits(odd):
                f = orbit[0].conductor
                prod_b = orbit_bernoulli_product(orbit, "B1")
                val = prod_b * Fraction(f) ** len(orbit)
                assert val.denominator == 1


class TestWeightedSums:
    def test_chi4_at_8(self):
        assert weighted_char_sum(quadratic_char(4), 8).as_rational() == -4

    def test_conductor8_odd(self):
        chi = [c for c in enumerate_chars(8, "odd") if c.conductor == 8][0]
        # 1 + 3 - 5 - 7: the odd conductor-8 character has chi(3) = 1
        assert chi(3) == CycNum.from_rational(2, 1)
        assert weighted_char_sum(chi, 8).as_rational() == -8

    def test_trivial(self):
        assert weighted_char_sum(enumerate_chars(1)[0], 1).as_rational() == 1

    def test_weighted_sum_at_conductor_is_f_b1(self):
        for N in (16, 24):
            for chi in enumerate_chars(N, "odd"):
                prim = chi.primitive()
                f = prim.N
                lhs = weighted_char_sum(prim, f)
                rhs = bernoulli(prim, "B1") * f
                assert lhs == rhs

    def test_primitive_sum_is_n_b1(self):
        # primitive evaluation scales linearly in the range
        for chi in enumerate_chars(24, "odd"):
            lhs = primitive_weighted_sum(chi, 48)
            rhs = bernoulli(chi.primitive(), "B1") * 48
            assert lhs == rhs


class TestClosedForms:
    def test_pow2_examples(self):
        assert sum_abs_squares_odd("pow2", 3) == 80
        assert sum_abs_squares_odd("pow2", 4) == 1344

    def test_sqrtp_power(self):
        for s in (3, 4, 5):
            assert sum_abs_squares_odd("sqrtp", s) == 2 ** (4 * s - 2)

    @pytest.mark.parametrize("family", ["pow2", "sqrt3", "sqrtp", "3pow2"])
    def test_closed_forms_match_brute_force(self, family):
        for s in range(3, 8):
            assert sum_abs_squares_odd(family, s) == \
                char_sum_closed_form(family, s)

    def test_g_helper(self):
        for s in (3, 4, 5, 6):
            direct = sum(i * i for i in range(1, 3 * 2 ** s + 1)
                         if gcd(i, 6) == 1)
            assert odd_square_sum_helper(s) == direct

    def test_sqrt3_equals_3pow2_triple_part(self):
        # the sqrt3 family sum is exactly the 3 | conductor contribution
        # of the 3pow2 family sum
        for s in (3, 4, 5):
            total = sum_abs_squares_odd("3pow2", s)
            part = char_sum_closed_form("pow2", s) * 9
            assert total - part == char_sum_closed_form("sqrt3", s)


class TestFieldCharacters:
    def test_real_field_sizes(self):
        for s in (3, 4, 5):
            assert len(field_even_chars("pow2", s)) == 2 ** (s - 2)
            assert len(field_even_chars("3pow2", s)) == 2 ** (s - 1)
