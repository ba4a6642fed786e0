"""Exact polynomial arithmetic and the symmetry toolkit."""

from fractions import Fraction

import pytest

from eulerian_lab.poly import (
    ONE,
    X,
    ZERO,
    Poly,
    basis_p_coeffs,
    basis_p_combination,
    gamma_expand,
    is_gamma_positive,
    is_symmetric,
    is_unimodal,
    one_plus_x_power,
    poly_gcd,
    reciprocal,
    squarefree_decomposition,
    squarefree_part,
    symmetric_decomposition,
)


def P(*coeffs) -> Poly:
    return Poly(coeffs)


class TestConstruction:
    def test_trailing_zeros_stripped(self):
        assert P(1, 2, 0, 0) == P(1, 2)
        assert P(0, 0).is_zero()

    def test_zero_degree_convention(self):
        assert ZERO.deg() == -1
        assert ONE.deg() == 0
        assert X.deg() == 1

    def test_floats_rejected(self):
        with pytest.raises(TypeError):
            Poly((0.5, 1))
        with pytest.raises(TypeError):
            ONE * 0.5

    def test_fractions_kept_exact(self):
        p = P(Fraction(1, 3), Fraction(2, 3))
        assert p.evaluate(1) == 1
        assert p.coeffs == (Fraction(1, 3), Fraction(2, 3))

    def test_from_text_round_trip(self):
        for text in ("0", "1", "x", "1 + 11x + 11x^2 + x^3", "4x + 9x^2 + x^3",
                     "1/2 + 3/4x^2", "-1 + x - x^3"):
            p = Poly.from_text(text)
            assert Poly.from_text(p.to_text()) == p

    def test_monomial(self):
        assert Poly.monomial(3, 2) == P(0, 0, 3)
        assert Poly.monomial(0, 5) == ZERO


class TestArithmetic:
    def test_ring_ops(self):
        p, q = P(1, 2, 1), P(0, 1)
        assert p + q == P(1, 3, 1)
        assert p - p == ZERO
        assert p * q == P(0, 1, 2, 1)
        assert 2 * p == P(2, 4, 2)

    def test_divmod_exact(self):
        p = P(1, 2, 1) * P(0, 1, 1) + P(5)
        quo, rem = divmod(p, P(1, 2, 1))
        assert quo == P(0, 1, 1)
        assert rem == P(5)

    def test_exact_div_rejects_remainder(self):
        with pytest.raises(ValueError):
            P(1, 1, 1).exact_div(P(1, 1))
        assert (P(1, 1) * P(1, 2)).exact_div(P(1, 2)) == P(1, 1)

    def test_evaluate(self):
        p = P(1, -3, 2)
        assert p.evaluate(Fraction(1, 2)) == 0
        assert p.evaluate(1) == 0
        assert p.evaluate(0) == 1

    def test_derivative(self):
        assert P(7, 1, 3, 2).derivative() == P(1, 6, 6)
        assert ONE.derivative() == ZERO

    def test_times_x_power(self):
        assert P(1, 1).times_x_power(2) == P(0, 0, 1, 1)
        assert ZERO.times_x_power(3) == ZERO

    def test_one_plus_x_power(self):
        assert one_plus_x_power(0) == ONE
        assert one_plus_x_power(3) == P(1, 3, 3, 1)


class TestGcdAndSquarefree:
    def test_gcd_of_coprime_is_constant(self):
        g = poly_gcd(P(1, 1), P(0, 1))
        assert g.deg() == 0

    def test_gcd_shared_factor(self):
        g = poly_gcd(P(1, 1) * P(1, 2), P(1, 1) * P(3, 1))
        assert g.deg() == 1
        assert g.evaluate(-1) == 0

    def test_squarefree_decomposition(self):
        p = P(1, 1) ** 2 * P(0, 1) ** 3 * P(2, 1)
        factors = squarefree_decomposition(p)
        mults = sorted(m for _, m in factors if not (_ .deg() == 0))
        assert mults == [1, 2, 3]
        prod = ONE
        for f, m in factors:
            prod = prod * f ** m
        # decomposition multiplies back to p up to a positive constant
        assert prod * p.leading() == p * prod.leading()

    def test_squarefree_part_kills_multiplicity(self):
        sf = squarefree_part(P(1, 1) ** 3)
        assert sf.deg() == 1
        assert sf.evaluate(-1) == 0


class TestSymmetry:
    def test_reciprocal_examples(self):
        # window 3: 1 + 2x -> x^2(1/x ...) = x^3 + 2x^2
        assert reciprocal(P(1, 2), 3) == P(0, 0, 2, 1)
        assert reciprocal(ZERO, 4) == ZERO

    def test_reciprocal_involution(self):
        p = P(1, 5, 2)
        assert reciprocal(reciprocal(p, 4), 4) == p

    def test_reciprocal_window_too_small(self):
        with pytest.raises(ValueError):
            reciprocal(P(1, 1, 1), 1)

    def test_is_symmetric(self):
        assert is_symmetric(P(1, 3, 1), 2)
        assert is_symmetric(P(0, 1, 1), 3)  # x + x^2 centered in window 3
        assert not is_symmetric(P(0, 1, 1), 2)
        assert not is_symmetric(P(1, 2), 2)
        assert is_symmetric(ZERO, 5)

    def test_is_unimodal_least_peak(self):
        assert is_unimodal(P(1, 1, 1)) == 0
        assert is_unimodal(P(1, 3, 1)) == 1
        assert is_unimodal(P(1, 0, 2)) is None
        assert is_unimodal(P(2, 1)) == 0

    def test_symmetric_decomposition_round_trip(self):
        p = P(1, 13, 20, 4)  # not symmetric in window 4
        dec = symmetric_decomposition(p, 4)
        assert dec.a + X * dec.b == p
        assert is_symmetric(dec.a, 4)
        assert is_symmetric(dec.b, 3)

    def test_symmetric_decomposition_nonneg_side(self):
        # the reversal of 1 + 13x + 20x^2 + 4x^3 splits with both parts
        # nonnegative: a = 3x + 10x^2 + 3x^3, b = 1 + 10x + 10x^2 + x^3
        p = P(0, 4, 20, 13, 1)
        dec = symmetric_decomposition(p, 4)
        assert dec.a == P(0, 3, 10, 3)
        assert dec.b == P(1, 10, 10, 1)

    def test_symmetric_decomposition_of_symmetric(self):
        p = P(1, 3, 3, 1)
        dec = symmetric_decomposition(p, 3)
        assert dec.a == p
        assert dec.b == ZERO


class TestGamma:
    def test_gamma_expand_known(self):
        # 1 + 4x + x^2 = (1+x)^2 + 2x
        gv = gamma_expand(P(1, 4, 1), 2)
        assert gv is not None
        assert gv.gammas == (Fraction(1), Fraction(2))
        assert gv.reconstruct() == P(1, 4, 1)

    def test_gamma_expand_asymmetric_is_none(self):
        assert gamma_expand(P(1, 2), 2) is None

    def test_gamma_negative_detected(self):
        # 1 + x + x^2 = (1+x)^2 - x
        gv = gamma_expand(P(1, 1, 1), 2)
        assert gv is not None
        assert gv.gammas == (Fraction(1), Fraction(-1))
        assert not gv.is_nonnegative()
        assert not is_gamma_positive(P(1, 1, 1), 2)
        assert is_gamma_positive(P(1, 4, 1), 2)

    def test_zero_poly_gamma(self):
        gv = gamma_expand(ZERO, 3)
        assert gv is not None and gv.is_nonnegative()
        assert gv.reconstruct() == ZERO


class TestBasisP:
    def test_round_trip(self):
        coeffs = (Fraction(2), Fraction(0), Fraction(5, 3))
        p = basis_p_combination(coeffs, 2)
        assert basis_p_coeffs(p, 2) == coeffs

    def test_basis_elements(self):
        # basis element k in window n is x^(n-k) (1+x)^k
        assert basis_p_combination((0, 1, 0), 2) == P(0, 1, 1)
        assert basis_p_combination((1, 0, 0), 2) == P(0, 0, 1)
        assert basis_p_combination((0, 0, 1), 2) == P(1, 2, 1)

    def test_rejects_too_high_degree(self):
        with pytest.raises(ValueError):
            basis_p_coeffs(P(1, 1, 1, 1), 2)
