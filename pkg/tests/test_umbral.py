import unittest
import sys
import os
from fractions import Fraction

# Add the parent directory to the path so we can import the app modules
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from app.cfactorial import c_of, default_cache, sampled_cache
from app.exactnum import QRat
from app.families import Family, poly_of, sheffer_pair
from app.polyx import XPoly
from app.series import NotInvertibleError, TSeries, eq_exp_series, ts_mul
from app.umbral import (
    Functional,
    ShefferPair,
    apply_series,
    c_integral,
    conjugate_representation,
    d_cq,
    expand_in_sheffer_basis,
    inverse_t,
    pair,
    sheffer_generate,
)


class TestPairing(unittest.TestCase):
    """Test cases for the pairing and the operator action"""

    def test_pairing_of_powers_of_t(self):
        """Test <t^k | x^n> = c_n delta(n,k)"""
        for n in range(5):
            for k in range(5):
                value = pair(TSeries.monomial(k, 5), XPoly.monomial(n, 1))
                self.assertEqual(value, c_of(n) if n == k else 0)

    def test_pairing_needs_enough_terms(self):
        """Test that a series shorter than the polynomial is rejected"""
        with self.assertRaises(ValueError):
            pair(TSeries([1, 1], 1), XPoly.monomial(3, 1))

    def test_eq_exp_pairs_to_evaluation(self):
        """Test <e_q(t) | p> = p(1)"""
        p = XPoly([3, -1, 2, 5])
        self.assertEqual(pair(eq_exp_series(3), p), p(1))

    def test_adjoint_law(self):
        """Test <f g | p> = <g | f(t) p>"""
        cseq = sampled_cache(Fraction(3))
        f = TSeries([Fraction(1), Fraction(2), Fraction(-1), Fraction(4)], 3)
        g = TSeries([Fraction(5), Fraction(0), Fraction(1, 2), Fraction(1)], 3)
        p = XPoly([Fraction(1), Fraction(2), Fraction(3), Fraction(-7)])
        product = Functional(f) * Functional(g)
        self.assertEqual(product.series, ts_mul(f, g))
        self.assertEqual(product(p, cseq), pair(g, apply_series(f, p, cseq), cseq))

    def test_d_cq(self):
        """Test t^k x^n = (c_n/c_{n-k}) x^{n-k} and zero below"""
        cseq = default_cache()
        self.assertEqual(d_cq(XPoly.monomial(3, 1), 1), XPoly.monomial(2, c_of(3) / c_of(2)))
        self.assertEqual(d_cq(XPoly.monomial(1, 1), 2), XPoly())
        self.assertEqual(d_cq(XPoly.monomial(2, 1), 0), XPoly.monomial(2, 1))
        with self.assertRaises(ValueError):
            d_cq(XPoly.x(), -1, cseq)

    def test_inverse_t(self):
        """Test that t undoes 1/t and the integral of 1 over [0,1] is 1"""
        p = XPoly([1, 2, 3])
        self.assertEqual(d_cq(inverse_t(p)), p)
        self.assertEqual(c_integral(XPoly.constant(1), 0, 1), 1)
        q = QRat.q()
        # integral_0^1 x dx = c_1/c_2 = q/2
        self.assertEqual(c_integral(XPoly.x(), 0, 1), q / 2)


class TestSheffer(unittest.TestCase):
    """Test cases for Sheffer sequences"""

    def test_generate_matches_table(self):
        """Test that (1/g(t)) x^n gives the family polynomial"""
        for family in Family:
            g = sheffer_pair(family, 6)
            for n in range(5):
                self.assertEqual(sheffer_generate(g, n), poly_of(family, n), f"{family.value} n={n}")

    def test_conjugate_representation(self):
        """Test the coefficient formula for s_n(x)"""
        g = sheffer_pair(Family.EULER, 5)
        for n in range(5):
            self.assertEqual(conjugate_representation(g, n), sheffer_generate(g, n))

    def test_expansion_round_trip(self):
        """Test p = sum_k d_k s_k for a Bernoulli pair"""
        g = sheffer_pair(Family.BERNOULLI, 5)
        p = XPoly([1, -2, 0, 4])
        coeffs = expand_in_sheffer_basis(p, g)
        rebuilt = XPoly()
        for k, d in enumerate(coeffs):
            rebuilt = rebuilt + sheffer_generate(g, k) * d
        self.assertEqual(rebuilt, p)
        self.assertEqual(expand_in_sheffer_basis(XPoly(), g), [])

    def test_shifted_pair(self):
        """Test that a pair with a pole at t = 0 starts its basis at t_shift"""
        g = sheffer_pair(Family.GENOCCHI, 5)
        self.assertEqual(g.t_shift, 1)
        coeffs = expand_in_sheffer_basis(XPoly.constant(1), g)
        self.assertEqual(coeffs[0], 0)
        self.assertEqual(len(coeffs), 2)
        self.assertEqual(sheffer_generate(g, 1), XPoly.constant(1))
        with self.assertRaises(ValueError):
            g.dual(0)

    def test_non_invertible_pair(self):
        """Test that g without a constant term cannot generate a sequence"""
        with self.assertRaises(NotInvertibleError):
            sheffer_generate(ShefferPair(TSeries([0, 1], 3)), 2)


if __name__ == '__main__':
    unittest.main()
