import unittest
import sys
import os
from fractions import Fraction

import sympy as sp

# Add the parent directory to the path so we can import the app modules
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from app.cfactorial import (
    CSeqCache,
    big_q_factorial,
    c_binom,
    c_multinomial,
    c_of,
    c_power_of_sum,
    deformed_sum,
    factor_label,
    pole_set,
    sampled_cache,
)
from app.exactnum import PoleError, QPoly, QRat, qrat_eval
from app.polyx import XYPoly

Q = sp.Symbol("q")


def to_sympy(value):
    """Convert a QRat into a sympy expression in q"""
    (num,), den = value.integer_parts()
    top = sum((sp.Integer(c) * Q ** i for i, c in enumerate(num)), sp.Integer(0))
    bottom = sum((sp.Integer(c) * Q ** i for i, c in enumerate(den)), sp.Integer(0))
    return top / bottom


class TestCFactorial(unittest.TestCase):
    """Test cases for Q_n, c_n and the deformed binomials"""

    def test_first_values(self):
        """Test c_0..c_3 against hand expansion"""
        q = QRat.q()
        self.assertEqual(c_of(0), 1)
        self.assertEqual(c_of(1), 1)
        self.assertEqual(c_of(2), 2 / q)
        self.assertEqual(c_of(3), 6 / (q * (2 * q - 1)))
        self.assertEqual(c_of(4), 24 / (q * (2 * q - 1) * (3 * q - 2)))

    def test_big_q_factorial(self):
        """Test that Q_n is the product of the factors jq-(j-1)"""
        self.assertEqual(big_q_factorial(0), QPoly([1]))
        self.assertEqual(big_q_factorial(2), QPoly([0, -1, 2]))
        with self.assertRaises(ValueError):
            big_q_factorial(-1)
        with self.assertRaises(ValueError):
            c_of(-1)

    def test_matches_series_of_deformed_exponential(self):
        """Test 1/c_n against the Taylor coefficients of (1+(1-q)t)^(1/(1-q))"""
        t = sp.Symbol("t")
        expansion = sp.series((1 + (1 - Q) * t) ** (1 / (1 - Q)), t, 0, 7).removeO()
        for n in range(7):
            coefficient = expansion.coeff(t, n)
            self.assertEqual(sp.simplify(coefficient - 1 / to_sympy(c_of(n))), 0, f"n={n}")

    def test_classical_limit(self):
        """Test that c_n = n! at q = 1"""
        cseq = sampled_cache(Fraction(1))
        self.assertEqual([cseq.c(n) for n in range(6)], [1, 1, 2, 6, 24, 120])
        self.assertEqual(qrat_eval(c_of(5), 1), 120)

    def test_binomials(self):
        """Test symmetry, boundary values and the zero outside the range"""
        for n in range(6):
            for k in range(n + 1):
                self.assertEqual(c_binom(n, k), c_binom(n, n - k))
            self.assertEqual(c_binom(n, 0), 1)
        self.assertEqual(c_binom(3, 4), 0)
        self.assertEqual(c_binom(3, -1), 0)
        q = QRat.q()
        self.assertEqual(c_binom(3, 1), 3 / (2 * q - 1))

    def test_multinomial(self):
        """Test that a two-part multinomial is the binomial"""
        self.assertEqual(c_multinomial(5, (2, 3)), c_binom(5, 2))
        self.assertEqual(c_multinomial(4, (1, 1, 2)), c_of(4) / c_of(2))
        self.assertEqual(c_multinomial(4, (1, 2)), 0)

    def test_pole_set_and_sampled_cache(self):
        """Test that a sampled table refuses to cross a vanishing factor"""
        self.assertEqual(pole_set(4), [Fraction(0), Fraction(1, 2), Fraction(2, 3)])
        self.assertEqual(factor_label(1), "q")
        self.assertEqual(factor_label(3), "3q-2")
        cseq = CSeqCache(Fraction(1, 2))
        self.assertEqual(cseq.c(2), 4)
        with self.assertRaises(PoleError) as ctx:
            cseq.c(3)
        self.assertEqual(ctx.exception.factor, "2q-1")

    def test_sampled_matches_symbolic(self):
        """Test that a sampled table is the symbolic one evaluated at q0"""
        cseq = sampled_cache(Fraction(5, 2))
        for n in range(8):
            self.assertEqual(cseq.c(n), qrat_eval(c_of(n), Fraction(5, 2)))

    def test_cache_stats(self):
        """Test that repeated lookups are served from the table"""
        cseq = CSeqCache(Fraction(3))
        cseq.c(5)
        before = cseq.stats["hits"]
        cseq.c(4)
        self.assertEqual(cseq.stats["hits"], before + 1)

    def test_power_of_sum(self):
        """Test (x+y)^2_c = x^2 + c_2 xy + y^2"""
        q = QRat.q()
        expected = XYPoly({(2, 0): 1, (1, 1): 2 / q, (0, 2): 1})
        self.assertEqual(c_power_of_sum(2), expected)

    def test_deformed_sum(self):
        """Test a (+)_q b = a + b + (1-q)ab"""
        q = QRat.q()
        self.assertEqual(deformed_sum(QRat(2), QRat(3)), 5 + 6 * (1 - q))
        self.assertEqual(deformed_sum(Fraction(2), Fraction(3), sampled_cache(Fraction(1))), 5)


if __name__ == '__main__':
    unittest.main()
