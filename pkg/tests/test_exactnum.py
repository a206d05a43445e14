import unittest
import sys
import os
from fractions import Fraction

from hypothesis import given, assume, settings
from hypothesis.strategies import fractions, lists

# Add the parent directory to the path so we can import the app modules
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from app.exactnum import (
    PoleError,
    QPoly,
    QRat,
    integer_scaled,
    qpoly_gcd,
    qrat_eval,
    qrat_normalize,
)

small = fractions(min_value=-6, max_value=6, max_denominator=12)
qpolys = lists(small, max_size=4).map(QPoly)


class TestQPoly(unittest.TestCase):
    """Test cases for polynomials in q"""

    def test_zero_polynomial_has_degree_minus_one(self):
        """Test that trailing zeros are trimmed and the zero polynomial has degree -1"""
        self.assertEqual(QPoly([0, 0]).degree, -1)
        self.assertEqual(QPoly([1, 2, 0]).degree, 1)
        with self.assertRaises(ValueError):
            QPoly().leading

    def test_str_descending(self):
        """Test that polynomials print highest power first"""
        self.assertEqual(str(QPoly([1, -3, 2])), "2*q^2 - 3*q + 1")
        self.assertEqual(str(QPoly([0, -1])), "-q")
        self.assertEqual(str(QPoly()), "0")

    def test_divmod(self):
        """Test Euclidean division over Q"""
        a = QPoly([-1, 0, 1])  # q^2 - 1
        b = QPoly([-1, 1])  # q - 1
        quotient, remainder = a.divmod(b)
        self.assertEqual(quotient, QPoly([1, 1]))
        self.assertTrue(remainder.is_zero())
        with self.assertRaises(ZeroDivisionError):
            a.divmod(QPoly())
        with self.assertRaises(ValueError):
            a.exact_div(QPoly([0, 2, 1]))

    def test_gcd_is_monic(self):
        """Test that gcd returns the monic common factor"""
        a = QPoly([-2, 4]) * QPoly([3, 1])  # (4q-2)(q+3)
        b = QPoly([-1, 2]) * QPoly([0, 5])  # (2q-1)(5q)
        self.assertEqual(qpoly_gcd(a, b), QPoly([Fraction(-1, 2), 1]))
        self.assertEqual(qpoly_gcd(QPoly([1, 1]), QPoly([2])), QPoly([1]))
        with self.assertRaises(ValueError):
            qpoly_gcd(QPoly(), QPoly())

    @given(qpolys, qpolys, small)
    def test_evaluation_is_a_ring_homomorphism(self, a, b, q0):
        """Test that evaluating at q0 commutes with + and *"""
        self.assertEqual((a + b)(q0), a(q0) + b(q0))
        self.assertEqual((a * b)(q0), a(q0) * b(q0))


class TestQRat(unittest.TestCase):
    """Test cases for the field Q(q)"""

    def test_canonical_form(self):
        """Test that values are reduced with a monic denominator"""
        q = QRat.q()
        r = (2 * q * q - q) / (4 * q - 2)  # q(2q-1) / 2(2q-1)
        self.assertEqual(r, q / 2)
        self.assertEqual(r.den, QPoly([1]))
        self.assertEqual(QRat(QPoly([2]), QPoly([0, 4])).den, QPoly([0, 1]))

    def test_division_by_zero(self):
        """Test that the zero element has no inverse"""
        with self.assertRaises(ZeroDivisionError):
            QRat.one() / QRat.zero()
        with self.assertRaises(ZeroDivisionError):
            QRat(1, 0)

    def test_constants_hash_like_fractions(self):
        """Test that constant values hash and compare like the equal Fraction"""
        self.assertEqual(QRat(Fraction(1, 3)), Fraction(1, 3))
        self.assertEqual(hash(QRat(Fraction(1, 3))), hash(Fraction(1, 3)))
        self.assertEqual(QRat(Fraction(5, 2)).constant_value(), Fraction(5, 2))

    def test_str(self):
        """Test the text rendering"""
        q = QRat.q()
        self.assertEqual(str((1 - q) / (2 * q)), "(-q + 1)/(2*q)")
        self.assertEqual(str(-q / 2), "(-q)/2")
        self.assertEqual(str(QRat(3)), "3")

    def test_integer_parts(self):
        """Test integer scaling with content 1 and a positive leading denominator"""
        q = QRat.q()
        self.assertEqual(((1 - q) / (2 * q)).integer_parts(), ([[1, -1]], [0, 2]))
        self.assertEqual(integer_scaled([[Fraction(1, 2), Fraction(-3, 4)]], [Fraction(-1, 6)]), ([[-6, 9]], [2]))
        self.assertEqual(integer_scaled([[]], [1]), ([[]], [1]))

    def test_pole(self):
        """Test that evaluation on a pole raises PoleError"""
        q = QRat.q()
        r = 1 / (2 * q - 1)
        self.assertEqual(qrat_eval(r, 1), Fraction(1))
        with self.assertRaises(PoleError) as ctx:
            qrat_eval(r, Fraction(1, 2))
        self.assertEqual(ctx.exception.q0, Fraction(1, 2))
        self.assertIsInstance(ctx.exception, ZeroDivisionError)

    def test_normalize_examples(self):
        """Test reduction to a monic denominator"""
        r = qrat_normalize(QPoly([0, 2]), QPoly([0, -2, 4]))  # 2q / (4q^2 - 2q)
        self.assertEqual(r.num, QPoly([Fraction(1, 2)]))
        self.assertEqual(r.den, QPoly([Fraction(-1, 2), 1]))
        self.assertTrue(qrat_normalize(QPoly(), QPoly([0, 1])).is_zero())
        self.assertEqual(qrat_normalize(QPoly([3]), QPoly([6])), Fraction(1, 2))
        self.assertEqual(qpoly_gcd(QPoly([0, -1, 1]), QPoly([0, 1])), QPoly([0, 1]))
        self.assertEqual(qpoly_gcd(QPoly([-1, 2]), QPoly([-2, 3])), QPoly([1]))

    def test_eval_examples(self):
        """Test e_2 at q = 1 and q/2 at q = 1/3"""
        q = QRat.q()
        self.assertEqual(qrat_eval((1 - q) / (2 * q), 1), 0)
        self.assertEqual(qrat_eval(q / 2, Fraction(1, 3)), Fraction(1, 6))
        with self.assertRaises(PoleError):
            qrat_eval((1 - q) / (2 * q), 0)

    def test_negative_powers(self):
        """Test that negative exponents invert"""
        q = QRat.q()
        self.assertEqual((q + 1) ** -2 * (q + 1) ** 2, QRat.one())

    @settings(max_examples=50)
    @given(qpolys, qpolys, qpolys, qpolys, small)
    def test_field_operations_commute_with_evaluation(self, a, b, c, d, q0):
        """Test that the field operations agree with arithmetic at a sample point"""
        assume(not b.is_zero() and not d.is_zero())
        assume(b(q0) != 0 and d(q0) != 0)
        r, s = QRat(a, b), QRat(c, d)
        self.assertEqual(qrat_eval(r + s, q0), qrat_eval(r, q0) + qrat_eval(s, q0))
        self.assertEqual(qrat_eval(r * s, q0), qrat_eval(r, q0) * qrat_eval(s, q0))
        self.assertEqual(qrat_eval(r - s, q0), qrat_eval(r, q0) - qrat_eval(s, q0))

    @given(qpolys, qpolys)
    def test_normalization_is_idempotent(self, a, b):
        """Test that normalizing a canonical value changes nothing"""
        assume(not b.is_zero())
        r = qrat_normalize(a, b)
        again = qrat_normalize(r.num, r.den)
        self.assertEqual(again.num, r.num)
        self.assertEqual(again.den, r.den)
        self.assertEqual(r.den.leading, 1)

    @given(qpolys, qpolys, qpolys)
    def test_field_axioms(self, a, b, c):
        """Test distributivity and additive inverses"""
        assume(not c.is_zero())
        r, s, t = QRat(a), QRat(b), QRat(1, c)
        self.assertEqual(t * (r + s), t * r + t * s)
        self.assertTrue((r - r).is_zero())
        if not r.is_zero():
            self.assertEqual(r * r.inverse(), QRat.one())


if __name__ == '__main__':
    unittest.main()
