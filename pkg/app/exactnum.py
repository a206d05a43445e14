# app/exactnum.py
"""
Exact arithmetic in the field Q(q).

Three layers:

* ``BigRat``: arbitrary precision rationals (``fractions.Fraction``).
* ``QPoly``: dense univariate polynomials in the indeterminate ``q`` with
  ``BigRat`` coefficients, index ``i`` holding the coefficient of ``q**i``.
* ``QRat``: reduced ratios of two ``QPoly`` values with a monic denominator.
  The canonical form makes equality a plain structural comparison.

All values are immutable and every operation returns a new value.
"""
import logging
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, List, Sequence, Tuple, Union

logger = logging.getLogger(__name__)

BigRat = Fraction

Scalar = Union[int, Fraction]


class PoleError(ZeroDivisionError):
    """Raised when a rational function is evaluated where its denominator vanishes."""

    def __init__(self, q0, factor: str = None):
        self.q0 = Fraction(q0)
        self.factor = factor
        message = f"pole at q0={self.q0}"
        if factor:
            message += f" (factor {factor} vanishes)"
        super().__init__(message)


def _trim(coeffs: Iterable) -> tuple:
    """Strip trailing zero coefficients"""
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class QPoly:
    """Dense polynomial in q over Q. The zero polynomial has no coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        self.coeffs: Tuple[Fraction, ...] = _trim(Fraction(c) for c in coeffs)

    @classmethod
    def q(cls) -> "QPoly":
        return cls((0, 1))

    @classmethod
    def constant(cls, value: Scalar) -> "QPoly":
        return cls((value,))

    @property
    def degree(self) -> int:
        """Degree of the polynomial; the zero polynomial reports -1 in place of -infinity."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    # --- ring operations -------------------------------------------------

    @staticmethod
    def _coerce(other) -> "QPoly":
        if isinstance(other, QPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return QPoly.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "QPoly":
        return QPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QPoly(c * other for c in self.coeffs)
        if not isinstance(other, QPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return QPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "QPoly":
        if exponent < 0:
            raise ValueError("negative powers of a polynomial are not polynomials")
        result = QPoly.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def divmod(self, divisor: "QPoly") -> Tuple["QPoly", "QPoly"]:
        """Euclidean division over Q"""
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        remainder = list(self.coeffs)
        shift = len(remainder) - len(divisor.coeffs)
        if shift < 0:
            return QPoly(), self
        quotient = [Fraction(0)] * (shift + 1)
        lead = divisor.coeffs[-1]
        for k in range(shift, -1, -1):
            factor = remainder[k + len(divisor.coeffs) - 1] / lead
            quotient[k] = factor
            if factor == 0:
                continue
            for i, c in enumerate(divisor.coeffs):
                remainder[k + i] -= factor * c
        return QPoly(quotient), QPoly(remainder[: len(divisor.coeffs) - 1])

    def exact_div(self, divisor: "QPoly") -> "QPoly":
        quotient, remainder = self.divmod(divisor)
        if remainder:
            raise ValueError(f"{divisor} does not divide {self}")
        return quotient

    def monic(self) -> "QPoly":
        if self.is_zero():
            return self
        lead = self.coeffs[-1]
        if lead == 1:
            return self
        return QPoly(c / lead for c in self.coeffs)

    def __call__(self, q0: Scalar) -> Fraction:
        """Evaluate at a rational point with Horner's rule"""
        result = Fraction(0)
        for c in reversed(self.coeffs):
            result = result * q0 + c
        return result

    # --- comparison and display -----------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("QPoly", self.coeffs))

    def __repr__(self):
        return f"QPoly({[str(c) for c in self.coeffs]})"

    def __str__(self):
        return format_poly(self.coeffs, "q")


def format_poly(coeffs: Sequence[Scalar], var: str) -> str:
    """Render coefficients (lowest power first) as a descending polynomial string"""
    terms: List[str] = []
    for power in range(len(coeffs) - 1, -1, -1):
        c = Fraction(coeffs[power])
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if power == 0:
            body = str(mag)
        else:
            mono = var if power == 1 else f"{var}^{power}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        terms.append(f"{sign} {body}")
    if not terms:
        return "0"
    text = " ".join(terms)
    return text[2:] if text.startswith("+ ") else "-" + text[2:]


def qpoly_gcd(a: QPoly, b: QPoly) -> QPoly:
    """
    Monic greatest common divisor over Q by Euclid's algorithm.

    Args:
        a (QPoly): first polynomial
        b (QPoly): second polynomial

    Returns:
        QPoly: the monic gcd (the constant 1 for coprime inputs)
    """
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd of two zero polynomials is undefined")
    a, b = a.monic(), b.monic()
    while not b.is_zero():
        if b.degree == 0:
            return QPoly.constant(1)
        a, b = b, a.divmod(b)[1].monic()
    return a


class QRat:
    """
    Element of Q(q) kept in canonical form: gcd(num, den) = 1 and den monic.

    Build values with ``qrat_normalize`` or the constructor; arithmetic with
    ints, Fractions and QPoly values coerces automatically.
    """

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=1):
        num = _as_qpoly(num)
        den = _as_qpoly(den)
        if den.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if num.is_zero():
            self.num, self.den = QPoly(), QPoly.constant(1)
            return
        if den.degree > 0:
            g = qpoly_gcd(num, den)
            if not g.is_one():
                num = num.exact_div(g)
                den = den.exact_div(g)
        lead = den.leading
        if lead != 1:
            num = num * (1 / lead)
            den = den * (1 / lead)
        self.num, self.den = num, den

    @classmethod
    def _canonical(cls, num: QPoly, den: QPoly) -> "QRat":
        # caller guarantees canonical form
        value = cls.__new__(cls)
        value.num, value.den = num, den
        return value

    @classmethod
    def q(cls) -> "QRat":
        return cls._canonical(QPoly.q(), QPoly.constant(1))

    @classmethod
    def one(cls) -> "QRat":
        return cls._canonical(QPoly.constant(1), QPoly.constant(1))

    @classmethod
    def zero(cls) -> "QRat":
        return cls._canonical(QPoly(), QPoly.constant(1))

    @staticmethod
    def _coerce(other):
        if isinstance(other, QRat):
            return other
        if isinstance(other, (int, Fraction)):
            return QRat._canonical(QPoly.constant(other), QPoly.constant(1))
        if isinstance(other, QPoly):
            return QRat._canonical(other, QPoly.constant(1))
        return None

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.den.degree == 0 and self.num.degree <= 0

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} depends on q")
        return self.num.coeffs[0] if self.num else Fraction(0)

    def __bool__(self) -> bool:
        return not self.is_zero()

    # --- field operations -----------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.den == other.den:
            if self.den.is_one():
                return QRat._canonical(self.num + other.num, self.den)
            return QRat(self.num + other.num, self.den)
        return QRat(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "QRat":
        return QRat._canonical(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return QRat.zero()
        # Cross-cancel first; the products of the reduced parts are then coprime
        g1 = qpoly_gcd(self.num, other.den)
        g2 = qpoly_gcd(other.num, self.den)
        num = self.num.exact_div(g1) * other.num.exact_div(g2)
        den = self.den.exact_div(g2) * other.den.exact_div(g1)
        return QRat._canonical(num, den)

    __rmul__ = __mul__

    def inverse(self) -> "QRat":
        if self.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        lead = self.num.leading
        return QRat._canonical(self.den * (1 / lead), self.num * (1 / lead))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent: int) -> "QRat":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return QRat._canonical(self.num ** exponent, self.den ** exponent)

    def eval(self, q0: Scalar) -> Fraction:
        return qrat_eval(self, q0)

    # --- comparison and display -----------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self.is_constant():
            return hash(self.constant_value())
        return hash((self.num.coeffs, self.den.coeffs))

    def integer_parts(self) -> Tuple[List[int], List[int]]:
        """Numerator and denominator scaled to coprime integer coefficients, denominator leading > 0"""
        return integer_scaled([self.num.coeffs], self.den.coeffs)

    def __repr__(self):
        return f"QRat({self})"

    def __str__(self):
        (num,), den = self.integer_parts()
        num_text = format_poly(num, "q")
        if den == [1]:
            return num_text
        if len(num) > 1 or num_text.startswith("-"):
            num_text = f"({num_text})"
        den_text = format_poly(den, "q")
        if len(den) > 1:
            den_text = f"({den_text})"
        return f"{num_text}/{den_text}"


def _as_qpoly(value) -> QPoly:
    if isinstance(value, QPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return QPoly.constant(value)
    raise TypeError(f"cannot build a polynomial in q from {type(value).__name__}")


def integer_scaled(rows: Sequence[Sequence[Fraction]], den: Sequence[Fraction]):
    """
    Scale several numerator coefficient rows and one denominator row by a common
    rational so every entry is an integer and the overall content is 1.

    Returns:
        tuple: (list of integer rows, integer denominator row)
    """
    denominators = [Fraction(c).denominator for row in rows for c in row]
    denominators += [Fraction(c).denominator for c in den]
    scale = lcm(*denominators) if denominators else 1
    int_rows = [[int(Fraction(c) * scale) for c in row] for row in rows]
    int_den = [int(Fraction(c) * scale) for c in den]
    content = 0
    for value in [v for row in int_rows for v in row] + int_den:
        content = gcd(content, value)
    if content > 1:
        int_rows = [[v // content for v in row] for row in int_rows]
        int_den = [v // content for v in int_den]
    if int_den and int_den[-1] < 0:
        int_rows = [[-v for v in row] for row in int_rows]
        int_den = [-v for v in int_den]
    return int_rows, int_den


def qrat_normalize(num: QPoly, den: QPoly) -> QRat:
    """Canonical representative (reduced, monic denominator) of num/den"""
    return QRat(num, den)


def qrat_eval(r: QRat, q0: Scalar) -> Fraction:
    """
    Substitute a rational value for q.

    Args:
        r (QRat): the rational function
        q0 (Fraction): the point

    Returns:
        Fraction: num(q0)/den(q0)

    Raises:
        PoleError: when den(q0) = 0
    """
    if isinstance(r, (int, Fraction)):
        return Fraction(r)
    denominator = r.den(q0)
    if denominator == 0:
        raise PoleError(q0)
    return r.num(q0) / denominator
