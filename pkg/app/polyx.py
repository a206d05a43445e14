# app/polyx.py
"""
Polynomials in x, and in x and y, over a coefficient field.

Coefficients are any field elements that support +, -, * and == 0 (QRat in
symbolic work, Fraction in sampled work). Missing coefficients read as the
integer 0, which mixes with both.
"""
import logging
from fractions import Fraction
from typing import Dict, Iterable, Tuple

from app.exactnum import QRat

logger = logging.getLogger(__name__)

_SCALARS = (int, Fraction, QRat)


def _trim(coeffs: Iterable) -> tuple:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _is_scalar(value) -> bool:
    return isinstance(value, _SCALARS)


class XPoly:
    """Dense polynomial in x; index k holds the coefficient of x^k."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs = _trim(coeffs)

    @classmethod
    def x(cls) -> "XPoly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, k: int, coeff=1) -> "XPoly":
        return cls([0] * k + [coeff])

    @classmethod
    def constant(cls, value) -> "XPoly":
        return cls((value,))

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial"""
        return len(self.coeffs) - 1

    def coeff(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def map(self, fn) -> "XPoly":
        return XPoly(fn(c) for c in self.coeffs)

    def __add__(self, other):
        if _is_scalar(other):
            other = XPoly.constant(other)
        if not isinstance(other, XPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return XPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "XPoly":
        return XPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        if _is_scalar(other):
            other = XPoly.constant(other)
        if not isinstance(other, XPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        if _is_scalar(other):
            return XPoly.constant(other) + (-self)
        return NotImplemented

    def __mul__(self, other):
        if _is_scalar(other):
            return XPoly(c * other for c in self.coeffs)
        if not isinstance(other, XPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return XPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return XPoly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "XPoly":
        result = XPoly.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def __call__(self, x0):
        return xpoly_eval(self, x0)

    def __eq__(self, other):
        if isinstance(other, XPoly):
            return self.coeffs == other.coeffs
        if _is_scalar(other):
            return self.coeffs == XPoly.constant(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(("XPoly", self.coeffs))

    def __repr__(self):
        return f"XPoly({[str(c) for c in self.coeffs]})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if not mono:
                terms.append(f"({c})")
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"({c})*{mono}")
        return " + ".join(terms)


class XYPoly:
    """Sparse polynomial in x and y: (i, j) -> coefficient of x^i y^j, zeros never stored."""

    __slots__ = ("terms",)

    def __init__(self, terms: Dict[Tuple[int, int], object] = None):
        self.terms = {key: c for key, c in (terms or {}).items() if not c == 0}

    @classmethod
    def from_x(cls, p: XPoly) -> "XYPoly":
        return cls({(k, 0): c for k, c in enumerate(p.coeffs)})

    @classmethod
    def from_y(cls, p: XPoly) -> "XYPoly":
        return cls({(0, k): c for k, c in enumerate(p.coeffs)})

    @classmethod
    def x(cls) -> "XYPoly":
        return cls({(1, 0): 1})

    @classmethod
    def y(cls) -> "XYPoly":
        return cls({(0, 1): 1})

    @classmethod
    def constant(cls, value) -> "XYPoly":
        return cls({(0, 0): value})

    def coeff(self, i: int, j: int):
        return self.terms.get((i, j), 0)

    @property
    def total_degree(self) -> int:
        return max((i + j for i, j in self.terms), default=-1)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    @staticmethod
    def _coerce(other):
        if isinstance(other, XYPoly):
            return other
        if isinstance(other, XPoly):
            return XYPoly.from_x(other)
        if _is_scalar(other):
            return XYPoly.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out[key] + c if key in out else c
        return XYPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "XYPoly":
        return XYPoly({key: -c for key, c in self.terms.items()})

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
        if _is_scalar(other):
            return XYPoly({key: c * other for key, c in self.terms.items()})
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out: Dict[Tuple[int, int], object] = {}
        for (i1, j1), a in self.terms.items():
            for (i2, j2), b in other.terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out[key] + a * b if key in out else a * b
        return XYPoly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "XYPoly":
        result = XYPoly.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def at_y_zero(self) -> XPoly:
        """Set y = 0"""
        degree = max((i for i, j in self.terms if j == 0), default=-1)
        return XPoly(self.terms.get((i, 0), 0) for i in range(degree + 1))

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"XYPoly({ {key: str(c) for key, c in sorted(self.terms.items())} })"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (i, j), c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(m for m in (_power("x", i), _power("y", j)) if m)
            parts.append(f"({c})*{mono}" if mono else f"({c})")
        return " + ".join(parts)


def _power(var: str, k: int) -> str:
    if k == 0:
        return ""
    return var if k == 1 else f"{var}^{k}"


def xpoly_eval(p: XPoly, x0):
    """
    Evaluate p at x0 by Horner's rule.

    x0 may be a field element or itself a polynomial (composition p(x0(x))).
    """
    result = 0
    for c in reversed(p.coeffs):
        result = result * x0 + c
    return result


def c_substitute(p: XPoly, cseq=None) -> XYPoly:
    """
    Umbral substitution x^k -> (x+y)^k_c, read as p((x+y)_c).

    Args:
        p (XPoly): polynomial in x
        cseq (CSeqCache, optional): coefficient field; defaults to Q(q)

    Returns:
        XYPoly: sum_k [x^k]p * (x+y)^k_c
    """
    if cseq is None:
        from app.cfactorial import default_cache

        cseq = default_cache()
    result = XYPoly()
    for k, c in enumerate(p.coeffs):
        if c == 0:
            continue
        result = result + cseq.power_of_sum(k) * c
    return result


def leading_coeff(p: XPoly):
    """
    Degree and leading coefficient of a nonzero polynomial.

    Returns:
        tuple: (degree, coefficient of x^degree)
    """
    if p.is_zero():
        raise ValueError("the zero polynomial has no leading coefficient")
    return p.degree, p.coeffs[-1]

