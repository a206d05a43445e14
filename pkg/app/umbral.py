# app/umbral.py
"""
Umbral calculus over the sequence c_n.

A series f(t) = sum a_k t^k acts on polynomials in two ways: as a linear
functional through the pairing <f(t) | x^n> = c_n a_n, and as a linear
operator through t^k x^n = (c_n/c_{n-k}) x^{n-k}. Sheffer sequences for
pairs (g(t), t) are generated and expanded on top of these two actions.
"""
import logging
import operator
from dataclasses import dataclass
from functools import reduce
from typing import List, Union

from app.cfactorial import CSeqCache, default_cache
from app.polyx import XPoly, xpoly_eval
from app.series import TSeries, ts_mul, ts_reciprocal

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Functional:
    """A series f(t) viewed as the linear functional p -> <f(t) | p(x)>"""

    series: TSeries

    def __call__(self, p: XPoly, cseq: CSeqCache = None):
        return pair(self, p, cseq)

    def __mul__(self, other: "Functional") -> "Functional":
        return Functional(ts_mul(self.series, other.series))


def _series_of(f) -> TSeries:
    return f.series if isinstance(f, Functional) else f


def _check_order(f: TSeries, p: XPoly) -> None:
    if f.order < p.degree:
        raise ValueError(
            f"series of order {f.order} is too short for a degree-{p.degree} polynomial"
        )


def _as_xpoly(value) -> XPoly:
    # an empty sum comes back as the integer 0
    return XPoly() if isinstance(value, int) and value == 0 else value


def pair(f: Union[Functional, TSeries], p: XPoly, cseq: CSeqCache = None):
    """
    The pairing <f(t) | p(x)> = sum_k c_k a_k [x^k]p.

    Args:
        f (Functional | TSeries): the series
        p (XPoly): the polynomial
        cseq (CSeqCache, optional): coefficient field; defaults to Q(q)

    Returns:
        the pairing value; a field element, or a polynomial when the series
        coefficients carry a symbolic variable

    Raises:
        ValueError: when the series is truncated below deg(p)
    """
    cseq = cseq or default_cache()
    f = _series_of(f)
    _check_order(f, p)
    terms = [
        cseq.c(k) * f.coeffs[k] * coeff
        for k, coeff in enumerate(p.coeffs)
        if not (coeff == 0 or f.coeffs[k] == 0)
    ]
    return reduce(operator.add, terms, cseq.zero)


def d_cq(p: XPoly, k: int = 1, cseq: CSeqCache = None) -> XPoly:
    """
    k-fold c_q-derivative: x^n -> (c_n/c_{n-k}) x^{n-k}, zero when n < k.
    """
    if k < 0:
        raise ValueError(f"repetition count must be >= 0, got {k}")
    if k == 0:
        return p
    cseq = cseq or default_cache()
    return XPoly(cseq.ratio(n, k) * p.coeffs[n] for n in range(k, len(p.coeffs)))


def apply_series(f: TSeries, p: XPoly, cseq: CSeqCache = None):
    """
    Let the series act on a polynomial: f(t)p = sum_k a_k (t^k p).

    The result is an XPoly, or an XYPoly when the coefficients of ``f`` are
    polynomials in a second symbol y.
    """
    cseq = cseq or default_cache()
    f = _series_of(f)
    _check_order(f, p)
    terms = [
        f.coeffs[k] * d_cq(p, k, cseq)
        for k in range(len(p.coeffs))
        if not f.coeffs[k] == 0
    ]
    return _as_xpoly(reduce(operator.add, terms, 0))


def inverse_t(p: XPoly, cseq: CSeqCache = None) -> XPoly:
    """Indefinite c_q-integral (the operator 1/t): x^n -> (c_n/c_{n+1}) x^{n+1}"""
    cseq = cseq or default_cache()
    return XPoly([0] + [cseq.c(n) / cseq.c(n + 1) * coeff for n, coeff in enumerate(p.coeffs)])


def c_integral(p: XPoly, a, b, cseq: CSeqCache = None):
    """
    Definite c_q-integral of p from a to b.

    The bounds may be field elements or polynomials standing for a symbol.
    """
    antiderivative = inverse_t(p, cseq)
    return xpoly_eval(antiderivative, b) - xpoly_eval(antiderivative, a)


@dataclass(frozen=True)
class ShefferPair:
    """
    The pair (g(t), t) with g(t) = h(t)/t^t_shift and h invertible.

    Plain invertible g has t_shift = 0. A g with a pole of order s at t = 0,
    like (e_q(t)+1)/(2t), is stored as its regular part h and s.
    """

    h: TSeries
    t_shift: int = 0
    name: str = ""

    def generator(self) -> TSeries:
        """1/g(t) = t^s / h(t)"""
        return ts_reciprocal(self.h).shift_up(self.t_shift)

    def dual(self, k: int) -> TSeries:
        """g(t) t^k, defined for k >= t_shift"""
        if k < self.t_shift:
            raise ValueError(f"g(t)t^{k} is not a power series for t_shift={self.t_shift}")
        return self.h.shift_up(k - self.t_shift)


def as_pair(g: Union[ShefferPair, TSeries]) -> ShefferPair:
    return g if isinstance(g, ShefferPair) else ShefferPair(g)


def sheffer_generate(g: Union[ShefferPair, TSeries], n: int, cseq: CSeqCache = None) -> XPoly:
    """
    s_n(x) = (1/g(t)) x^n, the Sheffer sequence for (g(t), t).

    Raises:
        NotInvertibleError: when g has no inverse
    """
    generator = as_pair(g).generator()
    return apply_series(generator, XPoly.monomial(n, 1), cseq)


def expand_in_sheffer_basis(p: XPoly, g: Union[ShefferPair, TSeries], cseq: CSeqCache = None) -> List:
    """
    Coefficients d_k with p = sum_k d_k s_k(x), d_k = <g(t) t^k | p>/c_k.

    For a pair with t_shift s the basis starts at s_s, so the list has
    deg(p) + s + 1 entries and the first s are zero.
    """
    cseq = cseq or default_cache()
    sheffer = as_pair(g)
    s = sheffer.t_shift
    if p.is_zero():
        return []
    coeffs = [cseq.zero] * s
    for k in range(s, p.degree + s + 1):
        coeffs.append(pair(sheffer.dual(k), p, cseq) / cseq.c(k))
    return coeffs


def conjugate_representation(g: Union[ShefferPair, TSeries], n: int, cseq: CSeqCache = None) -> XPoly:
    """s_n(x) = sum_k (<t^k/g(t) | x^n>/c_k) x^k"""
    cseq = cseq or default_cache()
    generator = as_pair(g).generator()
    monomial = XPoly.monomial(n, 1)
    return XPoly(
        pair(generator.shift_up(k), monomial, cseq) / cseq.c(k) for k in range(n + 1)
    )
