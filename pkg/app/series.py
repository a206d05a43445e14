# app/series.py
"""
Truncated formal power series in t.

A ``TSeries`` of order N stores the plain coefficients a_0..a_N of
f(t) = sum a_k t^k. Coefficients come from any commutative ring whose
elements mix with ints: field scalars (QRat, Fraction), or polynomials
(XPoly, XYPoly) for generating functions like e_q(xt). Results of binary
operations carry the smaller of the two input orders.
"""
import logging
import operator
from functools import reduce
from typing import Callable, Iterable, List, Sequence

from app.cfactorial import CSeqCache, default_cache
from app.polyx import XPoly

logger = logging.getLogger(__name__)


class NotInvertibleError(ValueError):
    """A series without an invertible leading term was divided by"""


class TSeries:
    """Immutable truncated power series a_0 + a_1 t + ... + a_N t^N."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable, order: int = None):
        coeffs = list(coeffs)
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError(f"series order must be >= 0, got {order}")
        coeffs = coeffs[: order + 1]
        coeffs += [0] * (order + 1 - len(coeffs))
        self.coeffs = tuple(coeffs)
        self.order = order

    @classmethod
    def constant(cls, value, order: int) -> "TSeries":
        return cls([value], order)

    @classmethod
    def monomial(cls, k: int, order: int, coeff=1) -> "TSeries":
        """coeff * t^k truncated at the given order"""
        return cls([0] * k + [coeff], order)

    def __getitem__(self, k: int):
        return self.coeffs[k]

    def __len__(self) -> int:
        return len(self.coeffs)

    def map(self, fn: Callable) -> "TSeries":
        return TSeries([fn(c) for c in self.coeffs], self.order)

    def truncate(self, order: int) -> "TSeries":
        if order > self.order:
            raise ValueError(f"cannot raise truncation order from {self.order} to {order}")
        return TSeries(self.coeffs, order)

    def shift_up(self, k: int) -> "TSeries":
        """Multiply by t^k; the order grows by k"""
        return TSeries([0] * k + list(self.coeffs), self.order + k)

    def shift_down(self, k: int) -> "TSeries":
        """Divide by t^k; the first k coefficients must vanish"""
        if any(not c == 0 for c in self.coeffs[:k]):
            raise NotInvertibleError(f"series is not divisible by t^{k}")
        if k > self.order:
            raise ValueError(f"cannot divide an order-{self.order} series by t^{k}")
        return TSeries(self.coeffs[k:], self.order - k)

    # --- ring operations -------------------------------------------------

    def __add__(self, other):
        if isinstance(other, TSeries):
            order = min(self.order, other.order)
            return TSeries([self.coeffs[k] + other.coeffs[k] for k in range(order + 1)], order)
        coeffs = list(self.coeffs)
        coeffs[0] = coeffs[0] + other
        return TSeries(coeffs, self.order)

    __radd__ = __add__

    def __neg__(self) -> "TSeries":
        return self.map(operator.neg)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, TSeries):
            return ts_mul(self, other)
        return TSeries([c * other for c in self.coeffs], self.order)

    def __rmul__(self, other):
        return TSeries([other * c for c in self.coeffs], self.order)

    def __eq__(self, other):
        if not isinstance(other, TSeries):
            return NotImplemented
        return self.order == other.order and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        body = " + ".join(f"({c})*t^{k}" for k, c in enumerate(self.coeffs) if not c == 0) or "0"
        return f"TSeries({body} + O(t^{self.order + 1}))"


def ts_mul(f: TSeries, g: TSeries) -> TSeries:
    """
    Cauchy product truncated at min(order(f), order(g)).

    Args:
        f (TSeries): left factor
        g (TSeries): right factor

    Returns:
        TSeries: the truncated product
    """
    order = min(f.order, g.order)
    out: List = []
    for n in range(order + 1):
        terms = [
            f.coeffs[k] * g.coeffs[n - k]
            for k in range(n + 1)
            if not (f.coeffs[k] == 0 or g.coeffs[n - k] == 0)
        ]
        out.append(reduce(operator.add, terms, 0))
    return TSeries(out, order)


def ts_reciprocal(f: TSeries) -> TSeries:
    """
    Multiplicative inverse of a series with invertible constant term.

    Raises:
        NotInvertibleError: when a_0 = 0
    """
    a0 = f.coeffs[0]
    if a0 == 0:
        raise NotInvertibleError("not invertible (delta or zero series)")
    inv0 = 1 / a0
    out = [inv0]
    for n in range(1, f.order + 1):
        acc = reduce(
            operator.add,
            (f.coeffs[k] * out[n - k] for k in range(1, n + 1) if not f.coeffs[k] == 0),
            0,
        )
        out.append(-(acc * inv0))
    return TSeries(out, f.order)


def ts_delta_divide(num: TSeries, den: TSeries) -> TSeries:
    """
    Quotient of two delta series, computed as (num/t) * reciprocal(den/t).

    The result has order min(order(num), order(den)) - 1.

    Raises:
        NotInvertibleError: when num has a constant term, or den has a zero
            linear term
    """
    if not num.coeffs[0] == 0:
        raise NotInvertibleError("numerator is not a delta series")
    if not den.coeffs[0] == 0:
        raise NotInvertibleError("denominator is not a delta series")
    if den.order < 1 or den.coeffs[1] == 0:
        raise NotInvertibleError("degree-≥2 denominator")
    return ts_mul(num.shift_down(1), ts_reciprocal(den.shift_down(1)))


def ts_derivative(f: TSeries) -> TSeries:
    """d/dt; coefficient k becomes (k+1) a_{k+1} and the order drops by one"""
    if f.order == 0:
        raise ValueError("the derivative of an order-0 series has no known coefficients")
    return TSeries([(k + 1) * f.coeffs[k + 1] for k in range(f.order)], f.order - 1)


def eq_exp_series(N: int, cseq: CSeqCache = None) -> TSeries:
    """e_q(t) = sum t^n/c_n to order N"""
    cseq = cseq or default_cache()
    return TSeries([cseq.one / cseq.c(n) for n in range(N + 1)], N)


def eq_exp_x_series(N: int, cseq: CSeqCache = None) -> TSeries:
    """e_q(xt): the coefficient of t^n is the polynomial x^n/c_n"""
    cseq = cseq or default_cache()
    return TSeries([XPoly.monomial(n, cseq.one / cseq.c(n)) for n in range(N + 1)], N)


def eq_exp_scaled_series(N: int, var, cseq: CSeqCache = None) -> TSeries:
    """
    e_q(var * t) for any ring element ``var``.

    With ``var`` a scalar this is e_q at a numeric argument; with ``var`` an
    ``XYPoly.y()`` it gives e_q(yt) with y kept symbolic.
    """
    cseq = cseq or default_cache()
    out = []
    power = 1
    for n in range(N + 1):
        out.append(power * (cseq.one / cseq.c(n)))
        power = power * var
    return TSeries(out, N)


def c_coefficient(f: TSeries, n: int, cseq: CSeqCache = None):
    """
    Read u_n from the c-weighted view f = sum u_n t^n/c_n.

    Raises:
        IndexError: when n exceeds the truncation order
    """
    if n < 0 or n > f.order:
        raise IndexError(f"coefficient {n} lies beyond the truncation order {f.order}")
    cseq = cseq or default_cache()
    return cseq.c(n) * f.coeffs[n]


def c_coefficients(f: TSeries, cseq: CSeqCache = None) -> List:
    return [c_coefficient(f, n, cseq) for n in range(f.order + 1)]


def from_c_weighted(values: Sequence, cseq: CSeqCache = None) -> TSeries:
    """Build sum u_n t^n/c_n from the c-weighted values u_0..u_N"""
    cseq = cseq or default_cache()
    return TSeries([u * (cseq.one / cseq.c(n)) for n, u in enumerate(values)], len(values) - 1)


def eq_exp_at(u: TSeries, cseq: CSeqCache = None) -> TSeries:
    """
    e_q(u) = sum_m u^m/c_m for a series u without constant term.

    Terms with m > order(u) vanish to the truncation order.
    """
    if not u.coeffs[0] == 0:
        raise ValueError("e_q can only be evaluated at a series without constant term")
    cseq = cseq or default_cache()
    result = TSeries.constant(1, u.order)
    power = TSeries.constant(1, u.order)
    for m in range(1, u.order + 1):
        power = ts_mul(power, u)
        result = result + power * (cseq.one / cseq.c(m))
    return result
