# app/cfactorial.py
"""
The generalized factorial c_n of the deformed exponential and everything built
directly on it: Q_n(q), deformed binomials, the deformed sum and the c-power
of a sum (x+y)^n_c.
"""
import logging
import threading
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Dict, List, Optional, Sequence

from app.exactnum import PoleError, QPoly, QRat

logger = logging.getLogger(__name__)


def q_factor(j: int) -> QPoly:
    """The j-th factor j*q - (j-1) of Q_n"""
    return QPoly((-(j - 1), j))


def factor_label(j: int) -> str:
    """Human label of the j-th factor: "q", "2q-1", "3q-2", ..."""
    if j == 1:
        return "q"
    return f"{j}q-{j - 1}"


def pole_set(n: int) -> List[Fraction]:
    """Rational q values where the denominator of c_n vanishes"""
    return [Fraction(j - 1, j) for j in range(1, n)]


@lru_cache(maxsize=None)
def big_q_factorial(n: int) -> QPoly:
    """
    Q_n(q) = prod_{j=1..n} (j*q - (j-1)), with Q_0 = 1.

    Args:
        n (int): nonnegative index

    Returns:
        QPoly: the product polynomial
    """
    if n < 0:
        raise ValueError(f"Q_n is defined for n >= 0, got {n}")
    if n == 0:
        return QPoly.constant(1)
    return big_q_factorial(n - 1) * q_factor(n)


class CSeqCache:
    """
    Memo table of Q_n and c_n over one coefficient field.

    With ``q=None`` the field is Q(q) and values are ``QRat``. With a rational
    ``q`` the same table is built over Q with q substituted, which is what the
    sampled verification mode runs on. Tables only grow; concurrent fills
    write identical values.
    """

    def __init__(self, q: Optional[Fraction] = None):
        self._lock = threading.RLock()
        self.stats = {"hits": 0, "misses": 0}
        if q is None:
            self.q0 = None
            self.q = QRat.q()
            self.one = QRat.one()
            self.zero = QRat.zero()
        else:
            self.q0 = Fraction(q)
            self.q = self.q0
            self.one = Fraction(1)
            self.zero = Fraction(0)
        self.q_products: List = [self.one]
        self.c_values: List = [self.one]
        self._binoms: Dict = {}

    @property
    def symbolic(self) -> bool:
        return self.q0 is None

    def __repr__(self):
        where = "Q(q)" if self.symbolic else f"q={self.q0}"
        return f"CSeqCache({where}, filled to {len(self.c_values) - 1})"

    def _factor(self, j: int):
        if self.symbolic:
            return QRat(q_factor(j))
        return j * self.q0 - (j - 1)

    def _fill(self, n: int) -> None:
        with self._lock:
            start = len(self.c_values)
            for m in range(start, n + 1):
                # c_m needs Q_{m-1}; Q_{m-1} needs factor m-1
                if len(self.q_products) < m:
                    factor = self._factor(m - 1)
                    if factor == 0:
                        raise PoleError(self.q0, factor_label(m - 1))
                    self.q_products.append(self.q_products[-1] * factor)
                self.c_values.append(self.one * factorial(m) / self.q_products[m - 1])
            if n + 1 > start:
                logger.debug("c_n table %r extended from %d to %d", self, start - 1, n)

    def c(self, n: int):
        """c_n = n!/Q_{n-1}, c_0 = 1"""
        if n < 0:
            raise ValueError(f"c_n is defined for n >= 0, got {n}")
        if n < len(self.c_values):
            self.stats["hits"] += 1
            return self.c_values[n]
        self.stats["misses"] += 1
        self._fill(n)
        return self.c_values[n]

    def binom(self, n: int, k: int):
        """Deformed binomial c_n/(c_k c_{n-k}); zero outside 0 <= k <= n"""
        if k < 0 or k > n or n < 0:
            return self.zero
        key = (n, k)
        value = self._binoms.get(key)
        if value is None:
            value = self.c(n) / (self.c(k) * self.c(n - k))
            self._binoms[key] = value
        return value

    def multinomial(self, n: int, parts: Sequence[int]):
        """c_n / prod c_{k_i} for parts summing to n; zero when any part is negative"""
        if any(k < 0 for k in parts) or sum(parts) != n:
            return self.zero
        denominator = self.one
        for k in parts:
            denominator = denominator * self.c(k)
        return self.c(n) / denominator

    def ratio(self, n: int, k: int):
        """c_n/c_{n-k}, the scalar of t^k acting on x^n"""
        return self.c(n) / self.c(n - k)

    def power_of_sum(self, n: int):
        """(x+y)^n_c as a bivariate polynomial"""
        from app.polyx import XYPoly

        return XYPoly({(k, n - k): self.binom(n, k) for k in range(n + 1)})

    def deformed_sum(self, a, b):
        """a (+)_q b = a + b + (1-q)ab"""
        return a + b + (self.one - self.q) * a * b


@lru_cache(maxsize=1)
def default_cache() -> CSeqCache:
    """Process-wide symbolic table over Q(q)"""
    return CSeqCache()


@lru_cache(maxsize=None)
def sampled_cache(q0: Fraction) -> CSeqCache:
    """Table with q replaced by the rational q0"""
    return CSeqCache(Fraction(q0))


def c_of(n: int) -> QRat:
    """
    Generalized factorial c_n over Q(q).

    Args:
        n (int): nonnegative index

    Returns:
        QRat: n!/Q_{n-1}(q), or 1 for n = 0
    """
    return default_cache().c(n)


def c_binom(n: int, k: int) -> QRat:
    return default_cache().binom(n, k)


def c_multinomial(n: int, parts: Sequence[int]) -> QRat:
    return default_cache().multinomial(n, parts)


def c_power_of_sum(n: int):
    return default_cache().power_of_sum(n)


def deformed_sum(a, b, cseq: CSeqCache = None):
    """
    The deformed sum a + b + (1-q)ab.

    Works for any operands that mix with the field elements of ``cseq``:
    scalars, polynomials in x and truncated series.
    """
    return (cseq or default_cache()).deformed_sum(a, b)
