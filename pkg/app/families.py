# app/families.py
"""
Degenerate Bernoulli, Euler and Genocchi numbers and polynomials.

All three families are Sheffer sequences for (g(t), t):

    Bernoulli  g = (e_q(t) - 1)/t
    Euler      g = (e_q(t) + 1)/2
    Genocchi   g = (e_q(t) + 1)/(2t)

Numbers come from the generating series (the canonical route) or from the
triangular recurrences (the verification route). Polynomials follow from
the numbers by s_n(x) = sum_k binom_c(n, k) s_{n-k}(0) x^k. The module also
carries the connection formulas between the families.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

from app.cfactorial import CSeqCache, default_cache
from app.polyx import XPoly, xpoly_eval
from app.series import (
    TSeries,
    c_coefficient,
    eq_exp_series,
    ts_delta_divide,
    ts_reciprocal,
)
from app.umbral import ShefferPair, c_integral, d_cq, expand_in_sheffer_basis

logger = logging.getLogger(__name__)

# numbers are computed in blocks of this size so poly_of(n) for rising n reuses work
_BUCKET = 8


class Family(str, Enum):
    BERNOULLI = "bernoulli"
    EULER = "euler"
    GENOCCHI = "genocchi"

    @property
    def title(self) -> str:
        return {
            Family.BERNOULLI: "Degenerate Bernoulli polynomials and numbers.",
            Family.EULER: "Degenerate Euler polynomials and values.",
            Family.GENOCCHI: "Degenerate Genocchi polynomials and numbers.",
        }[self]


def sheffer_pair(family: Family, order: int, cseq: CSeqCache = None) -> ShefferPair:
    """
    The Sheffer pair of a family with its regular part h truncated at ``order``.

    Args:
        family (Family): which family
        order (int): truncation order of h
        cseq (CSeqCache, optional): coefficient field

    Returns:
        ShefferPair: g = h/t^s
    """
    family = Family(family)
    cseq = cseq or default_cache()
    if family is Family.BERNOULLI:
        h = (eq_exp_series(order + 1, cseq) - 1).shift_down(1)
        return ShefferPair(h, 0, family.value)
    h = (eq_exp_series(order, cseq) + 1) * (cseq.one / 2)
    return ShefferPair(h, 1 if family is Family.GENOCCHI else 0, family.value)


def generating_series(family: Family, N: int, cseq: CSeqCache = None) -> TSeries:
    """Plain-coefficient generating series of the numbers, to order N"""
    family = Family(family)
    cseq = cseq or default_cache()
    if family is Family.BERNOULLI:
        e = eq_exp_series(N + 1, cseq)
        return ts_delta_divide(TSeries.monomial(1, N + 1), e - 1)
    half_sum = (eq_exp_series(N, cseq) + 1) * (cseq.one / 2)
    euler = ts_reciprocal(half_sum)
    if family is Family.EULER:
        return euler
    # 2t/(e_q(t)+1) is t times the Euler series
    return euler.shift_up(1).truncate(N)


def numbers_series_route(family: Family, N: int, cseq: CSeqCache = None) -> List:
    """
    Numbers 0..N read off the generating series.

    Args:
        family (Family): which family
        N (int): largest index
        cseq (CSeqCache, optional): coefficient field

    Returns:
        list: c_n [t^n] of the family's generating series
    """
    cseq = cseq or default_cache()
    series = generating_series(family, N, cseq)
    logger.debug("series route for %s to order %d", Family(family).value, N)
    return [c_coefficient(series, n, cseq) for n in range(N + 1)]


def numbers_recurrence_route(family: Family, N: int, cseq: CSeqCache = None) -> List:
    """
    Numbers 0..N from the triangular recurrences.

    Bernoulli: sum_{k<=n} binom_c(n+1, k) b_k = delta_{n,0}
    Euler:     -2 e_n = sum_{k<n} binom_c(n, k) e_k           (n >= 1)
    Genocchi:  -2 g_{n+1} = sum_{k<=n} binom_c(n+1, k) g_k    (n >= 1)
    """
    family = Family(family)
    cseq = cseq or default_cache()
    values: List = []
    for n in range(N + 1):
        if family is Family.BERNOULLI:
            if n == 0:
                values.append(cseq.one)
                continue
            acc = cseq.zero
            for k in range(n):
                acc = acc + cseq.binom(n + 1, k) * values[k]
            values.append(-acc / cseq.binom(n + 1, n))
        elif family is Family.EULER:
            if n == 0:
                values.append(cseq.one)
                continue
            acc = cseq.zero
            for k in range(n):
                acc = acc + cseq.binom(n, k) * values[k]
            values.append(-acc / 2)
        else:
            if n < 2:
                values.append(cseq.zero if n == 0 else cseq.one)
                continue
            acc = cseq.zero
            for k in range(n):
                acc = acc + cseq.binom(n, k) * values[k]
            values.append(-acc / 2)
    logger.debug("recurrence route for %s to %d", family.value, N)
    return values


@lru_cache(maxsize=None)
def _numbers_block(family: Family, upto: int, cseq: CSeqCache) -> Tuple:
    return tuple(numbers_series_route(family, upto, cseq))


def numbers_of(family: Family, N: int, cseq: CSeqCache = None) -> List:
    """Canonical numbers 0..N (series route), cached"""
    cseq = cseq or default_cache()
    upto = (N // _BUCKET + 1) * _BUCKET
    return list(_numbers_block(Family(family), upto, cseq)[: N + 1])


def polys_from_numbers(numbers: Sequence, cseq: CSeqCache = None) -> List[XPoly]:
    """s_n(x) = sum_k binom_c(n, k) s_{n-k} x^k for every n covered by ``numbers``"""
    cseq = cseq or default_cache()
    return [
        XPoly(cseq.binom(n, k) * numbers[n - k] for k in range(n + 1))
        for n in range(len(numbers))
    ]


def poly_of(family: Family, n: int, cseq: CSeqCache = None) -> XPoly:
    """
    The n-th polynomial of a family.

    Args:
        family (Family): which family
        n (int): index
        cseq (CSeqCache, optional): coefficient field

    Returns:
        XPoly: beta_n, E_n or G_n
    """
    if n < 0:
        raise ValueError(f"polynomial index must be >= 0, got {n}")
    cseq = cseq or default_cache()
    numbers = numbers_of(family, n, cseq)
    return XPoly(cseq.binom(n, k) * numbers[n - k] for k in range(n + 1))


@dataclass(frozen=True)
class FamilyTable:
    family: Family
    numbers: Tuple
    polys: Tuple[XPoly, ...]
    route: str = "series"

    def rows(self):
        """(n, poly_n, number_n) triples"""
        return [(n, self.polys[n], self.numbers[n]) for n in range(len(self.numbers))]


@lru_cache(maxsize=None)
def build_table(family: Family, n_max: int, route: str = "series", cseq: CSeqCache = None) -> FamilyTable:
    """
    Numbers and polynomials 0..n_max of one family.

    Raises:
        ValueError: for an unknown route
    """
    family = Family(family)
    cseq = cseq or default_cache()
    if route == "series":
        numbers = numbers_of(family, n_max, cseq)
    elif route == "recurrence":
        numbers = numbers_recurrence_route(family, n_max, cseq)
    else:
        raise ValueError(f"unknown route {route!r}; expected 'series' or 'recurrence'")
    polys = polys_from_numbers(numbers, cseq)
    logger.info("built %s table to n=%d by the %s route", family.value, n_max, route)
    return FamilyTable(family, tuple(numbers), tuple(polys), route)


def bhat(n: int, cseq: CSeqCache = None) -> XPoly:
    """B-hat_n(u) = sum_k binom_c(n, k) k b_{n-k} u^k; vanishes at u = 0"""
    cseq = cseq or default_cache()
    b = numbers_of(Family.BERNOULLI, n, cseq)
    return XPoly(cseq.binom(n, k) * k * b[n - k] for k in range(n + 1))


def euler_in_bernoulli(n: int, form: str = "single", cseq: CSeqCache = None) -> List:
    """
    Coefficients d_0..d_n with E_n(x) = sum_k d_k beta_k(x).

    ``form`` picks one of the two printed formulas:

    * ``single``: d_k = -2 (c_n/c_{n+1}) binom_c(n+1, k) e_{n-k+1}
    * ``double``: d_k = (c_n/c_{n+1}) sum_m c_{n+1}/(c_k c_m c_{n-k-m+1}) e_m
    """
    cseq = cseq or default_cache()
    e = numbers_of(Family.EULER, n + 1, cseq)
    scale = cseq.c(n) / cseq.c(n + 1)
    if form == "single":
        return [-2 * scale * cseq.binom(n + 1, k) * e[n - k + 1] for k in range(n + 1)]
    if form == "double":
        return [
            scale * _sum(
                (cseq.multinomial(n + 1, (k, m, n - k - m + 1)) * e[m] for m in range(n - k + 1)),
                cseq,
            )
            for k in range(n + 1)
        ]
    raise ValueError(f"unknown form {form!r}; expected 'single' or 'double'")


def genocchi_in_bernoulli(n: int, form: str = "single", cseq: CSeqCache = None) -> List:
    """
    Coefficients d_0..d_{n-1} with G_n(x) = sum_k d_k beta_k(x).

    The beta_n coefficient of both printed formulas is zero (deg G_n = n-1)
    and is not listed.

    Raises:
        ValueError: for n = 0, where G_0 = 0 has the empty expansion
    """
    if n < 1:
        raise ValueError("G_0 = 0 has no expansion in the Bernoulli basis")
    cseq = cseq or default_cache()
    g = numbers_of(Family.GENOCCHI, n + 1, cseq)
    scale = cseq.c(n) / cseq.c(n + 1)
    if form == "single":
        return [-2 * scale * cseq.binom(n + 1, k) * g[n - k + 1] for k in range(n)]
    if form == "double":
        return [
            scale * _sum(
                (cseq.multinomial(n + 1, (k, m, n + 1 - k - m)) * g[m] for m in range(n - k + 1)),
                cseq,
            )
            for k in range(n)
        ]
    raise ValueError(f"unknown form {form!r}; expected 'single' or 'double'")


def _sum(terms, cseq: CSeqCache):
    total = cseq.zero
    for term in terms:
        total = total + term
    return total


@dataclass(frozen=True)
class Resolution:
    """Which of two printed readings of a formula the expansion oracle confirms"""

    name: str
    statement: object
    proof: object
    resolved: object
    matched: Optional[str]


@lru_cache(maxsize=None)
def resolve_correction_lambda(cseq: CSeqCache = None) -> Resolution:
    """
    Solve for the constant on the E_{n-1} correction term of the
    Bernoulli-in-Euler connection at n = 1, using the Sheffer expansion of
    beta_1 in the Euler basis.
    """
    cseq = cseq or default_cache()
    beta_1 = poly_of(Family.BERNOULLI, 1, cseq)
    oracle = expand_in_sheffer_basis(beta_1, sheffer_pair(Family.EULER, 1, cseq), cseq)
    b = numbers_of(Family.BERNOULLI, 1, cseq)
    # d_0 = binom_c(1,0) b_1 + lam * c_1/c_0
    lam = (oracle[0] - cseq.binom(1, 0) * b[1]) / cseq.ratio(1, 1)
    statement, proof = cseq.one, cseq.one / 2
    matched = "statement" if lam == statement else "proof" if lam == proof else None
    resolution = Resolution("bernoulli-in-euler-lambda", statement, proof, lam, matched)
    logger.info("correction constant resolved to %s (matches the %s)", lam, matched)
    return resolution


def bernoulli_in_euler(n: int, lam=None, cseq: CSeqCache = None) -> List:
    """
    Coefficients d_0..d_n with beta_n(x) = sum_k d_k E_k(x):

        d_k = binom_c(n, k) b_{n-k} + [k = n-1] lam c_n/c_{n-1}

    ``lam`` defaults to the oracle-resolved constant.
    """
    if n < 1:
        raise ValueError("the Bernoulli-in-Euler connection is stated for n >= 1")
    cseq = cseq or default_cache()
    if lam is None:
        lam = resolve_correction_lambda(cseq).resolved
    b = numbers_of(Family.BERNOULLI, n, cseq)
    coeffs = [cseq.binom(n, k) * b[n - k] for k in range(n + 1)]
    coeffs[n - 1] = coeffs[n - 1] + lam * cseq.ratio(n, 1)
    return coeffs


def expand_in_bernoulli_basis(p: XPoly, cseq: CSeqCache = None) -> List:
    """
    d_k = (1/c_k) * integral_0^1 D^k p, so that p = sum_k d_k beta_k(x).
    """
    cseq = cseq or default_cache()
    return [
        c_integral(d_cq(p, k, cseq), cseq.zero, cseq.one, cseq) / cseq.c(k)
        for k in range(p.degree + 1)
    ]


def expand_in_euler_basis(p: XPoly, sign: int = None, cseq: CSeqCache = None) -> List:
    """
    d_k = (1/c_k) ((D^k p)(1) + sign (D^k p)(0))/2, so that p = sum_k d_k E_k(x).

    ``sign`` defaults to the oracle-resolved one.
    """
    cseq = cseq or default_cache()
    if sign is None:
        sign = resolve_euler_basis_sign(cseq).resolved
    out = []
    for k in range(p.degree + 1):
        derived = d_cq(p, k, cseq)
        at_one = xpoly_eval(derived, cseq.one)
        at_zero = xpoly_eval(derived, cseq.zero)
        out.append((at_one + sign * at_zero) / (2 * cseq.c(k)))
    return out


@lru_cache(maxsize=None)
def resolve_euler_basis_sign(cseq: CSeqCache = None) -> Resolution:
    """
    Pick the sign in the Euler-basis expansion formula by comparing both
    candidates for p = x against the Sheffer expansion oracle.
    """
    cseq = cseq or default_cache()
    p = XPoly.x()
    oracle = expand_in_sheffer_basis(p, sheffer_pair(Family.EULER, 1, cseq), cseq)
    resolved = None
    for sign in (1, -1):
        if expand_in_euler_basis(p, sign, cseq) == oracle:
            resolved = sign
            break
    matched = {1: "proof", -1: "statement"}.get(resolved)
    logger.info("Euler-basis sign resolved to %s (matches the %s)", resolved, matched)
    return Resolution("euler-basis-sign", -1, 1, resolved, matched)


def classical_numbers(family: Family, N: int) -> List[Fraction]:
    """
    Classical (q = 1) values 0..N from the Akiyama-Tanigawa Bernoulli
    generator: B_n, E_n(0) and G_n = 2(1 - 2^n) B_n. Independent of c_n.
    """
    family = Family(family)
    size = N + 1 if family is not Family.EULER else N + 2
    table = [Fraction(0)] * (size + 1)
    bern: List[Fraction] = []
    for m in range(size + 1):
        table[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            table[j - 1] = j * (table[j - 1] - table[j])
        bern.append(table[0])
    # Akiyama-Tanigawa yields B_1 = +1/2
    if len(bern) > 1:
        bern[1] = -bern[1]
    if family is Family.BERNOULLI:
        return bern[: N + 1]
    if family is Family.GENOCCHI:
        return [2 * (1 - 2 ** n) * bern[n] for n in range(N + 1)]
    return [Fraction(1)] + [
        -2 * (2 ** (n + 1) - 1) * bern[n + 1] / (n + 1) for n in range(1, N + 1)
    ]
