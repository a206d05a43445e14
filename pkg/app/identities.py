# app/identities.py
"""
Executable identity checks.

Every identity is registered under a string id with a predicate
``predicate(ctx, n) -> (lhs, rhs)``. The runner evaluates the predicate for
each n in range and compares the two sides exactly; a failure keeps both
sides and their difference as a witness. Checks run symbolically over Q(q)
or, in sampled mode, over Q at several fixed rational values of q.
"""
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import zip_longest
from typing import Callable, Dict, List, Optional, Tuple

from app.cfactorial import CSeqCache, default_cache, pole_set, sampled_cache
from app.exactnum import qrat_eval
from app.families import (
    Family,
    Resolution,
    bernoulli_in_euler,
    bhat,
    build_table,
    classical_numbers,
    euler_in_bernoulli,
    expand_in_bernoulli_basis,
    expand_in_euler_basis,
    generating_series,
    genocchi_in_bernoulli,
    numbers_recurrence_route,
    resolve_correction_lambda,
    resolve_euler_basis_sign,
    sheffer_pair,
)
from app.polyx import XPoly, XYPoly, c_substitute, leading_coeff, xpoly_eval
from app.series import (
    TSeries,
    c_coefficient,
    eq_exp_at,
    eq_exp_scaled_series,
    ts_derivative,
    ts_mul,
)
from app.umbral import (
    apply_series,
    c_integral,
    conjugate_representation,
    d_cq,
    inverse_t,
    pair,
    sheffer_generate,
)

logger = logging.getLogger(__name__)

SYMBOLIC_Q = "symbolic-in-q"
SYMBOLIC_QXY = "symbolic-in-q-x-y"
SAMPLED_Q = "sampled-q"

# never in the pole set {(j-1)/j} and never 0
SAMPLE_POINTS = (Fraction(2), Fraction(3), Fraction(1, 3), Fraction(5, 2), Fraction(-1))


class UnknownIdentityError(KeyError):
    """Raised for an id that is not in the registry"""

    def __init__(self, identity_id: str, known: List[str]):
        self.identity_id = identity_id
        self.known = known
        super().__init__(f"unknown identity {identity_id!r}; registered: {', '.join(known)}")

    def __str__(self):
        return self.args[0]


@dataclass(frozen=True)
class IdentityCheck:
    id: str
    description: str
    predicate: Callable
    mode: str = SYMBOLIC_Q
    n_min: int = 0
    n_cap: Optional[int] = None
    literal: Optional[Callable] = None
    resolve: Optional[Callable] = None

    def n_range(self, n_max: int) -> Tuple[int, int]:
        hi = n_max if self.n_cap is None else min(n_max, self.n_cap)
        return self.n_min, hi


@dataclass
class Witness:
    lhs: object
    rhs: object
    difference: object
    q0: Optional[Fraction] = None


@dataclass
class Outcome:
    n: int
    passed: bool
    witness: Optional[Witness] = None


@dataclass
class IdentityReport:
    id: str
    description: str
    mode: str
    n_range: Tuple[int, int]
    outcomes: List[Outcome] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)
    resolution: Optional[Resolution] = None
    # wall-time lives here, outside anything compared between runs
    metadata: Dict[str, float] = field(default_factory=dict, compare=False)

    @property
    def passed(self) -> bool:
        return all(outcome.passed for outcome in self.outcomes)

    @property
    def failures(self) -> List[Outcome]:
        return [outcome for outcome in self.outcomes if not outcome.passed]


class CheckContext:
    """Shared inputs of one run of one check over one coefficient field"""

    def __init__(self, cseq: CSeqCache, n_max: int):
        self.cseq = cseq
        self.n_max = n_max
        self._tables = {}
        self._recurrence = {}
        self._series = {}
        self._pairs = {}

    def table(self, family: Family):
        if family not in self._tables:
            self._tables[family] = build_table(family, self.n_max + 2, "series", self.cseq)
        return self._tables[family]

    def numbers(self, family: Family):
        return self.table(family).numbers

    def poly(self, family: Family, n: int) -> XPoly:
        return self.table(family).polys[n]

    def recurrence(self, family: Family):
        if family not in self._recurrence:
            self._recurrence[family] = numbers_recurrence_route(family, self.n_max, self.cseq)
        return self._recurrence[family]

    def generating(self, family: Family) -> TSeries:
        if family not in self._series:
            self._series[family] = generating_series(family, self.n_max + 2, self.cseq)
        return self._series[family]

    def pair_of(self, family: Family):
        if family not in self._pairs:
            self._pairs[family] = sheffer_pair(family, self.n_max + 2, self.cseq)
        return self._pairs[family]

    def delta(self, a: int, b: int):
        return self.cseq.one if a == b else self.cseq.zero

    def total(self, terms):
        acc = self.cseq.zero
        for term in terms:
            acc = acc + term
        return acc

    def combination(self, coeffs, basis) -> XPoly:
        """sum_k coeffs[k] * basis[k]"""
        acc = XPoly()
        for d, p in zip(coeffs, basis):
            acc = acc + p * d
        return acc


_REGISTRY: Dict[str, IdentityCheck] = {}


def register(identity_id: str, description: str, **options):
    """Decorator adding a predicate to the registry"""

    def decorator(predicate):
        if identity_id in _REGISTRY:
            raise ValueError(f"identity {identity_id!r} registered twice")
        _REGISTRY[identity_id] = IdentityCheck(identity_id, description, predicate, **options)
        return predicate

    return decorator


def registered_ids() -> List[str]:
    return sorted(_REGISTRY)


def get_check(identity_id: str) -> IdentityCheck:
    try:
        return _REGISTRY[identity_id]
    except KeyError:
        raise UnknownIdentityError(identity_id, registered_ids()) from None


def difference(lhs, rhs):
    """lhs - rhs, element-wise for sequences"""
    if isinstance(lhs, (tuple, list)) and isinstance(rhs, (tuple, list)):
        return tuple(difference(a, b) for a, b in zip_longest(lhs, rhs, fillvalue=0))
    try:
        return lhs - rhs
    except TypeError:
        return None


def _normalize(value):
    return tuple(_normalize(v) for v in value) if isinstance(value, (list, tuple)) else value


def _evaluate(check: IdentityCheck, ctx: CheckContext, n: int, predicate=None):
    lhs, rhs = (predicate or check.predicate)(ctx, n)
    lhs, rhs = _normalize(lhs), _normalize(rhs)
    if lhs == rhs:
        return None
    return Witness(lhs, rhs, difference(lhs, rhs))


def _sample_points(n_max: int) -> List[Fraction]:
    poles = set(pole_set(n_max + 4)) | {Fraction(0)}
    points = [q0 for q0 in SAMPLE_POINTS if q0 not in poles]
    if len(points) < len(SAMPLE_POINTS):
        logger.info("dropped sample points on poles: %s", sorted(set(SAMPLE_POINTS) - set(points)))
    return points


def run_check(identity_id: str, n_max: int, mode: str = "symbolic") -> "IdentityReport":
    """
    Evaluate one registered identity for every n in its range.

    Args:
        identity_id (str): registry key
        n_max (int): largest index (bivariate checks stop at their cap)
        mode (str): "symbolic" for exact Q(q), "sampled" for fixed rational q

    Returns:
        IdentityReport: per-n outcomes with witnesses for failures

    Raises:
        UnknownIdentityError: when the id is not registered
    """
    check = get_check(identity_id)
    if mode not in ("symbolic", "sampled"):
        raise ValueError(f"unknown mode {mode!r}; expected 'symbolic' or 'sampled'")
    lo, hi = check.n_range(n_max)
    if check.n_cap is not None and n_max > check.n_cap:
        logger.info("%s capped at n=%d", check.id, check.n_cap)
    if mode == "symbolic":
        contexts = [(None, CheckContext(default_cache(), n_max))]
        report_mode = check.mode
    else:
        contexts = [(q0, CheckContext(sampled_cache(q0), n_max)) for q0 in _sample_points(n_max)]
        report_mode = SAMPLED_Q
    report = IdentityReport(check.id, check.description, report_mode, (lo, hi))

    started = time.perf_counter()
    for n in range(lo, hi + 1):
        witness = None
        for q0, ctx in contexts:
            witness = _evaluate(check, ctx, n)
            if witness is not None:
                witness.q0 = q0
                break
        report.outcomes.append(Outcome(n, witness is None, witness))

    if check.resolve is not None:
        report.resolution = check.resolve(contexts[0][1].cseq)
        report.notes.append(
            f"printed statement gives {report.resolution.statement}, proof gives "
            f"{report.resolution.proof}; oracle resolved {report.resolution.resolved} "
            f"({report.resolution.matched})"
        )
    if check.literal is not None:
        literal_failures = [
            n for n in range(lo, hi + 1)
            if any(_evaluate(check, ctx, n, check.literal) is not None for _, ctx in contexts)
        ]
        if literal_failures:
            report.notes.append(f"literal printed variant fails for n in {literal_failures}")
        else:
            report.notes.append("literal printed variant passes")
    report.metadata["wall_time"] = time.perf_counter() - started
    logger.debug("%s: %d outcomes in %.3fs", check.id, len(report.outcomes), report.metadata["wall_time"])
    return report


def run_all(n_max: int, mode: str = "symbolic", workers: int = 1) -> List[IdentityReport]:
    """
    Run every registered check; reports come back sorted by id.

    Args:
        n_max (int): largest index
        mode (str): "symbolic" or "sampled"
        workers (int): thread count; the reports do not depend on it
    """
    ids = registered_ids()
    if workers <= 1:
        return [run_check(i, n_max, mode) for i in ids]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        reports = list(pool.map(lambda i: run_check(i, n_max, mode), ids))
    return sorted(reports, key=lambda r: r.id)


# --- Bernoulli ---------------------------------------------------------------

B, E, G = Family.BERNOULLI, Family.EULER, Family.GENOCCHI


@register("bernoulli-umbral", "sum_k binom_c(n,k) b_k - b_n = delta(1,n)")
def _bernoulli_umbral(ctx, n):
    b = ctx.numbers(B)
    return ctx.total(ctx.cseq.binom(n, k) * b[k] for k in range(n + 1)) - b[n], ctx.delta(1, n)


@register("bernoulli-at-1", "beta_n(1) - b_n = delta(1,n)")
def _bernoulli_at_1(ctx, n):
    return xpoly_eval(ctx.poly(B, n), ctx.cseq.one) - ctx.numbers(B)[n], ctx.delta(1, n)


@register("bernoulli-recurrence", "sum_{k<=n} binom_c(n+1,k) b_k = delta(n,0)")
def _bernoulli_recurrence(ctx, n):
    b = ctx.numbers(B)
    return ctx.total(ctx.cseq.binom(n + 1, k) * b[k] for k in range(n + 1)), ctx.delta(n, 0)


@register("bernoulli-integral", "c_q-integral of beta_n over [0,1] = c_n delta(n,0)")
def _bernoulli_integral(ctx, n):
    cseq = ctx.cseq
    return c_integral(ctx.poly(B, n), cseq.zero, cseq.one, cseq), cseq.c(n) * ctx.delta(n, 0)


@register("monomial-in-bernoulli", "x^n = (c_n/c_{n+1}) sum_k binom_c(n+1,k) beta_k(x); [x^n]beta_n = 1")
def _monomial_in_bernoulli(ctx, n):
    cseq = ctx.cseq
    coeffs = [cseq.c(n) / cseq.c(n + 1) * cseq.binom(n + 1, k) for k in range(n + 1)]
    basis = [ctx.poly(B, k) for k in range(n + 1)]
    lhs = (ctx.combination(coeffs, basis), leading_coeff(ctx.poly(B, n)))
    return lhs, (XPoly.monomial(n, cseq.one), (n, cseq.one))


def _euler_identity_ratio(cseq, n):
    # ((n-1) - q(n-2)) / ((n-1)q - (n-2))
    return ((n - 1) - cseq.q * (n - 2)) / ((n - 1) * cseq.q - (n - 2))


@register(
    "euler-identity-polys",
    "sum_k binom_c(n,k) beta_k(x) beta_{n-k}(y) in terms of beta_n, beta_{n-1}, B-hat at (x+y)_c",
    mode=SYMBOLIC_QXY,
    n_min=2,
    n_cap=6,
)
def _euler_identity_polys(ctx, n):
    cseq = ctx.cseq
    lhs = XYPoly()
    for k in range(n + 1):
        lhs = lhs + XYPoly.from_x(ctx.poly(B, k)) * XYPoly.from_y(ctx.poly(B, n - k)) * cseq.binom(n, k)
    rhs = (
        c_substitute(ctx.poly(B, n), cseq) * (-(n - 1) * cseq.one)
        + c_substitute(ctx.poly(B, n - 1), cseq) * (-n * _euler_identity_ratio(cseq, n))
        + c_substitute(bhat(n, cseq), cseq)
        + c_substitute(bhat(n - 1, cseq), cseq) * ((cseq.one - cseq.q) * cseq.ratio(n, 1))
    )
    return lhs, rhs


@register(
    "euler-identity-numbers",
    "sum_{k>=1} binom_c(n,k) b_k b_{n-k} = -n b_n - n b_{n-1} ((n-1)-q(n-2))/((n-1)q-(n-2))",
    n_min=2,
)
def _euler_identity_numbers(ctx, n):
    cseq = ctx.cseq
    b = ctx.numbers(B)
    lhs = ctx.total(cseq.binom(n, k) * b[k] * b[n - k] for k in range(1, n + 1))
    rhs = -n * b[n] - n * b[n - 1] * _euler_identity_ratio(cseq, n)
    return lhs, rhs


@register("bernoulli-ode", "b(t)^2 = (1-qt) b(t) - (1+(1-q)t) t b'(t), coefficient of t^n")
def _bernoulli_ode(ctx, n):
    cseq = ctx.cseq
    b = ctx.generating(B).truncate(n + 1)
    one_minus_qt = TSeries([cseq.one, -cseq.q], n + 1)
    one_plus = TSeries([cseq.one, cseq.one - cseq.q], n + 1)
    t_db = ts_derivative(b).shift_up(1)
    rhs = ts_mul(one_minus_qt, b) - ts_mul(one_plus, t_db)
    return ts_mul(b, b).coeffs[n], rhs.coeffs[n]


# --- Euler -------------------------------------------------------------------


@register("euler-umbral", "sum_k binom_c(n,k) e_k + e_n = 2 delta(0,n)")
def _euler_umbral(ctx, n):
    e = ctx.numbers(E)
    return ctx.total(ctx.cseq.binom(n, k) * e[k] for k in range(n + 1)) + e[n], 2 * ctx.delta(0, n)


@register("euler-at-1", "E_n(1) + e_n = 2 delta(0,n)")
def _euler_at_1(ctx, n):
    return xpoly_eval(ctx.poly(E, n), ctx.cseq.one) + ctx.numbers(E)[n], 2 * ctx.delta(0, n)


@register("monomial-in-euler", "x^n = 1/2 sum_k binom_c(n,k) E_k(x) + 1/2 E_n(x); [x^n]E_n = 1")
def _monomial_in_euler(ctx, n):
    cseq = ctx.cseq
    half = cseq.one / 2
    coeffs = [half * cseq.binom(n, k) for k in range(n + 1)]
    coeffs[n] = coeffs[n] + half
    basis = [ctx.poly(E, k) for k in range(n + 1)]
    lhs = (ctx.combination(coeffs, basis), leading_coeff(ctx.poly(E, n)))
    return lhs, (XPoly.monomial(n, cseq.one), (n, cseq.one))


@register("euler-recurrence", "-2 e_n = sum_{k<n} binom_c(n,k) e_k", n_min=1)
def _euler_recurrence(ctx, n):
    e = ctx.numbers(E)
    return -2 * e[n], ctx.total(ctx.cseq.binom(n, k) * e[k] for k in range(n))


# --- Genocchi ----------------------------------------------------------------


@register("genocchi-umbral", "sum_k binom_c(n,k) g_k + g_n = 2 delta(1,n)")
def _genocchi_umbral(ctx, n):
    g = ctx.numbers(G)
    return ctx.total(ctx.cseq.binom(n, k) * g[k] for k in range(n + 1)) + g[n], 2 * ctx.delta(1, n)


@register("genocchi-at-1", "G_n(1) + g_n = 2 delta(1,n)")
def _genocchi_at_1(ctx, n):
    return xpoly_eval(ctx.poly(G, n), ctx.cseq.one) + ctx.numbers(G)[n], 2 * ctx.delta(1, n)


@register("genocchi-degree", "deg G_n = n-1 with leading coefficient c_n/c_{n-1}; G_0 = 0")
def _genocchi_degree(ctx, n):
    poly = ctx.poly(G, n)
    if n == 0:
        return poly, XPoly()
    return leading_coeff(poly), (n - 1, ctx.cseq.ratio(n, 1))


@register(
    "monomial-in-genocchi",
    "x^n = 1/2 (c_n/c_{n+1}) (sum_{k<=n+1} binom_c(n+1,k) G_k(x) + G_{n+1}(x))",
)
def _monomial_in_genocchi(ctx, n):
    cseq = ctx.cseq
    scale = cseq.one / 2 * cseq.c(n) / cseq.c(n + 1)
    coeffs = [scale * cseq.binom(n + 1, k) for k in range(n + 2)]
    coeffs[n + 1] = coeffs[n + 1] + scale
    basis = [ctx.poly(G, k) for k in range(n + 2)]
    return ctx.combination(coeffs, basis), XPoly.monomial(n, cseq.one)


@register("genocchi-recurrence", "-2 g_{n+1} = sum_{k<=n} binom_c(n+1,k) g_k", n_min=1)
def _genocchi_recurrence(ctx, n):
    g = ctx.numbers(G)
    return -2 * g[n + 1], ctx.total(ctx.cseq.binom(n + 1, k) * g[k] for k in range(n + 1))


@register("genocchi-euler-bridge", "G_n(x) = (c_n/c_{n-1}) E_{n-1}(x)", n_min=1)
def _genocchi_euler_bridge(ctx, n):
    return ctx.poly(G, n), ctx.poly(E, n - 1) * ctx.cseq.ratio(n, 1)


# --- deformed exponential and umbral machinery -------------------------------


@register(
    "prop1-product",
    "c_n [t^n] e_q(xt)e_q(yt) = c_n [t^n] e_q(xt (+)_q yt) = (x+y)^n_c",
    mode=SYMBOLIC_QXY,
    n_cap=12,
)
def _prop1_product(ctx, n):
    cseq = ctx.cseq
    product = ts_mul(eq_exp_scaled_series(n, XYPoly.x(), cseq), eq_exp_scaled_series(n, XYPoly.y(), cseq))
    xt = TSeries.monomial(1, n, XYPoly.x())
    yt = TSeries.monomial(1, n, XYPoly.y())
    composed = eq_exp_at(cseq.deformed_sum(xt, yt), cseq)
    expected = cseq.power_of_sum(n)
    lhs = (c_coefficient(product, n, cseq), c_coefficient(composed, n, cseq))
    return lhs, (expected, expected)


@register("sheffer-lowering", "t s_n(x) = (c_n/c_{n-1}) s_{n-1}(x) for all three families", n_min=1)
def _sheffer_lowering(ctx, n):
    t = TSeries.monomial(1, n, ctx.cseq.one)
    lhs = tuple(apply_series(t, ctx.poly(f, n), ctx.cseq) for f in Family)
    rhs = tuple(ctx.poly(f, n - 1) * ctx.cseq.ratio(n, 1) for f in Family)
    return lhs, rhs


@register(
    "sheffer-identity",
    "e_q(yt) s_n(x) = sum_k binom_c(n,k) y^k s_{n-k}(x) with y symbolic",
    mode=SYMBOLIC_QXY,
    n_cap=8,
)
def _sheffer_identity(ctx, n):
    cseq = ctx.cseq
    shift = eq_exp_scaled_series(n, XYPoly.y(), cseq)
    lhs, rhs = [], []
    for f in Family:
        lhs.append(XYPoly() + apply_series(shift, ctx.poly(f, n), cseq))
        total = XYPoly()
        for k in range(n + 1):
            total = total + XYPoly.y() ** k * ctx.poly(f, n - k) * cseq.binom(n, k)
        rhs.append(total)
    return lhs, rhs


@register("sheffer-orthogonality", "<g(t) t^k | s_n(x)> = c_n delta(n,k) for k >= t_shift")
def _sheffer_orthogonality(ctx, n):
    cseq = ctx.cseq
    lhs, rhs = [], []
    for f in Family:
        sheffer = ctx.pair_of(f)
        for k in range(sheffer.t_shift, max(n, ctx.n_max) + 1):
            lhs.append(pair(sheffer.dual(k), ctx.poly(f, n), cseq))
            rhs.append(cseq.c(n) * ctx.delta(n, k))
    return lhs, rhs


@register("conjugate-representation", "sheffer_generate = conjugate representation = sum formula")
def _conjugate_representation(ctx, n):
    cseq = ctx.cseq
    lhs, rhs = [], []
    for f in Family:
        sheffer = ctx.pair_of(f)
        lhs.append((sheffer_generate(sheffer, n, cseq), conjugate_representation(sheffer, n, cseq)))
        rhs.append((ctx.poly(f, n), ctx.poly(f, n)))
    return lhs, rhs


@register("integral-lemma", "<(e_q(yt)-1)/t | x^n> = c_q-integral of x^n over [0,y], y symbolic")
def _integral_lemma(ctx, n):
    cseq = ctx.cseq
    y = XPoly.x()
    functional = (eq_exp_scaled_series(n + 1, y, cseq) - 1).shift_down(1)
    monomial = XPoly.monomial(n, cseq.one)
    return pair(functional, monomial, cseq), c_integral(monomial, cseq.zero, y, cseq)


@register("c-integral-inverse", "D(I x^n) = x^n for n >= 0; I(D x^n) = x^n for n >= 1, I(D 1) = 0")
def _c_integral_inverse(ctx, n):
    cseq = ctx.cseq
    monomial = XPoly.monomial(n, cseq.one)
    lhs = (d_cq(inverse_t(monomial, cseq), 1, cseq), inverse_t(d_cq(monomial, 1, cseq), cseq))
    return lhs, (monomial, monomial if n >= 1 else XPoly())


# --- connections -------------------------------------------------------------


@register("euler-in-bernoulli-forms", "both printed E_n-in-beta forms agree and reconstruct E_n")
def _euler_in_bernoulli_forms(ctx, n):
    cseq = ctx.cseq
    single = euler_in_bernoulli(n, "single", cseq)
    double = euler_in_bernoulli(n, "double", cseq)
    basis = [ctx.poly(B, k) for k in range(n + 1)]
    return (single, ctx.combination(single, basis)), (double, ctx.poly(E, n))


@register("genocchi-in-bernoulli-forms", "both printed G_n-in-beta forms agree and reconstruct G_n", n_min=1)
def _genocchi_in_bernoulli_forms(ctx, n):
    cseq = ctx.cseq
    single = genocchi_in_bernoulli(n, "single", cseq)
    double = genocchi_in_bernoulli(n, "double", cseq)
    basis = [ctx.poly(B, k) for k in range(n)]
    return (single, ctx.combination(single, basis)), (double, ctx.poly(G, n))


def _bernoulli_in_euler_with(lam):
    def predicate(ctx, n):
        cseq = ctx.cseq
        value = lam if lam is not None else resolve_correction_lambda(cseq).resolved
        coeffs = bernoulli_in_euler(n, value * cseq.one, cseq)
        basis = [ctx.poly(E, k) for k in range(n + 1)]
        return ctx.combination(coeffs, basis), ctx.poly(B, n)

    return predicate


register(
    "bernoulli-in-euler",
    "beta_n(x) = sum_k binom_c(n,k) b_{n-k} E_k(x) + lambda (c_n/c_{n-1}) E_{n-1}(x), lambda oracle-resolved",
    n_min=1,
    literal=_bernoulli_in_euler_with(1),
    resolve=resolve_correction_lambda,
)(_bernoulli_in_euler_with(None))


@register("route-agreement", "series route = recurrence route for all three families")
def _route_agreement(ctx, n):
    lhs = tuple(ctx.numbers(f)[n] for f in Family)
    rhs = tuple(ctx.recurrence(f)[n] for f in Family)
    return lhs, rhs


@register(
    "bernoulli-basis-expansion",
    "d_k = (1/c_k) integral_0^1 D^k p reconstructs p; on E_n it equals the E-in-beta connection",
)
def _bernoulli_basis_expansion(ctx, n):
    cseq = ctx.cseq
    basis = [ctx.poly(B, k) for k in range(n + 1)]
    monomial = XPoly.monomial(n, cseq.one)
    on_monomial = expand_in_bernoulli_basis(monomial, cseq)
    on_euler = expand_in_bernoulli_basis(ctx.poly(E, n), cseq)
    expected = [cseq.c(n) / cseq.c(n + 1) * cseq.binom(n + 1, k) for k in range(n + 1)]
    lhs = (ctx.combination(on_monomial, basis), on_monomial, on_euler)
    return lhs, (monomial, expected, euler_in_bernoulli(n, "single", cseq))


def _euler_basis_with(sign):
    def predicate(ctx, n):
        cseq = ctx.cseq
        basis = [ctx.poly(E, k) for k in range(n + 1)]
        monomial = XPoly.monomial(n, cseq.one)
        coeffs = expand_in_euler_basis(monomial, sign, cseq)
        if n == 0:
            return ctx.combination(coeffs, basis), monomial
        on_bernoulli = expand_in_euler_basis(ctx.poly(B, n), sign, cseq)
        lhs = (ctx.combination(coeffs, basis), on_bernoulli)
        return lhs, (monomial, bernoulli_in_euler(n, None, cseq))

    return predicate


register(
    "euler-basis-expansion",
    "d_k = (1/c_k)((D^k p)(1) +/- (D^k p)(0))/2 reconstructs x^n and gives the beta-in-E connection, sign oracle-resolved",
    literal=_euler_basis_with(-1),
    resolve=resolve_euler_basis_sign,
)(_euler_basis_with(None))


@register("classical-limit", "at q = 1 the numbers equal the classical Bernoulli, Euler and Genocchi values")
def _classical_limit(ctx, n):
    symbolic = default_cache()
    lhs = tuple(
        qrat_eval(build_table(f, ctx.n_max, "series", symbolic).numbers[n], 1) for f in Family
    )
    rhs = tuple(classical_numbers(f, n)[n] for f in Family)
    return lhs, rhs
