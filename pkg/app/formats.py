# app/formats.py
"""
Readers and writers for the command line documents.

JSON: a scalar of Q(q) is {"num": [...], "den": [...]} and a polynomial in x
is {"num": [[...] per x power], "den": [...]}; entries are integer strings,
index i is the coefficient of q^i, and numerator and denominator share one
integer scaling with content 1 and a positive leading denominator.

Text: a single fraction "(numerator)/(denominator)" in x and q, readable
back by ``parse_polynomial``.

LaTeX: a {cll} tabular per family, denominators factored into c q(2q-1)...
"""
import csv
import io
import json
import logging
import re
from fractions import Fraction
from tokenize import TokenError
from typing import Dict, List, Sequence, Tuple

import sympy as sp
from sympy.parsing.sympy_parser import (
    convert_xor,
    implicit_multiplication,
    parse_expr,
    split_symbols,
    standard_transformations,
)

from app.cfactorial import q_factor
from app.exactnum import QPoly, QRat, integer_scaled, qpoly_gcd
from app.families import FamilyTable
from app.polyx import XPoly, XYPoly

logger = logging.getLogger(__name__)

X, Q = sp.symbols("x q")

_ALLOWED = re.compile(r"[0-9xq\s+\-*/^()]")
_TRANSFORMATIONS = standard_transformations + (split_symbols, implicit_multiplication, convert_xor)


class LiteralParseError(ValueError):
    """A polynomial literal could not be read; ``position`` is 0-based"""

    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} at position {position}")


# --- canonical integer rows ---------------------------------------------------


def _as_qrat(value) -> QRat:
    if isinstance(value, QRat):
        return value
    return QRat(Fraction(value))


def _common_denominator(values: Sequence[QRat]) -> QPoly:
    den = QPoly.constant(1)
    for value in values:
        if value.den.is_one():
            continue
        den = den * value.den.exact_div(qpoly_gcd(den, value.den))
    return den


def scalar_rows(value):
    """Integer numerator and denominator coefficient lists of one scalar"""
    value = _as_qrat(value)
    (num,), den = integer_scaled([value.num.coeffs], value.den.coeffs)
    return num, den


def poly_rows(p: XPoly):
    """Integer numerator rows (one per x power) over one integer denominator"""
    coeffs = [_as_qrat(c) for c in p.coeffs]
    if not coeffs:
        return [], [1]
    den = _common_denominator(coeffs)
    rows = []
    for c in coeffs:
        scaled = c * den
        rows.append(scaled.num.coeffs)
    return integer_scaled(rows, den.coeffs)


# --- JSON ---------------------------------------------------------------------


def _strings(values) -> List[str]:
    return [str(v) for v in values]


def scalar_to_json(value) -> Dict:
    num, den = scalar_rows(value)
    return {"num": _strings(num), "den": _strings(den)}


def poly_to_json(p: XPoly) -> Dict:
    rows, den = poly_rows(p)
    return {"num": [_strings(row) for row in rows], "den": _strings(den)}


def scalar_from_json(obj: Dict) -> QRat:
    return QRat(QPoly(Fraction(c) for c in obj["num"]), QPoly(Fraction(c) for c in obj["den"]))


def poly_from_json(obj: Dict) -> XPoly:
    den = QPoly(Fraction(c) for c in obj["den"])
    return XPoly(QRat(QPoly(Fraction(c) for c in row), den) for row in obj["num"])


def value_to_json(value):
    """Serialize anything a witness can hold"""
    if value is None:
        return None
    if isinstance(value, (QRat, Fraction)):
        return scalar_to_json(value)
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return scalar_to_json(value)
    if isinstance(value, XPoly):
        return poly_to_json(value)
    if isinstance(value, XYPoly):
        return {
            "terms": [
                {"x": i, "y": j, "coeff": scalar_to_json(c)}
                for (i, j), c in sorted(value.terms.items())
            ]
        }
    if isinstance(value, (list, tuple)):
        return [value_to_json(v) for v in value]
    return str(value)


def table_to_json(table: FamilyTable) -> str:
    rows = [
        {"n": n, "poly": poly_to_json(poly), "number": scalar_to_json(number)}
        for n, poly, number in table.rows()
    ]
    return json.dumps({"family": table.family.value, "rows": rows}, indent=2)


def table_from_json(text: str):
    """Parse a JSON table document back into (n, XPoly, QRat) rows"""
    doc = json.loads(text)
    return [
        (row["n"], poly_from_json(row["poly"]), scalar_from_json(row["number"]))
        for row in doc["rows"]
    ]


def report_to_dict(report, with_timing: bool = False) -> Dict:
    out = {
        "id": report.id,
        "description": report.description,
        "mode": report.mode,
        "n_range": list(report.n_range),
        "passed": report.passed,
        "outcomes": [
            {
                "n": outcome.n,
                "passed": outcome.passed,
                "witness": None if outcome.witness is None else {
                    "lhs": value_to_json(outcome.witness.lhs),
                    "rhs": value_to_json(outcome.witness.rhs),
                    "difference": value_to_json(outcome.witness.difference),
                    "q0": None if outcome.witness.q0 is None else str(outcome.witness.q0),
                },
            }
            for outcome in report.outcomes
        ],
        "notes": list(report.notes),
    }
    if report.resolution is not None:
        resolution = report.resolution
        out["resolution"] = {
            "name": resolution.name,
            "statement": str(resolution.statement),
            "proof": str(resolution.proof),
            "resolved": str(resolution.resolved),
            "matched": resolution.matched,
        }
    if with_timing:
        out["metadata"] = dict(report.metadata)
    return out


def reports_to_json(reports, with_timing: bool = False) -> str:
    doc = {"reports": [report_to_dict(r) for r in reports]}
    if with_timing:
        doc["metadata"] = {"wall_time": {r.id: r.metadata.get("wall_time") for r in reports}}
    return json.dumps(doc, indent=2)


# --- text and CSV -------------------------------------------------------------


def _sympy_rows(rows, den):
    num = sum(
        (sp.Integer(c) * Q ** i * X ** k for k, row in enumerate(rows) for i, c in enumerate(row)),
        sp.Integer(0),
    )
    denominator = sum((sp.Integer(c) * Q ** i for i, c in enumerate(den)), sp.Integer(0))
    return num, denominator


def _fraction_text(num, den) -> str:
    num_text = sp.sstr(num).replace("**", "^")
    if den == 1:
        return num_text
    return f"({num_text})/({sp.sstr(den).replace('**', '^')})"


def poly_to_text(p: XPoly) -> str:
    return _fraction_text(*_sympy_rows(*poly_rows(p)))


def scalar_to_text(value) -> str:
    num, den = scalar_rows(value)
    return _fraction_text(*_sympy_rows([num], den))


def table_to_csv(table: FamilyTable) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    for n, poly, number in table.rows():
        writer.writerow([n, poly_to_text(poly), scalar_to_text(number)])
    return buffer.getvalue()


def reports_to_csv(reports) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    for report in reports:
        for outcome in report.outcomes:
            writer.writerow([report.id, outcome.n, "pass" if outcome.passed else "fail"])
    return buffer.getvalue()


# --- LaTeX --------------------------------------------------------------------


def _factored_denominator(den: Sequence[int]):
    """Split an integer q-polynomial into c * q(2q-1)... * rest"""
    remaining = QPoly(den)
    factors = []
    j = 1
    while remaining.degree > 0 and j <= 2 * len(den) + 2:
        quotient, remainder = remaining.divmod(q_factor(j))
        if remainder.is_zero():
            factors.append(j)
            remaining = quotient
        else:
            j += 1
    return remaining, factors


def _latex_fraction(rows, den) -> str:
    num, _ = _sympy_rows(rows, [1])
    num_tex = sp.latex(sp.collect(sp.expand(num), X))
    rest, factors = _factored_denominator(den)
    if rest.degree == 0 and not factors and rest.coeffs[0] == 1:
        return num_tex
    parts = []
    if rest.degree > 0:
        rest_expr = sum(sp.Rational(c.numerator, c.denominator) * Q ** i for i, c in enumerate(rest.coeffs))
        parts.append(f"\\left({sp.latex(rest_expr)}\\right)")
    elif rest.coeffs[0] != 1:
        parts.append(str(rest.coeffs[0]))
    for j in factors:
        parts.append("q" if j == 1 else f"({j}q-{j - 1})")
    return f"\\frac{{{num_tex}}}{{{''.join(parts)}}}"


def table_to_latex(table: FamilyTable) -> str:
    symbol = {"bernoulli": ("\\beta", "b"), "euler": ("E", "e"), "genocchi": ("G", "g")}
    poly_sym, num_sym = symbol[table.family.value]
    lines = [
        "\\begin{table}[!h]",
        "\\begin{tabular}{cll}",
        "\\hline",
        f"$n$ & \\quad${poly_sym}_n(x)$ & ${num_sym}_n$ \\\\",
        "\\hline",
    ]
    for n, poly, number in table.rows():
        num, den = scalar_rows(number)
        lines.append(
            f"${n}$ & \\quad${_latex_fraction(*poly_rows(poly))}$ & "
            f"\\quad${_latex_fraction([num], den)}$\\\\[4pt]"
        )
    lines += ["\\hline", "\\end{tabular}", f"\\caption{{{table.family.title}}}", "\\end{table}"]
    return "\n".join(lines) + "\n"


def reports_to_latex(reports) -> str:
    lines = ["\\begin{tabular}{lll}", "\\hline", "identity & $n$ & status \\\\", "\\hline"]
    for report in reports:
        lo, hi = report.n_range
        status = "pass" if report.passed else "fail: " + ", ".join(str(o.n) for o in report.failures)
        lines.append(f"\\texttt{{{report.id}}} & ${lo}..{hi}$ & {status} \\\\")
    lines += ["\\hline", "\\end{tabular}"]
    return "\n".join(lines) + "\n"


def coefficients_to_text(coeffs) -> List[str]:
    return [scalar_to_text(c) for c in coeffs]


def scalar_to_latex(value) -> str:
    num, den = scalar_rows(value)
    return _latex_fraction([num], den)


# --- literal reader -----------------------------------------------------------

# Total degree in x and q, and bit length of integer constants, a literal may reach.
MAX_LITERAL_DEGREE = 128
MAX_LITERAL_BITS = 4096

_POWER = re.compile(r"\^|\*\*")
_INTEGER_EXPONENT = re.compile(r"\s*(?:\(\s*-?\s*(\d+)\s*\)|-?\s*(\d+))")
_NEGATIVE_EXPONENT = re.compile(r"(?:\^|\*\*)\s*\(?\s*-")


def _power_position(text: str, too_large: bool = False) -> int:
    """Position of the first power operator without a small integer-literal exponent"""
    first = None
    for m in _POWER.finditer(text):
        first = m.start() if first is None else first
        literal = _INTEGER_EXPONENT.match(text, m.end())
        if literal is None:
            return m.start()
        if too_large and int(literal.group(1) or literal.group(2)) > MAX_LITERAL_DEGREE:
            return m.start()
    return first if first is not None else 0


def _denominator_position(text: str) -> int:
    candidates = [text.find("/")]
    negative = _NEGATIVE_EXPONENT.search(text)
    if negative:
        candidates.append(negative.start())
    candidates = [c for c in candidates if c >= 0]
    return min(candidates, default=0)


def _integer_exponent(exp, text: str) -> int:
    if exp.free_symbols or exp.has(sp.Pow):
        raise LiteralParseError("exponent must be an integer constant", _power_position(text))
    value = exp.doit()
    if not value.is_Integer:
        raise LiteralParseError("exponent must be an integer constant", _power_position(text))
    return int(value)


def _literal_size(expr, text: str) -> Tuple[int, int]:
    """Upper bounds (total degree, bit length) of an unevaluated literal"""
    if expr.is_Symbol:
        return 1, 0
    if isinstance(expr, sp.Rational):
        return 0, abs(int(expr.p)).bit_length() + int(expr.q).bit_length()
    if expr.is_Pow:
        base, exp = expr.args
        power = abs(_integer_exponent(exp, text))
        degree, bits = _literal_size(base, text)
        return degree * power, bits * max(power, 1)
    if expr.is_Add or expr.is_Mul:
        sizes = [_literal_size(arg, text) for arg in expr.args]
        if expr.is_Add:
            return max(d for d, _ in sizes), max(b for _, b in sizes) + len(sizes)
        return sum(d for d, _ in sizes), sum(b for _, b in sizes)
    raise LiteralParseError("not a polynomial expression", _power_position(text))


def parse_polynomial(text: str) -> XPoly:
    """
    Read a polynomial in x whose coefficients are rational functions of q.

    The grammar is integer constants, x, q, parentheses, + - * / and ^ for
    powers; juxtaposition multiplies. x may not appear in a denominator.
    Exponents are integer constants, and the literal may not exceed total
    degree MAX_LITERAL_DEGREE.

    Raises:
        LiteralParseError: with the 0-based position of the problem
    """
    if not text.strip():
        raise LiteralParseError("empty polynomial literal", 0)
    for position, ch in enumerate(text):
        if not _ALLOWED.match(ch):
            raise LiteralParseError(f"unexpected character {ch!r}", position)
    local_dict = {"x": X, "q": Q}
    try:
        raw = parse_expr(text, local_dict=local_dict, transformations=_TRANSFORMATIONS, evaluate=False)
    except (SyntaxError, TokenError, TypeError, ValueError, sp.SympifyError) as e:
        offset = getattr(e, "offset", None)
        position = max(0, min(len(text), offset - 1)) if isinstance(offset, int) else len(text)
        raise LiteralParseError("malformed polynomial literal", position) from e
    if not isinstance(raw, sp.Expr) or not raw.free_symbols <= {X, Q}:
        raise LiteralParseError("not a polynomial expression", 0)
    degree_bound, bits_bound = _literal_size(raw, text)
    if degree_bound > MAX_LITERAL_DEGREE or bits_bound > MAX_LITERAL_BITS:
        raise LiteralParseError(
            f"literal too large (total degree above {MAX_LITERAL_DEGREE} or constants above {MAX_LITERAL_BITS} bits)",
            _power_position(text, too_large=True),
        )
    expr = parse_expr(text, local_dict=local_dict, transformations=_TRANSFORMATIONS)
    if expr.has(sp.zoo, sp.oo, sp.nan):
        raise LiteralParseError("division by zero", max(text.find("/"), 0))
    num, den = sp.fraction(sp.cancel(sp.together(expr)))
    if den.has(X):
        raise LiteralParseError("x may not appear in a denominator", _denominator_position(text))
    try:
        num_poly = sp.Poly(num, X, Q, domain=sp.QQ)
        den_poly = sp.Poly(den, Q, domain=sp.QQ)
    except sp.PolynomialError as e:
        raise LiteralParseError("not a polynomial expression", _power_position(text)) from e
    den_q = QPoly(_to_fraction(c) for c in reversed(den_poly.all_coeffs()))
    rows: Dict[int, Dict[int, Fraction]] = {}
    for (i, j), c in num_poly.terms():
        rows.setdefault(i, {})[j] = _to_fraction(c)
    degree = max(rows, default=-1)
    coeffs = []
    for i in range(degree + 1):
        row = rows.get(i, {})
        num_q = QPoly(row.get(j, Fraction(0)) for j in range(max(row, default=-1) + 1))
        coeffs.append(QRat(num_q, den_q))
    logger.debug("parsed %r as degree-%d polynomial", text, degree)
    return XPoly(coeffs)


def _to_fraction(c) -> Fraction:
    c = sp.Rational(c)
    return Fraction(int(c.p), int(c.q))
