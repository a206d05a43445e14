"""
Published tables of the degenerate Bernoulli, Euler and Genocchi families for
n = 0..4, transcribed as printed, plus the entries found to be misprinted.

Each table maps n to (polynomial, number).
"""
import os
import sys

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from app.exactnum import QRat
from app.families import Family
from app.polyx import XPoly

q = QRat.q()
x = XPoly.x()


def _over(p, den):
    return p * (1 / den)


_B4_NUM = 19 * q ** 3 - 76 * q ** 2 + 94 * q - 36

BERNOULLI_PRINTED = {
    0: (XPoly.constant(1), QRat(1)),
    1: (x - q / 2, -q / 2),
    2: (x ** 2 - x + (QRat(1) / 3 - q / 6), QRat(1) / 3 - q / 6),
    3: (
        _over(-4 * (2 * q - 1) * x ** 3 + 6 * q * x ** 2 + 2 * (q - 2) * x + (q ** 2 - 3 * q + 2), 4 * (2 * q - 1)),
        (q ** 2 - 3 * q + 2) / (4 * (2 * q - 1)),
    ),
    4: (
        _over(
            (6 * q ** 2 - 7 * q + 2) * x ** 4
            - 2 * (2 * q ** 2 - q) * x ** 3
            - (q ** 2 - 2) * x ** 2
            - (q ** 2 - 3 * q + 2) * x
            - _B4_NUM / 30,
            (2 * q - 1) * (3 * q - 2),
        ),
        -_B4_NUM / (30 * (2 * q - 1) * (3 * q - 2)),
    ),
}

EULER_PRINTED = {
    0: (XPoly.constant(1), QRat(1)),
    1: (x - QRat(1) / 2, QRat(-1) / 2),
    2: (_over(2 * q * x ** 2 - 2 * x + (1 - q), 2 * q), (1 - q) / (2 * q)),
    3: (
        _over(
            (8 * q ** 2 - 4 * q) * x ** 3 - 6 * q * x ** 2 + (6 - 6 * q) * x + (-4 * q ** 2 + 8 * q - 3),
            4 * q * (2 * q - 1),
        ),
        (-4 * q ** 2 + 8 * q - 3) / (4 * q * (2 * q - 1)),
    ),
    4: (
        _over(
            (12 * q ** 3 - 14 * q ** 2 + 4 * q) * x ** 4
            - (8 * q ** 2 - 4 * q) * x ** 3
            - (6 * q ** 2 - 6 * q) * x ** 2
            - (8 * q ** 2 - 16 * q + 6) * x
            + (-6 * q ** 3 + 18 * q ** 2 - 15 * q + 3),
            2 * q * (2 * q - 1) * (3 * q - 2),
        ),
        (-6 * q ** 3 + 18 * q ** 2 - 15 * q + 3) / (2 * q * (2 * q - 1) * (3 * q - 2)),
    ),
}

GENOCCHI_PRINTED = {
    0: (XPoly(), QRat(0)),
    1: (XPoly.constant(1), QRat(1)),
    2: (_over(2 * x - 1, q), -1 / q),
    3: (_over(6 * q * x ** 2 - 6 * x + (3 - 3 * q), 2 * q * (2 * q - 1)), (3 - 3 * q) / (2 * q * (2 * q - 1))),
    4: (
        _over(
            (8 * q ** 2 - 4 * q) * x ** 3 - 6 * q * x ** 2 + (6 - 6 * q) * x - (4 * q ** 2 - 8 * q + 3),
            q * (2 * q - 1) * (3 * q - 2),
        ),
        -(4 * q ** 2 - 8 * q + 3) / (q * (2 * q - 1) * (3 * q - 2)),
    ),
}

PRINTED = {
    Family.BERNOULLI: BERNOULLI_PRINTED,
    Family.EULER: EULER_PRINTED,
    Family.GENOCCHI: GENOCCHI_PRINTED,
}

# (family, n, "poly" | "number") -> corrected value
ERRATA = {
    # row 3 is printed with the opposite sign
    (Family.BERNOULLI, 3, "poly"): -BERNOULLI_PRINTED[3][0],
    (Family.BERNOULLI, 3, "number"): -BERNOULLI_PRINTED[3][1],
    # x^2 coefficient is -(q^2-2q), printed as -(q^2-2)
    (Family.BERNOULLI, 4, "poly"): BERNOULLI_PRINTED[4][0]
    + _over((2 * q - 2) * x ** 2, (2 * q - 1) * (3 * q - 2)),
}


def corrected(family, n):
    """The table entry (polynomial, number) with any erratum applied"""
    poly, number = PRINTED[family][n]
    poly = ERRATA.get((family, n, "poly"), poly)
    number = ERRATA.get((family, n, "number"), number)
    return poly, number
