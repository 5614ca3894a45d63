"""Printed values of the quantum table H^{n-1}_G((1^n), (n)) for n = 2..5.

These strings are kept as data for comparison only.  Several n >= 3 entries
disagree with values recomputed by independent pipelines, so they are never
used as expected results.
"""

from .exact import RationalFunction, parse_rational_function

TABLE_COLUMNS = ("E(q)", "H(q)", "E'(q)")

PRINTED = {
    2: {
        "E(q)": "1/(2*(1-q))",
        "H(q)": "1/(2*(1-q))",
        "E'(q)": "q/(2*(1-q))",
    },
    3: {
        "E(q)": "(1+5*q)/(3*(1-q)*(1-q^2))",
        "H(q)": "(5+q)/(3*(1-q)*(1-q^2))",
        "E'(q)": "(q^2+5*q^3)/(3*(1-q)*(1-q^2))",
    },
    4: {
        "E(q)": "(1+11*q+11*q^2+q^3)/(4*(1-q)*(1-q^2)*(1-q^3))",
        "H(q)": "(1+11*q+11*q^2+q^3)/(4*(1-q)*(1-q^2)*(1-q^3))",
        "E'(q)": "(q^3+11*q^4+11*q^5+q^6)/(4*(1-q)*(1-q^2)*(1-q^3))",
    },
    5: {
        "E(q)": "(1+19*q+39*q^2+260*q^3+261*q^4+241*q^5+2179*q^6)/(5*(1-q)*(1-q^2)*(1-q^3)*(1-q^4))",
        "H(q)": "(2179+241*q+261*q^2+260*q^3+39*q^4+19*q^5+q^6)/(5*(1-q)*(1-q^2)*(1-q^3)*(1-q^4))",
        "E'(q)": "(q^4+19*q^5+39*q^6+260*q^7+261*q^8+241*q^9+2179*q^10)/(5*(1-q)*(1-q^2)*(1-q^3)*(1-q^4))",
    },
}

# plain Hurwitz numbers listed alongside the table, as (profiles, value)
PRINTED_PLAIN = [
    ([(2,), (2,)], "1/2"),
    ([(3,), (3,)], "1/3"),
    ([(2, 1), (2, 1), (3,)], "1"),
    ([(4,), (4,)], "1/4"),
    ([(3, 1), (2, 1, 1), (4,)], "1"),
    ([(2, 2), (2, 1, 1), (4,)], "1/2"),
    ([(2, 1, 1)] * 3 + [(4,)], "4"),
    ([(5,), (5,)], "1/5"),
    ([(3, 1, 1), (3, 1, 1), (5,)], "1"),
    ([(3, 1, 1), (2, 1, 1, 1), (2, 1, 1, 1), (5,)], "5"),
    ([(3, 2), (2, 1, 1, 1), (5,)], "1"),
    ([(4, 1), (2, 1, 1, 1), (5,)], "1"),
    ([(2, 2, 1), (2, 1, 1, 1), (2, 1, 1, 1), (5,)], "5"),
    ([(2, 1, 1, 1)] * 4 + [(5,)], "25"),
    ([(2, 2, 1), (2, 2, 1), (5,)], "1"),
    ([(2, 2, 1), (3, 1, 1), (5,)], "1"),
]


def printed_value(n: int, column: str) -> RationalFunction:
    return parse_rational_function(PRINTED[n][column])
