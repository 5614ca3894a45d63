"""Classical and quantum weighted double Hurwitz numbers in exact arithmetic."""

from .exact import MultiPoly, RationalFunction, TruncatedSeries, parse_rational_function, rf_arith, series_expand
from .hurwitz import (
    hurwitz_number,
    okounkov_cov,
    weighted_hurwitz,
    weighted_hurwitz_brute,
    weighted_hurwitz_central,
    weighted_hurwitz_geometric,
)
from .partitions import enumerate_partitions, parse_partition
from .weights import WeightGenerator, parse_generator

__all__ = [
    "MultiPoly",
    "RationalFunction",
    "TruncatedSeries",
    "WeightGenerator",
    "enumerate_partitions",
    "hurwitz_number",
    "okounkov_cov",
    "parse_generator",
    "parse_partition",
    "parse_rational_function",
    "rf_arith",
    "series_expand",
    "weighted_hurwitz",
    "weighted_hurwitz_brute",
    "weighted_hurwitz_central",
    "weighted_hurwitz_geometric",
]
