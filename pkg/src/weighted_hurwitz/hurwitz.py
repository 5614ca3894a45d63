"""Hurwitz numbers: plain, and weighted by a generator G through three independent pipelines.

* geometric: sum over branch-point configurations of W_G times a plain Hurwitz number;
* central: coefficients of G(z, J) C_mu in the class basis;
* brute: exhaustive count of weakly monotone transposition paths.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache

from . import _limits
from .characters import character_table
from .classalg import central_weight_element, class_sum, class_product
from .exact import ZERO, RationalFunction, as_rf
from .partitions import Partition, aut_order, colength, enumerate_partitions, partition, z_mu
from .perms import left_transpose, perms_by_type, cycle_type
from .weights import WeightGenerator, format_generator, geometric_weight, path_weight

PIPELINES = ("geometric", "central", "brute")


def _check_weights(*parts: Partition) -> int:
    sizes = {sum(p) for p in parts}
    if len(sizes) != 1:
        raise ValueError(f"profiles have different weights: {sorted(sizes)}")
    return sizes.pop()


def hurwitz_number(profiles) -> Fraction:
    """sum_lam h(lam)^(k-2) prod_i chi_lam(mu_i) / z_mu_i (Frobenius-Schur)."""
    profiles = [partition(p) for p in profiles]
    if not profiles:
        raise ValueError("at least one profile is required")
    n = _check_weights(*profiles)
    if n < 1:
        raise ValueError("profiles must have positive weight")
    table = character_table(n)
    cols = [table.order.index(p) for p in profiles]
    k = len(profiles)
    total = Fraction(0)
    for lam, row in zip(table.order, table.values):
        h = Fraction(math.factorial(n), row[-1])
        term = h ** (k - 2)
        for p, col in zip(profiles, cols):
            term *= Fraction(row[col], z_mu(p))
            if not term:
                break
        total += term
    return total


# ---------------------------------------------------------------------------
# geometric pipeline


def _admissible_profiles(n: int, max_colength: int) -> list[Partition]:
    """Non-identity partitions of n, by decreasing colength then reverse-lex order."""
    profiles = [p for p in enumerate_partitions(n) if 1 <= colength(p) <= max_colength]
    return sorted(profiles, key=lambda p: -colength(p))


def configurations(n: int, d: int) -> list[tuple[Partition, ...]]:
    """Multisets of non-identity profiles of n whose colengths sum to d."""
    pool = _admissible_profiles(n, d)
    out = []

    def extend(start: int, remaining: int, chosen: list):
        if remaining == 0:
            out.append(tuple(chosen))
            return
        for i in range(start, len(pool)):
            c = colength(pool[i])
            if c <= remaining:
                chosen.append(pool[i])
                extend(i, remaining - c, chosen)
                chosen.pop()

    extend(0, d, [])
    return out


def ordering_factor(config) -> Fraction:
    """Number of orderings counted per multiset: |aut(colength partition)| / prod mult!."""
    lam = partition(colength(p) for p in config)
    repeats = math.prod(math.factorial(m) for m in Counter(config).values())
    return Fraction(aut_order(lam), repeats)


def weighted_hurwitz_geometric(G: WeightGenerator, d: int, mu, nu) -> RationalFunction:
    mu, nu = partition(mu), partition(nu)
    n = _check_weights(mu, nu)
    if d < 0:
        raise ValueError("d must be non-negative")
    total = ZERO
    for config in configurations(n, d):
        H = hurwitz_number(list(config) + [mu, nu])
        if not H:
            continue
        w = geometric_weight(G, config) if config else as_rf(1)
        total = total + w * (H * ordering_factor(config))
    return total


# ---------------------------------------------------------------------------
# central pipeline


def weighted_hurwitz_central(G: WeightGenerator, d: int, mu, nu) -> RationalFunction:
    mu, nu = partition(mu), partition(nu)
    n = _check_weights(mu, nu)
    return _central_row(G, n, d, mu).get(nu, ZERO)


@cache
def _central_row(G: WeightGenerator, n: int, d: int, mu: Partition) -> dict[Partition, RationalFunction]:
    element = class_product(central_weight_element(G, n, d)[d], class_sum(mu))
    return {nu: c / z_mu(nu) for nu, c in element.coeffs.items()}


# ---------------------------------------------------------------------------
# brute-force pipeline


def monotone_path_counts(n: int, d: int, nu) -> dict[tuple[Partition, Partition], int]:
    """counts[(mu, sig)] = number of weakly monotone d-step paths from any element of
    cyc(nu) to an element of cyc(mu) with signature sig.

    Paths are sequences of transpositions (a b), a < b, with nondecreasing b, applied
    by left multiplication.  Every path is enumerated; states sharing the same current
    permutation and signature-so-far are merged with multiplicity.
    """
    _limits.check("brute", n)
    return _monotone_path_counts(n, d, partition(nu))


@cache
def _monotone_path_counts(n: int, d: int, nu: Partition) -> dict[tuple[Partition, Partition], int]:
    states: dict[tuple, int] = {(h, ()): 1 for h in perms_by_type(n)[nu]}
    for b in range(1, n):
        new_states = dict(states)
        frontier = states
        for run in range(1, d + 1):
            step: dict[tuple, int] = {}
            for (h, sig), count in frontier.items():
                if sum(sig) + run > d:
                    continue
                for a in range(b):
                    key = (left_transpose(h, a, b), sig)
                    step[key] = step.get(key, 0) + count
            if not step:
                break
            for (h, sig), count in step.items():
                key = (h, partition(sig + (run,)))
                new_states[key] = new_states.get(key, 0) + count
            frontier = step
        states = new_states
    out: dict = {}
    for (h, sig), count in states.items():
        if sum(sig) == d:
            key = (cycle_type(h), sig)
            out[key] = out.get(key, 0) + count
    return out


def weighted_hurwitz_brute(G: WeightGenerator, d: int, mu, nu) -> RationalFunction:
    mu, nu = partition(mu), partition(nu)
    n = _check_weights(mu, nu)
    total = ZERO
    for (end, sig), count in monotone_path_counts(n, d, nu).items():
        if end == mu:
            w = path_weight(G, sig)
            if not w.is_zero():
                total = total + w * count
    return total / math.factorial(n)


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HurwitzResult:
    value: RationalFunction
    pipeline: str
    metadata: dict = field(default_factory=dict, compare=False, hash=False)


_DISPATCH = {
    "geometric": weighted_hurwitz_geometric,
    "central": weighted_hurwitz_central,
    "brute": weighted_hurwitz_brute,
}


def weighted_hurwitz(G: WeightGenerator, d: int, mu, nu, pipeline: str = "geometric") -> HurwitzResult:
    if pipeline not in _DISPATCH:
        raise ValueError(f"unknown pipeline {pipeline!r}")
    mu, nu = partition(mu), partition(nu)
    value = _DISPATCH[pipeline](G, d, mu, nu)
    meta = {"n": sum(mu), "d": d, "G": format_generator(G), "mu": mu, "nu": nu}
    return HurwitzResult(value, pipeline, meta)


def simple_profile(n: int) -> Partition:
    return partition([2] + [1] * (n - 2))


def exp_hurwitz(d: int, mu, nu) -> Fraction:
    """H^d_exp(mu, nu) = H((2,1^(n-2)) repeated d times, mu, nu) / d!."""
    if d >= 1 and sum(partition(mu)) < 2:
        return Fraction(0)
    return okounkov_cov(d, mu, nu) / math.factorial(d)


def okounkov_cov(d: int, mu, nu) -> Fraction:
    """Cov_d(mu, nu): d simple branch points plus profiles mu and nu."""
    mu, nu = partition(mu), partition(nu)
    n = _check_weights(mu, nu)
    if d >= 1 and n < 2:
        raise ValueError("simple branch points need n >= 2")
    return hurwitz_number([simple_profile(n)] * d + [mu, nu])


def bose_partition_function(n: int, d: int, G: WeightGenerator | None = None) -> RationalFunction:
    """Sum over ordered configurations of colength d of W_G (default G = E'(q))."""
    if G is None:
        G = WeightGenerator("EqPrime")
    if d < 1:
        raise ValueError("the normalization needs d >= 1")
    configs = configurations(n, d)
    if not configs:
        raise ValueError(f"no admissible configurations for n={n}, d={d}")
    total = ZERO
    for config in configs:
        total = total + geometric_weight(G, config) * ordering_factor(config)
    return total


def bose_expectation(d: int, mu, nu, G: WeightGenerator | None = None) -> RationalFunction:
    mu, nu = partition(mu), partition(nu)
    n = _check_weights(mu, nu)
    if G is None:
        G = WeightGenerator("EqPrime")
    return weighted_hurwitz_geometric(G, d, mu, nu) / bose_partition_function(n, d, G)


# ---------------------------------------------------------------------------
# classical limit q = exp(-eps)

# With z = eps*w and q = exp(-eps) (and p = q^t for Q(q,p)):
#   log G = a*w + eps*(b1*w + b2*w^2) + O(eps^2)
# from 1/(1 - exp(-k eps)) = 1/(k eps) + 1/2 + O(eps).
def _limit_coefficients(kind: str, t: int | None) -> tuple[Fraction, Fraction, Fraction]:
    if kind == "Eq":
        return Fraction(1), Fraction(1, 2), Fraction(-1, 4)
    if kind == "Hq":
        return Fraction(1), Fraction(1, 2), Fraction(1, 4)
    if kind == "Qqp":
        if not t or t < 1:
            raise ValueError("Q(q,p) needs p = q^t with a positive integer t")
        return Fraction(1 + t, t), Fraction(1), Fraction(1, 4 * t) - Fraction(1, 4)
    raise ValueError(f"no classical limit rule for {kind}")


def classical_limit_prediction(kind: str, d: int, mu, nu, t: int | None = None) -> tuple[Fraction, Fraction]:
    """Predicted eps^0 and eps^1 coefficients of scale * eps^d * H^d_G(mu, nu).

    Computed in the class algebra from exp(a w p_1(J)) (1 + eps (b1 w p_1(J) + b2 w^2 p_2(J))),
    where scale = a^-d.
    """
    from .classalg import CentralElement, identity_element, jm_monomial

    mu, nu = partition(mu), partition(nu)
    n = _check_weights(mu, nu)
    a, b1, b2 = _limit_coefficients(kind, t)
    P1 = jm_monomial(n, (1,)) if n > 1 else CentralElement(n)
    P2 = jm_monomial(n, (2,)) if n > 1 else CentralElement(n)
    Cmu = class_sum(mu)
    # powers[k] = P1^k C_mu / k!
    powers = [Cmu]
    for k in range(1, d + 1):
        powers.append(class_product(P1, powers[-1]).scale(Fraction(1, k)))
    lead = powers[d].scale(a ** d)
    first = CentralElement(n)
    if d >= 1:
        first = first + class_product(P1, powers[d - 1]).scale(b1 * a ** (d - 1))
    if d >= 2:
        first = first + class_product(P2, powers[d - 2]).scale(b2 * a ** (d - 2))
    scale = a ** -d
    zeta = z_mu(nu)
    return (lead[nu].constant_value() * scale / zeta, first[nu].constant_value() * scale / zeta)


def classical_limit_expansion(G: WeightGenerator, d: int, mu, nu, t: int | None = None):
    """eps^0 and eps^1 coefficients of scale * eps^d * H^d_G with q = exp(-eps).

    Returns None when the expansion has a pole below eps^-d.
    """
    from .exact import exp_laurent, var

    value = weighted_hurwitz_geometric(G, d, mu, nu)
    scale = Fraction(1)
    if G.kind == "Qqp":
        a, _, _ = _limit_coefficients("Qqp", t)
        value = value.subs("p", var("q") ** t)
        scale = a ** -d
    series = exp_laurent(value, "q", terms=2)
    if series.order < -d:
        return None
    c0 = series.coefficient(-d)
    c1 = series.coefficient(-d + 1)
    return (c0.constant_value() * scale, c1.constant_value() * scale)


def classical_limit_check(G: WeightGenerator, d: int, mu, nu, t: int | None = None) -> bool:
    """Leading coefficient equals H^d_exp and the first-order coefficient matches prediction."""
    got = classical_limit_expansion(G, d, mu, nu, t)
    if got is None:
        return False
    lead, first = classical_limit_prediction(G.kind, d, mu, nu, t)
    return got[0] == exp_hurwitz(d, mu, nu) == lead and got[1] == first
