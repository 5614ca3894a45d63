"""Weight generating functions G(z) = sum_k G_k z^k and the weights they induce."""

from __future__ import annotations

import itertools
import math
import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cache

from .exact import ONE, ZERO, RationalFunction, as_rf
from .partitions import Partition, colength, enumerate_partitions, partition
from .symfun import (
    ParameterList,
    complete,
    elementary,
    eval_f,
    eval_m,
    to_p_matrix,
    transition,
)

KINDS = ("Exp", "E", "Ek", "H", "Eq", "EqPrime", "Hq", "HqPrime", "Qqp", "ExplicitCoeffs", "FiniteC")

_GEOMETRIC = {
    # kind: (offset, dual type)
    "Eq": (0, False),
    "EqPrime": (1, False),
    "Hq": (0, True),
    "HqPrime": (1, True),
}


@dataclass(frozen=True)
class WeightGenerator:
    kind: str
    k: int = 0
    values: tuple[RationalFunction, ...] = ()

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if self.kind == "ExplicitCoeffs" and (not self.values or self.values[0] != ONE):
            raise ValueError("explicit coefficient lists must start with G_0 = 1")

    @property
    def params(self) -> ParameterList:
        return ParameterList.finite(self.values)

    def __str__(self) -> str:
        return format_generator(self)


def explicit(coeffs) -> WeightGenerator:
    return WeightGenerator("ExplicitCoeffs", values=tuple(as_rf(c) for c in coeffs))


def finite_c(params) -> WeightGenerator:
    return WeightGenerator("FiniteC", values=ParameterList.finite(params).values)


_SIMPLE = {
    "exp": "Exp", "E": "E", "H": "H", "E(q)": "Eq", "E'(q)": "EqPrime",
    "H(q)": "Hq", "H'(q)": "HqPrime", "Q(q,p)": "Qqp",
}


def parse_generator(text: str) -> WeightGenerator:
    """Parse ``exp``, ``E``, ``E^3``, ``H``, ``E(q)``, ``E'(q)``, ``H(q)``, ``H'(q)``,
    ``Q(q,p)``, ``c:[1,2,q]`` or ``coeffs:[1,1/2,1/6]``."""
    s = text.replace(" ", "")
    if s in _SIMPLE:
        return WeightGenerator(_SIMPLE[s])
    m = re.fullmatch(r"E\^(\d+)", s)
    if m:
        return WeightGenerator("Ek", k=int(m.group(1)))
    m = re.fullmatch(r"(c|coeffs):\[(.*)\]", s)
    if m:
        items = [as_rf(x) for x in m.group(2).split(",") if x]
        return finite_c(items) if m.group(1) == "c" else explicit(items)
    raise ValueError(f"unknown generator spec {text!r}")


def format_generator(G: WeightGenerator) -> str:
    inverse = {v: k for k, v in _SIMPLE.items()}
    if G.kind in inverse:
        return inverse[G.kind]
    if G.kind == "Ek":
        return f"E^{G.k}"
    prefix = "c" if G.kind == "FiniteC" else "coeffs"
    return f"{prefix}:[{','.join(str(v) for v in G.values)}]"


def _geometric_list(G: WeightGenerator) -> ParameterList:
    return ParameterList.geometric(_GEOMETRIC[G.kind][0])


@cache
def coefficient(G: WeightGenerator, k: int) -> RationalFunction:
    """G_k, the coefficient of z^k in G(z)."""
    if k < 0:
        return ZERO
    kind = G.kind
    if kind == "Exp":
        return as_rf(Fraction(1, math.factorial(k)))
    if kind == "E":
        return ONE if k <= 1 else ZERO
    if kind == "Ek":
        return as_rf(math.comb(G.k, k))
    if kind == "H":
        return ONE
    if kind in ("Eq", "EqPrime"):
        return elementary(k, _geometric_list(G))
    if kind in ("Hq", "HqPrime"):
        return complete(k, _geometric_list(G))
    if kind == "Qqp":
        q_list = ParameterList.geometric(0, "q")
        p_list = ParameterList.geometric(0, "p")
        total = ZERO
        for m in range(k + 1):
            total = total + elementary(m, q_list) * complete(k - m, p_list)
        return total
    if kind == "ExplicitCoeffs":
        return G.values[k] if k < len(G.values) else ZERO
    return elementary(k, G.params)


def coefficients(G: WeightGenerator, kmax: int) -> list[RationalFunction]:
    return [coefficient(G, k) for k in range(kmax + 1)]


def path_weight(G: WeightGenerator, lam, tilde: bool = False) -> RationalFunction:
    """G_lam = prod_i G_{lam_i}; with ``tilde`` the factor prod_i lam_i! is included."""
    lam = partition(lam)
    result = ONE
    for part in lam:
        result = result * coefficient(G, part)
        if result.is_zero():
            return ZERO
    if tilde:
        result = result * math.prod(math.factorial(p) for p in lam)
    return result


_DUALS = {"E": "H", "H": "E", "Eq": "Hq", "Hq": "Eq", "EqPrime": "HqPrime",
          "HqPrime": "EqPrime", "Exp": "Exp"}


def dual(G: WeightGenerator) -> WeightGenerator:
    """The generator 1/G(-z), for the families closed under this operation."""
    if G.kind not in _DUALS:
        raise ValueError(f"dual of {format_generator(G)} is not a supported generator")
    return WeightGenerator(_DUALS[G.kind])


def is_dual_type(G: WeightGenerator) -> bool:
    return G.kind in ("H", "Hq", "HqPrime")


# ---------------------------------------------------------------------------
# configuration weights W_G


@cache
def _universal_weight(G: WeightGenerator, lam: Partition) -> RationalFunction:
    # m_lam expanded in the e basis, then e_k -> G_k
    total = ZERO
    for mu, c in transition("m", "e", sum(lam))[lam].items():
        w = path_weight(G, mu)
        if not w.is_zero():
            total = total + w * c
    return total


def _split_weight(lam: Partition) -> RationalFunction:
    # Q(q,p) = E(q) H(p): m over a union of alphabets splits over sub-multisets
    q_list = ParameterList.geometric(0, "q")
    p_list = ParameterList.geometric(0, "p")
    counts = sorted(Counter(lam).items())
    total = ZERO
    for take in itertools.product(*(range(m + 1) for _, m in counts)):
        alpha = partition(itertools.chain.from_iterable([p] * t for (p, _), t in zip(counts, take)))
        beta = partition(itertools.chain.from_iterable([p] * (m - t) for (p, m), t in zip(counts, take)))
        total = total + eval_m(alpha, q_list) * eval_f(beta, p_list)
    return total


@cache
def monomial_weight(G: WeightGenerator, lam: Partition) -> RationalFunction:
    """m_lam evaluated on the specialization e_k -> G_k (closed forms where available)."""
    lam = partition(lam)
    if G.kind in _GEOMETRIC:
        offset, dual_type = _GEOMETRIC[G.kind]
        c = ParameterList.geometric(offset)
        return eval_f(lam, c) if dual_type else eval_m(lam, c)
    if G.kind == "Qqp":
        return _split_weight(lam)
    if G.kind == "FiniteC":
        return eval_m(lam, G.params)
    return _universal_weight(G, lam)


def monomial_weight_universal(G: WeightGenerator, lam) -> RationalFunction:
    """Same quantity as :func:`monomial_weight`, always by the e-basis transition."""
    return _universal_weight(G, partition(lam))


def generator_power_sum(G: WeightGenerator, k: int) -> RationalFunction:
    """P_k defined by log G(z) = sum_k (-1)^(k-1) P_k z^k / k."""
    return _power_sums(G, k)[k]


@cache
def _power_sums(G: WeightGenerator, kmax: int) -> tuple[RationalFunction, ...]:
    # Newton: k G_k = sum_{i=1}^k (-1)^(i-1) G_{k-i} P_i
    P = [ZERO]
    for k in range(1, kmax + 1):
        acc = coefficient(G, k) * k
        for i in range(1, k):
            term = coefficient(G, k - i) * P[i]
            acc = acc - term if i % 2 else acc + term
        P.append(acc if k % 2 else -acc)
    return tuple(P)


def monomial_weight_powersums(G: WeightGenerator, lam) -> RationalFunction:
    """m_lam through its power-sum expansion with p_k -> P_k(G)."""
    lam = partition(lam)
    d = sum(lam)
    order = enumerate_partitions(d)
    P = _power_sums(G, d)
    total = ZERO
    for rho, c in zip(order, to_p_matrix("m", d)[order.index(lam)]):
        if c:
            term = as_rf(c)
            for part in rho:
                term = term * P[part]
            total = total + term
    return total


def geometric_weight(G: WeightGenerator, profiles) -> RationalFunction:
    """W_G of a branch-point configuration: m_lam at lam = sorted colengths."""
    profiles = [partition(p) for p in profiles]
    if len({sum(p) for p in profiles}) > 1:
        raise ValueError("profiles must all have the same weight")
    lengths = [colength(p) for p in profiles]
    if any(c == 0 for c in lengths):
        raise ValueError("identity profile (1^n) is not an admissible branch point")
    return monomial_weight(G, partition(lengths))
