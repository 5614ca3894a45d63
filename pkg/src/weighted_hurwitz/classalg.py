"""The center of the symmetric group algebra in the class-sum basis C_mu."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache
from typing import Mapping

from . import _limits
from .characters import character_table
from .exact import ONE, ZERO, RationalFunction, as_rf
from .partitions import Partition, class_size, colength, enumerate_partitions, hook_product, partition
from .perms import direct_structure_constants
from .symfun import transition


@dataclass(frozen=True)
class CentralElement:
    """sum_mu coeffs[mu] * C_mu in Z(C[S_n])."""

    n: int
    coeffs: Mapping[Partition, RationalFunction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for mu, c in self.coeffs.items():
            mu = partition(mu)
            if sum(mu) != self.n:
                raise ValueError(f"class {mu} is not a partition of {self.n}")
            c = as_rf(c)
            if not c.is_zero():
                clean[mu] = c
        object.__setattr__(self, "coeffs", clean)

    def __getitem__(self, mu) -> RationalFunction:
        return self.coeffs.get(partition(mu), ZERO)

    def _check(self, other: CentralElement):
        if other.n != self.n:
            raise ValueError(f"size mismatch: {self.n} vs {other.n}")

    def __add__(self, other: CentralElement) -> CentralElement:
        self._check(other)
        out = dict(self.coeffs)
        for mu, c in other.coeffs.items():
            out[mu] = out.get(mu, ZERO) + c
        return CentralElement(self.n, out)

    def __sub__(self, other: CentralElement) -> CentralElement:
        return self + other.scale(-1)

    def scale(self, c) -> CentralElement:
        c = as_rf(c)
        return CentralElement(self.n, {mu: v * c for mu, v in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, CentralElement):
            return class_product(self, other)
        return self.scale(other)

    __rmul__ = scale

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        if not isinstance(other, CentralElement):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.n, tuple(sorted(self.coeffs.items()))))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(f"({c})*C[{','.join(map(str, mu))}]" for mu, c in sorted(self.coeffs.items(), reverse=True))


def class_sum(mu) -> CentralElement:
    mu = partition(mu)
    return CentralElement(sum(mu), {mu: ONE})


def identity_element(n: int) -> CentralElement:
    return class_sum((1,) * n)


@cache
def character_structure_constants(n: int) -> dict[tuple[Partition, Partition], dict[Partition, Fraction]]:
    """c[mu, nu][rho] = |C_mu||C_nu|/n! * sum_lam chi(mu) chi(nu) chi(rho) / dim(lam)."""
    table = character_table(n)
    order = table.order
    idx = {mu: i for i, mu in enumerate(order)}
    dims = [row[-1] for row in table.values]
    out = {}
    for mu in order:
        for nu in order:
            row = {}
            for rho in order:
                s = sum(
                    Fraction(table.values[l][idx[mu]] * table.values[l][idx[nu]] * table.values[l][idx[rho]], dims[l])
                    for l in range(len(order))
                )
                c = s * class_size(mu) * class_size(nu) / math.factorial(n)
                if c:
                    row[rho] = c
            out[(mu, nu)] = row
    return out


def structure_constants(n: int, method: str = "auto") -> dict[tuple[Partition, Partition], dict[Partition, Fraction]]:
    """C_mu C_nu = sum_rho c[mu, nu][rho] C_rho.

    ``method`` is ``direct`` (group convolution), ``character`` or ``auto``
    (direct when n is small enough, else characters).
    """
    _limits.check("classalg", n)
    if method == "auto":
        method = "direct" if n <= _limits.limit("direct") else "character"
    if method == "direct":
        _limits.check("direct", n)
        raw = direct_structure_constants(n)
        return {k: {rho: Fraction(c) for rho, c in v.items()} for k, v in raw.items()}
    if method == "character":
        return character_structure_constants(n)
    raise ValueError(f"unknown method {method!r}")


@cache
def _table(n: int):
    return structure_constants(n)


def class_product(a: CentralElement, b: CentralElement) -> CentralElement:
    if a.n != b.n:
        raise ValueError(f"size mismatch: {a.n} vs {b.n}")
    table = _table(a.n)
    out: dict[Partition, RationalFunction] = {}
    for mu, ca in a.coeffs.items():
        for nu, cb in b.coeffs.items():
            coeff = ca * cb
            for rho, c in table.get((mu, nu), {}).items():
                out[rho] = out.get(rho, ZERO) + coeff * c
    return CentralElement(a.n, out)


@cache
def jucys_elementary(n: int, k: int) -> CentralElement:
    """e_k(J_1, ..., J_n) = sum of C_mu over classes of colength k."""
    if not 0 <= k <= n - 1 and not (n == 0 and k == 0):
        raise ValueError(f"k={k} out of range 0..{n - 1}")
    return CentralElement(n, {mu: ONE for mu in enumerate_partitions(n) if colength(mu) == k})


def _elementary_or_zero(n: int, k: int) -> CentralElement:
    return jucys_elementary(n, k) if k <= n - 1 else CentralElement(n)


@cache
def jucys_elementary_product(n: int, mu: Partition) -> CentralElement:
    result = identity_element(n)
    for k in mu:
        result = class_product(result, _elementary_or_zero(n, k))
        if result.is_zero():
            break
    return result


def jm_monomial(n: int, lam) -> CentralElement:
    """m_lam(J), via the e-basis expansion of m_lam."""
    lam = partition(lam)
    _limits.check("symfun_degree", sum(lam), "degree")
    return _jm_monomial(n, lam)


@cache
def _jm_monomial(n: int, lam: Partition) -> CentralElement:
    total = CentralElement(n)
    if len(lam) > n - 1:
        return total
    for mu, c in transition("m", "e", sum(lam))[lam].items():
        if mu[0] > n - 1:
            continue
        total = total + jucys_elementary_product(n, mu).scale(c)
    return total


@dataclass(frozen=True)
class ZSeriesCentral:
    n: int
    z_cutoff: int
    terms: tuple[CentralElement, ...]

    def __getitem__(self, d: int) -> CentralElement:
        return self.terms[d] if 0 <= d <= self.z_cutoff else CentralElement(self.n)

    def __mul__(self, other):
        D = min(self.z_cutoff, other.z_cutoff) if isinstance(other, ZSeriesCentral) else self.z_cutoff
        if isinstance(other, CentralElement):
            return ZSeriesCentral(self.n, D, tuple(class_product(t, other) for t in self.terms))
        out = []
        for d in range(D + 1):
            acc = CentralElement(self.n)
            for i in range(d + 1):
                acc = acc + class_product(self[i], other[d - i])
            out.append(acc)
        return ZSeriesCentral(self.n, D, tuple(out))


def central_weight_element(G, n: int, D: int) -> ZSeriesCentral:
    """G(z, J) = sum_lam G_lam m_lam(J) z^|lam| through z^D."""
    _limits.check("classalg", n)
    return _central_weight_element(G, n, D)


@cache
def _central_weight_element(G, n: int, D: int) -> ZSeriesCentral:
    from .weights import path_weight

    terms = []
    for d in range(D + 1):
        acc = CentralElement(n)
        for lam in enumerate_partitions(d):
            if len(lam) > n - 1 and d > 0:
                continue
            w = path_weight(G, lam)
            if not w.is_zero():
                acc = acc + (jm_monomial(n, lam) if d else identity_element(n)).scale(w)
        terms.append(acc)
    return ZSeriesCentral(n, D, tuple(terms))


def idempotent(lam) -> CentralElement:
    """F_lam = h(lam)^-1 sum_mu chi_lam(mu) C_mu."""
    lam = partition(lam)
    n = sum(lam)
    table = character_table(n)
    row = table.values[table.order.index(lam)]
    h = hook_product(lam)
    return CentralElement(n, {mu: Fraction(chi, h) for mu, chi in zip(table.order, row)})


def idempotent_eigenvalue_check(G, n: int, lam, D: int) -> bool:
    """Check G(z,J) F_lam = r_lam(z) F_lam through z^D."""
    from .tauseries import content_product_series

    lam = partition(lam)
    if sum(lam) != n:
        raise ValueError("lam must be a partition of n")
    F = idempotent(lam)
    series = central_weight_element(G, n, D)
    r = content_product_series(G, lam, D)
    return all(class_product(series[d], F) == F.scale(r[d]) for d in range(D + 1))
