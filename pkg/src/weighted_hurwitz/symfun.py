"""Symmetric functions in six bases (p, s, m, e, h, f) at bounded degree.

Everything is routed through the power-sum basis: each basis has an exact
transition matrix to ``p`` per degree, and conversions go basis -> p -> basis.
Evaluation at a parameter list substitutes the power sums of the list, except
for the geometric lists ``c_i = q^(i-1+offset)`` where closed forms are used.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache
from typing import Mapping, Sequence

import flint
from sympy.utilities.iterables import multiset_permutations

from . import _limits
from .characters import schur_in_powersums
from .exact import ONE, ZERO, MultiPoly, RationalFunction, as_rf, var
from .partitions import (
    Partition,
    colength,
    conjugate,
    enumerate_partitions,
    partition,
    z_mu,
)

BASES = ("p", "s", "m", "e", "h", "f")


# ---------------------------------------------------------------------------
# parameter lists


@dataclass(frozen=True)
class ParameterList:
    """Either a finite list of values or the geometric list q^offset, q^(offset+1), ..."""

    kind: str
    values: tuple[RationalFunction, ...] = ()
    offset: int = 0
    variable: str = "q"

    @staticmethod
    def finite(values: Sequence) -> ParameterList:
        vals = [as_rf(v) for v in values]
        while vals and vals[-1].is_zero():
            vals.pop()
        return ParameterList("finite", tuple(vals))

    @staticmethod
    def geometric(offset: int = 0, variable: str = "q") -> ParameterList:
        if offset not in (0, 1):
            raise ValueError("geometric offset must be 0 or 1")
        return ParameterList("geometric", (), offset, variable)

    def power_sum(self, k: int) -> RationalFunction:
        if self.kind == "finite":
            total = ZERO
            for c in self.values:
                total = total + c ** k
            return total
        q = var(self.variable)
        return q ** (k * self.offset) / (1 - q ** k)


# ---------------------------------------------------------------------------
# transition matrices to the power-sum basis


def _sign(rho: Partition) -> int:
    return -1 if colength(rho) % 2 else 1


def _p_product(expansions: Sequence[Mapping[Partition, Fraction]]) -> dict[Partition, Fraction]:
    out: dict[Partition, Fraction] = {(): Fraction(1)}
    for exp in expansions:
        nxt: dict[Partition, Fraction] = {}
        for a, ca in out.items():
            for b, cb in exp.items():
                key = partition(a + b)
                nxt[key] = nxt.get(key, 0) + ca * cb
        out = {k: v for k, v in nxt.items() if v}
    return out


@cache
def _e_single(k: int) -> dict[Partition, Fraction]:
    return {mu: Fraction(_sign(mu), z_mu(mu)) for mu in enumerate_partitions(k)}


@cache
def _h_single(k: int) -> dict[Partition, Fraction]:
    return {mu: Fraction(1, z_mu(mu)) for mu in enumerate_partitions(k)}


def to_p_matrix(basis: str, d: int) -> tuple[tuple[Fraction, ...], ...]:
    """Row lam holds the p-coefficients of basis_lam, rows/columns in enumerate_partitions(d) order."""
    _limits.check("symfun_degree", d, "degree")
    return _to_p_matrix(basis, d)


@cache
def _to_p_matrix(basis: str, d: int) -> tuple[tuple[Fraction, ...], ...]:
    order = enumerate_partitions(d)
    if basis == "p":
        return tuple(tuple(Fraction(int(a == b)) for b in order) for a in order)
    if basis == "s":
        rows = [schur_in_powersums(lam) for lam in order]
    elif basis == "e":
        rows = [_p_product([_e_single(k) for k in lam]) for lam in order]
    elif basis == "h":
        rows = [_p_product([_h_single(k) for k in lam]) for lam in order]
    elif basis == "m":
        return _hall_dual(to_p_matrix("h", d), order)
    elif basis == "f":
        m = to_p_matrix("m", d)
        return tuple(tuple(c * _sign(rho) for c, rho in zip(row, order)) for row in m)
    else:
        raise ValueError(f"unknown basis {basis!r}")
    return tuple(tuple(row.get(rho, Fraction(0)) for rho in order) for row in rows)


def _hall_dual(A, order) -> tuple[tuple[Fraction, ...], ...]:
    # <u_lam, v_mu> = sum_rho A[lam,rho] B[mu,rho] z_rho = delta, so B = ((A Z)^-1)^T
    AZ = flint.fmpq_mat([[flint.fmpq(c.numerator, c.denominator) * z_mu(rho)
                          for c, rho in zip(row, order)] for row in A])
    inv = AZ.inv()
    size = len(order)
    return tuple(
        tuple(Fraction(int(inv[j, i].p), int(inv[j, i].q)) for j in range(size))
        for i in range(size)
    )


@cache
def from_p_matrix(basis: str, d: int) -> tuple[tuple[Fraction, ...], ...]:
    """Inverse of :func:`to_p_matrix`: row rho holds the basis-coefficients of p_rho."""
    M = to_p_matrix(basis, d)
    inv = flint.fmpq_mat([[flint.fmpq(c.numerator, c.denominator) for c in row] for row in M]).inv()
    size = len(M)
    return tuple(
        tuple(Fraction(int(inv[i, j].p), int(inv[i, j].q)) for j in range(size))
        for i in range(size)
    )


def transition(source: str, target: str, d: int) -> dict[Partition, dict[Partition, Fraction]]:
    """source_lam = sum_mu T[lam][mu] target_mu at degree d."""
    order = enumerate_partitions(d)
    A, B = to_p_matrix(source, d), from_p_matrix(target, d)
    out = {}
    for i, lam in enumerate(order):
        row = {}
        for j, mu in enumerate(order):
            c = sum((A[i][k] * B[k][j] for k in range(len(order)) if A[i][k]), Fraction(0))
            if c:
                row[mu] = c
        out[lam] = row
    return out


# ---------------------------------------------------------------------------
# expansions


@dataclass(frozen=True)
class SymFunExpansion:
    basis: str
    coefficients: Mapping[Partition, RationalFunction] = field(default_factory=dict)
    degree_bound: int = 0

    def __post_init__(self):
        if self.basis not in BASES:
            raise ValueError(f"unknown basis {self.basis!r}")
        for lam in self.coefficients:
            if sum(lam) > self.degree_bound:
                raise ValueError(f"{lam} exceeds degree bound {self.degree_bound}")

    @staticmethod
    def single(basis: str, lam) -> SymFunExpansion:
        lam = partition(lam)
        return SymFunExpansion(basis, {lam: ONE}, sum(lam))

    def nonzero(self) -> dict[Partition, RationalFunction]:
        return {k: v for k, v in self.coefficients.items() if not as_rf(v).is_zero()}

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymFunExpansion):
            return NotImplemented
        return self.basis == other.basis and self.nonzero() == other.nonzero()


def convert(x: SymFunExpansion, target: str) -> SymFunExpansion:
    """Re-express x in the target basis."""
    if target not in BASES:
        raise ValueError(f"unsupported conversion {x.basis!r} -> {target!r}")
    _limits.check("symfun_degree", x.degree_bound, "degree")
    out: dict[Partition, RationalFunction] = {}
    for lam, coeff in x.nonzero().items():
        coeff = as_rf(coeff)
        for mu, t in transition(x.basis, target, sum(lam)).get(lam, {}).items():
            out[mu] = out.get(mu, ZERO) + coeff * t
    return SymFunExpansion(target, {k: v for k, v in out.items() if not v.is_zero()}, x.degree_bound)


def evaluate_p_expansion(expansion: Mapping[Partition, Fraction], c: ParameterList) -> RationalFunction:
    cache_p: dict[int, RationalFunction] = {}
    total = ZERO
    for rho, coeff in expansion.items():
        if not coeff:
            continue
        term = as_rf(coeff)
        for k in rho:
            if k not in cache_p:
                cache_p[k] = c.power_sum(k)
            term = term * cache_p[k]
        total = total + term
    return total


def evaluate(basis: str, lam, c: ParameterList) -> RationalFunction:
    """basis_lam(c) through the power-sum route."""
    lam = partition(lam)
    order = enumerate_partitions(sum(lam))
    row = to_p_matrix(basis, sum(lam))[order.index(lam)]
    return evaluate_p_expansion(dict(zip(order, row)), c)


# ---------------------------------------------------------------------------
# direct evaluations


def _finite_elementary(values: Sequence[RationalFunction], kmax: int) -> list[RationalFunction]:
    e = [ONE] + [ZERO] * kmax
    for c in values:
        for k in range(kmax, 0, -1):
            e[k] = e[k] + c * e[k - 1]
    return e


def _finite_complete(values: Sequence[RationalFunction], kmax: int) -> list[RationalFunction]:
    h = [ONE] + [ZERO] * kmax
    for c in values:
        for k in range(1, kmax + 1):
            h[k] = h[k] + c * h[k - 1]
    return h


def _q_factorial_den(j: int, q: RationalFunction) -> RationalFunction:
    out = ONE
    for i in range(1, j + 1):
        out = out * (1 - q ** i)
    return out


def elementary(k: int, c: ParameterList) -> RationalFunction:
    if k < 0:
        return ZERO
    if c.kind == "finite":
        return _finite_elementary(c.values, k)[k]
    q = var(c.variable)
    return q ** (k * (k - 1) // 2 + k * c.offset) / _q_factorial_den(k, q)


def complete(k: int, c: ParameterList) -> RationalFunction:
    if k < 0:
        return ZERO
    if c.kind == "finite":
        return _finite_complete(c.values, k)[k]
    q = var(c.variable)
    return q ** (k * c.offset) / _q_factorial_den(k, q)


def eval_e(lam, c: ParameterList) -> RationalFunction:
    result = ONE
    for k in partition(lam):
        result = result * elementary(k, c)
    return result


def eval_h(lam, c: ParameterList) -> RationalFunction:
    result = ONE
    for k in partition(lam):
        result = result * complete(k, c)
    return result


def _geometric_chain_sum(lam: Partition, q: RationalFunction, strict: bool) -> RationalFunction:
    # sum over index chains i_1 < ... < i_k (or <=) of q^(sum a_j i_j),
    # summed over distinct orderings a of the parts of lam
    k = len(lam)
    total = ZERO
    for a in multiset_permutations(list(lam)):
        term = ONE
        prefix = 0
        for j, part in enumerate(a):
            prefix += part
            term = term * (1 - q ** prefix)
        shift = sum((k - 1 - j) * part for j, part in enumerate(a)) if strict else 0
        total = total + q ** shift / term
    return total


def eval_m(lam, c: ParameterList) -> RationalFunction:
    """Monomial symmetric function m_lam(c)."""
    lam = partition(lam)
    if c.kind == "finite":
        n = len(c.values)
        if len(lam) > n:
            return ZERO
        total = ZERO
        for a in multiset_permutations(list(lam) + [0] * (n - len(lam))):
            term = ONE
            for ci, ai in zip(c.values, a):
                if ai:
                    term = term * ci ** ai
            total = total + term
        return total
    q = var(c.variable)
    return q ** (c.offset * sum(lam)) * _geometric_chain_sum(lam, q, strict=True)


def eval_f(lam, c: ParameterList) -> RationalFunction:
    """Forgotten symmetric function f_lam(c) = omega(m_lam)(c)."""
    lam = partition(lam)
    if c.kind == "finite":
        return evaluate("f", lam, c)
    q = var(c.variable)
    sign = -1 if colength(lam) % 2 else 1
    return sign * q ** (c.offset * sum(lam)) * _geometric_chain_sum(lam, q, strict=False)


def eval_s(lam, c: ParameterList) -> RationalFunction:
    return evaluate("s", lam, c)


def eval_basis(basis: str, lam, c: ParameterList) -> RationalFunction:
    return {"e": eval_e, "h": eval_h, "m": eval_m, "f": eval_f, "s": eval_s}[basis](lam, c) if basis != "p" \
        else _eval_p(lam, c)


def _eval_p(lam, c: ParameterList) -> RationalFunction:
    result = ONE
    for k in partition(lam):
        result = result * c.power_sum(k)
    return result


# ---------------------------------------------------------------------------
# Cauchy-Littlewood kernels

CL_VARIANTS = {
    # name: (kernel sign, x-basis, y-basis, conjugate y index)
    "ss": (-1, "s", "s", False),
    "s-dual": (1, "s", "s", True),
    "hm": (-1, "h", "m", False),
    "fe": (-1, "f", "e", False),
    "em": (1, "e", "m", False),
    "me": (1, "m", "e", False),
}


def _poly_basis(basis: str, lam: Partition, gens: tuple[str, ...]) -> MultiPoly:
    """basis_lam as a polynomial in the given variables via power sums."""
    d = sum(lam)
    order = enumerate_partitions(d)
    row = to_p_matrix(basis, d)[order.index(lam)]
    xs = [MultiPoly.gen(g, gens) for g in gens]
    psum = {}
    total = MultiPoly(0, gens)
    for rho, coeff in zip(order, row):
        if not coeff:
            continue
        term = MultiPoly(coeff, gens)
        for k in rho:
            if k not in psum:
                psum[k] = sum((x ** k for x in xs), MultiPoly(0, gens))
            term = term * psum[k]
        total = total + term
    return total


def cauchy_littlewood_check(variant: str, nx: int, ny: int, deg: int) -> bool:
    """Compare the Cauchy kernel with sum_lam u_lam(x) v_lam(y) through total degree 2*deg.

    Terms are graded by degree in x (equal to the degree in y), so the check covers
    all partitions of weight at most ``deg``.
    """
    if variant not in CL_VARIANTS:
        raise ValueError(f"unknown Cauchy-Littlewood variant {variant!r}")
    if nx > 4 or ny > 4 or deg > 6:
        raise ValueError("nx, ny <= 4 and deg <= 6 required")
    sign, ubasis, vbasis, conj = CL_VARIANTS[variant]
    xg = tuple(f"x{a}" for a in range(1, nx + 1))
    yg = tuple(f"y{b}" for b in range(1, ny + 1))
    gens = xg + yg
    xvars = list(range(nx))

    def trunc(poly: MultiPoly) -> MultiPoly:
        return poly.truncate(deg, [gens[i] for i in xvars])

    lhs = MultiPoly(1, gens)
    for a in xg:
        for b in yg:
            t = MultiPoly.gen(a, gens) * MultiPoly.gen(b, gens)
            if sign > 0:
                factor = 1 + t
            else:
                factor = MultiPoly(1, gens)
                power = MultiPoly(1, gens)
                for _ in range(deg):
                    power = power * t
                    factor = factor + power
            lhs = trunc(lhs * factor)

    rhs = MultiPoly(0, gens)
    for d in range(deg + 1):
        for lam in enumerate_partitions(d):
            u = _poly_basis(ubasis, lam, gens[:nx]) if nx else MultiPoly(int(d == 0), gens)
            v = _poly_basis(vbasis, conjugate(lam) if conj else lam, gens[nx:])
            rhs = rhs + _embed(u, gens) * _embed(v, gens)
    return lhs == rhs


def _embed(poly: MultiPoly, gens: tuple[str, ...]) -> MultiPoly:
    src = poly.gens
    if src == gens:
        return poly
    idx = [gens.index(g) for g in src]
    terms = {}
    for exp, c in poly.terms.items():
        full = [0] * len(gens)
        for i, e in zip(idx, exp):
            full[i] = e
        terms[tuple(full)] = c
    return MultiPoly(terms, gens)
