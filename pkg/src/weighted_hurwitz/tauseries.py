"""Content products r_lam^G and the Schur-expansion coefficients of hypergeometric tau-functions."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from typing import Union

from . import _limits
from .characters import character_table, schur_in_powersums
from .exact import ONE, ZERO, RationalFunction, TruncatedSeries, as_rf, var
from .partitions import Partition, contents, enumerate_partitions, hook_product, partition, pochhammer, z_mu
from .symfun import ParameterList, complete
from .weights import WeightGenerator, coefficient

_POLY_KINDS = ("E", "Ek", "FiniteC")
_Q_KINDS = {"Eq": ("E", 0), "EqPrime": ("E", 1), "Hq": ("H", 0), "HqPrime": ("H", 1), "Qqp": ("E", 0)}


# ---------------------------------------------------------------------------
# bivariate series in (q, z)


class QZSeries:
    """Truncated series sum a[i][j] q^i z^j, i <= q_cutoff, j <= z_cutoff."""

    __slots__ = ("q_cutoff", "z_cutoff", "terms")

    def __init__(self, q_cutoff: int, z_cutoff: int, terms: dict | None = None):
        self.q_cutoff = q_cutoff
        self.z_cutoff = z_cutoff
        self.terms = {
            (i, j): as_rf(c) for (i, j), c in (terms or {}).items()
            if i <= q_cutoff and j <= z_cutoff and not as_rf(c).is_zero()
        }

    @classmethod
    def one(cls, q_cutoff: int, z_cutoff: int) -> QZSeries:
        return cls(q_cutoff, z_cutoff, {(0, 0): ONE})

    def __mul__(self, other: QZSeries) -> QZSeries:
        Dq = min(self.q_cutoff, other.q_cutoff)
        Dz = min(self.z_cutoff, other.z_cutoff)
        out: dict = {}
        for (i, j), a in self.terms.items():
            for (k, l), b in other.terms.items():
                if i + k <= Dq and j + l <= Dz:
                    key = (i + k, j + l)
                    out[key] = out.get(key, ZERO) + a * b
        return QZSeries(Dq, Dz, out)

    def inverse(self) -> QZSeries:
        if self.terms.get((0, 0)) != ONE:
            raise ValueError("only series with constant term 1 are inverted")
        x = QZSeries(self.q_cutoff, self.z_cutoff, {k: -v for k, v in self.terms.items() if k != (0, 0)})
        result = QZSeries.one(self.q_cutoff, self.z_cutoff)
        power = QZSeries.one(self.q_cutoff, self.z_cutoff)
        for _ in range(self.q_cutoff + self.z_cutoff):
            power = power * x
            if not power.terms:
                break
            result = QZSeries(self.q_cutoff, self.z_cutoff,
                              {k: result.terms.get(k, ZERO) + power.terms.get(k, ZERO)
                               for k in set(result.terms) | set(power.terms)})
        return result

    def z_coefficient(self, d: int) -> TruncatedSeries:
        """[z^d] as a series in q."""
        return TruncatedSeries("q", self.q_cutoff, [self.terms.get((i, d), ZERO) for i in range(self.q_cutoff + 1)])

    def __eq__(self, other) -> bool:
        if not isinstance(other, QZSeries):
            return NotImplemented
        Dq = min(self.q_cutoff, other.q_cutoff)
        Dz = min(self.z_cutoff, other.z_cutoff)
        keys = {k for k in set(self.terms) | set(other.terms) if k[0] <= Dq and k[1] <= Dz}
        return all(self.terms.get(k, ZERO) == other.terms.get(k, ZERO) for k in keys)


def _zseries_as_qz(series: TruncatedSeries, q_cutoff: int) -> QZSeries:
    return QZSeries(q_cutoff, series.cutoff, {(0, j): c for j, c in enumerate(series.coefficients)})


# ---------------------------------------------------------------------------
# content products


def _scaled_generator_series(G: WeightGenerator, c: int, D: int) -> TruncatedSeries:
    """G(c z) as a z-series through z^D."""
    return TruncatedSeries("z", D, [coefficient(G, k) * c ** k for k in range(D + 1)])


def _series_power(s: TruncatedSeries, e: int) -> TruncatedSeries:
    base = s if e >= 0 else s.inverse()
    result = TruncatedSeries(s.variable, s.cutoff, [ONE])
    for _ in range(abs(e)):
        result = result * base
    return result


def prefactor_factors(N: int) -> list[tuple[int, int]]:
    """r_0(N) = prod over (content, exponent) pairs of G(content * z)^exponent."""
    if N > 0:
        return [(N - j, j) for j in range(1, N)]
    if N < 0:
        M = -N
        return [(j - M, -j) for j in range(1, M + 1)]
    return []


def content_product_series(G: WeightGenerator, lam, D: int, N: int = 0,
                           include_prefactor: bool = True) -> TruncatedSeries:
    """r_lam^G(N) as a z-series through z^D, built from the coefficients G_k."""
    lam = partition(lam)
    result = TruncatedSeries("z", D, [ONE])
    for c in contents(lam):
        if N + c:
            result = result * _scaled_generator_series(G, N + c, D)
    if include_prefactor:
        for c, e in prefactor_factors(N):
            result = result * _series_power(_scaled_generator_series(G, c, D), e)
    return result


def _generator_rf(G: WeightGenerator, c: int) -> RationalFunction:
    z = var("z")
    if G.kind == "E":
        return 1 + c * z
    if G.kind == "Ek":
        return (1 + c * z) ** G.k
    if G.kind == "H":
        return 1 / (1 - c * z)
    result = ONE
    for a in G.values:
        result = result * (1 + a * c * z)
    return result


def _q_factor(G: WeightGenerator, c: int, q_cutoff: int, z_cutoff: int) -> QZSeries:
    """G(c z) for a quantum generator as a truncated (q, z) series."""
    family, offset = _Q_KINDS[G.kind]
    result = QZSeries.one(q_cutoff, z_cutoff)
    for k in range(q_cutoff + 1):
        shift = k + offset
        if shift > q_cutoff:
            break
        if family == "E":
            factor = QZSeries(q_cutoff, z_cutoff, {(0, 0): 1, (shift, 1): c})
        else:
            factor = QZSeries(q_cutoff, z_cutoff, {(shift * m, m): Fraction(c) ** m for m in range(z_cutoff + 1)})
        result = result * factor
    if G.kind == "Qqp":
        p_list = ParameterList.geometric(0, "p")
        hp = TruncatedSeries("z", z_cutoff, [complete(m, p_list) * c ** m for m in range(z_cutoff + 1)])
        result = result * _zseries_as_qz(hp, q_cutoff)
    return result


def _content_product_qz(G: WeightGenerator, lam: Partition, N: int, q_cutoff: int, z_cutoff: int,
                        include_prefactor: bool = True) -> QZSeries:
    result = QZSeries.one(q_cutoff, z_cutoff)
    for c in contents(lam):
        if N + c:
            result = result * _q_factor(G, N + c, q_cutoff, z_cutoff)
    if include_prefactor:
        for c, e in prefactor_factors(N):
            f = _q_factor(G, c, q_cutoff, z_cutoff)
            if e < 0:
                f = f.inverse()
            for _ in range(abs(e)):
                result = result * f
    return result


Value = Union[RationalFunction, TruncatedSeries, QZSeries]


@dataclass(frozen=True)
class ContentProduct:
    """r_lam^G(N) = prefactor * prod over cells of G(z (N + content))."""

    value: Value
    N: int
    prefactor: Value


def content_product(G: WeightGenerator, lam, N: int = 0, q_cutoff: int | None = None,
                    z_cutoff: int | None = None) -> ContentProduct:
    """Exact rational function for polynomial generators and H; a z-series for Exp and
    explicit coefficient lists; a (q, z)-truncated series for the quantum families."""
    lam = partition(lam)
    if G.kind in _POLY_KINDS or G.kind == "H":
        pre = ONE
        for c, e in prefactor_factors(N):
            pre = pre * _generator_rf(G, c) ** e
        value = pre
        for c in contents(lam):
            value = value * _generator_rf(G, N + c)
        return ContentProduct(value, N, pre)
    if z_cutoff is None:
        z_cutoff = sum(lam) * max(sum(lam), 1)
    if G.kind in _Q_KINDS:
        if q_cutoff is None:
            raise ValueError("quantum generators need a q cutoff")
        pre = _content_product_qz(G, (), N, q_cutoff, z_cutoff)
        return ContentProduct(_content_product_qz(G, lam, N, q_cutoff, z_cutoff), N, pre)
    pre = content_product_series(G, (), z_cutoff, N)
    return ContentProduct(content_product_series(G, lam, z_cutoff, N), N, pre)


def exp_content_exponent(lam) -> int:
    """Sum of contents, equal to sum_i lam_i (lam_i - 2i + 1) / 2 with 1-based rows."""
    lam = partition(lam)
    return sum(part * (part - 2 * i + 1) for i, part in enumerate(lam, start=1)) // 2


def hypergeometric_form_check(G: WeightGenerator, lam) -> bool:
    """prod_k (c_k z)^|lam| (1/(c_k z))_lam against the cell-by-cell content product."""
    if G.kind != "FiniteC":
        raise ValueError("the Pochhammer form needs a finite parameter list")
    if any(c.is_zero() for c in G.values):
        raise ValueError("parameters must be nonzero")
    lam = partition(lam)
    z = var("z")
    lhs = ONE
    for c in G.values:
        lhs = lhs * (c * z) ** sum(lam) * pochhammer(1 / (c * z), lam)
    return lhs == content_product(G, lam).value


def pochhammer_identity_check(lam) -> bool:
    """(u)_lam = h(lam) s_lam(t(u)) with p_k -> u, and s_lam(t_inf) = 1/h(lam)."""
    lam = partition(lam)
    u = var("u")
    schur = schur_in_powersums(lam)
    s_at_u = sum((u ** len(mu) * c for mu, c in schur.items()), ZERO)
    s_at_inf = schur.get((1,) * sum(lam), Fraction(0))
    return (pochhammer(u, lam) == s_at_u * hook_product(lam)
            and s_at_inf == Fraction(1, hook_product(lam)))


# ---------------------------------------------------------------------------
# tau-function coefficients


def _character_weights(mu: Partition, nu: Partition):
    n = sum(mu)
    table = character_table(n)
    i, j = table.order.index(mu), table.order.index(nu)
    for row, lam in zip(table.values, table.order):
        w = Fraction(row[i] * row[j], z_mu(mu) * z_mu(nu))
        if w:
            yield lam, w


def tau_coefficient(G: WeightGenerator, d: int, mu, nu, q_cutoff: int | None = None):
    """[z^d p_mu(t) p_nu(s)] of sum_lam r_lam^G(z) s_lam(t) s_lam(s) at N = 0.

    Without ``q_cutoff`` the content products are expanded exactly from the
    coefficients G_k and a RationalFunction is returned.  With ``q_cutoff``
    (quantum generators only) the infinite q-products are truncated and a
    TruncatedSeries in q is returned.
    """
    mu, nu = partition(mu), partition(nu)
    if sum(mu) != sum(nu):
        raise ValueError("mu and nu must have the same weight")
    _limits.check("characters", sum(mu))
    if q_cutoff is None:
        total = ZERO
        for lam, w in _character_weights(mu, nu):
            total = total + _exact_r_coefficient(G, lam, d) * w
        return total
    if G.kind not in _Q_KINDS:
        raise ValueError("q-truncated expansion applies to quantum generators only")
    total = TruncatedSeries("q", q_cutoff)
    for lam, w in _character_weights(mu, nu):
        total = total + _qz_r_coefficient(G, lam, d, q_cutoff) * as_rf(w)
    return total


@cache
def _exact_r_coefficient(G: WeightGenerator, lam: Partition, d: int) -> RationalFunction:
    return content_product_series(G, lam, d)[d]


@cache
def _qz_r_coefficient(G: WeightGenerator, lam: Partition, d: int, q_cutoff: int) -> TruncatedSeries:
    return _content_product_qz(G, lam, 0, q_cutoff, d).z_coefficient(d)


def tau_coefficient_table(G: WeightGenerator, n: int, d_max: int) -> dict:
    return {
        (mu, nu, d): tau_coefficient(G, d, mu, nu)
        for mu in enumerate_partitions(n)
        for nu in enumerate_partitions(n)
        for d in range(d_max + 1)
    }
