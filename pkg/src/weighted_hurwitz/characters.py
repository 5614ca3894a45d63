"""Irreducible characters of the symmetric group via Murnaghan-Nakayama."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache

from . import _limits
from .partitions import Partition, enumerate_partitions, format_partition, partition, z_mu


def _strip_removals(lam: Partition, r: int):
    """Yield (shape, sign) for each border strip of size r removable from lam.

    Works on the beta-set: a strip of size r is a bead moved from b to b - r.
    """
    L = len(lam)
    beads = [lam[i] + L - 1 - i for i in range(L)]
    occupied = set(beads)
    for idx, b in enumerate(beads):
        target = b - r
        if target < 0 or target in occupied:
            continue
        height = sum(1 for x in beads if target < x < b)
        moved = sorted(beads[:idx] + [target] + beads[idx + 1:], reverse=True)
        shape = tuple(x - (L - 1 - i) for i, x in enumerate(moved))
        yield tuple(p for p in shape if p > 0), (-1) ** height


@cache
def _mn(lam: Partition, mu: Partition) -> int:
    if not mu:
        return 1 if not lam else 0
    r, rest = mu[0], mu[1:]
    return sum(sign * _mn(shape, rest) for shape, sign in _strip_removals(lam, r))


def character(lam, mu) -> int:
    """chi_lam evaluated on the class of cycle type mu."""
    lam, mu = partition(lam), partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"weight mismatch: |{lam}| != |{mu}|")
    return _mn(lam, mu)


@dataclass(frozen=True)
class CharacterTable:
    n: int
    order: tuple[Partition, ...]
    values: tuple[tuple[int, ...], ...]

    def __getitem__(self, key: tuple[Partition, Partition]) -> int:
        lam, mu = key
        return self.values[self.order.index(lam)][self.order.index(mu)]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "order": [format_partition(p) for p in self.order],
            "values": [list(row) for row in self.values],
        }


def character_table(n: int) -> CharacterTable:
    _limits.check("characters", n)
    return _character_table(n)


@cache
def _character_table(n: int) -> CharacterTable:
    order = enumerate_partitions(n)
    values = tuple(tuple(_mn(lam, mu) for mu in order) for lam in order)
    return CharacterTable(n, order, values)


def schur_in_powersums(lam) -> dict[Partition, Fraction]:
    """Coefficients of s_lam in the power-sum basis: chi_lam(mu) / z_mu."""
    lam = partition(lam)
    out = {}
    for mu in enumerate_partitions(sum(lam)):
        chi = _mn(lam, mu)
        if chi:
            out[mu] = Fraction(chi, z_mu(mu))
    return out
