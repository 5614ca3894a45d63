"""Integer partitions as weakly decreasing tuples, plus their numerology."""

from __future__ import annotations

import math
from collections import Counter
from functools import cache
from typing import Iterable

from .exact import ONE, RationalFunction, as_rf

Partition = tuple[int, ...]


def partition(parts: Iterable[int] | int) -> Partition:
    """Normalize an iterable of positive integers (or one integer) into a Partition."""
    if isinstance(parts, int):
        parts = (parts,)
    parts = tuple(sorted((int(p) for p in parts), reverse=True))
    if parts and parts[-1] <= 0:
        raise ValueError(f"partition parts must be positive: {parts}")
    return parts


def parse_partition(text: str) -> Partition:
    """Parse ``"4,2,1"``; the empty string is the zero partition.

    Exponent shorthand ``2^2,1`` is accepted too.
    """
    text = text.strip().strip("()[]")
    if not text:
        return ()
    parts: list[int] = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        if "^" in chunk:
            base, mult = chunk.split("^")
            parts.extend([int(base)] * int(mult))
        else:
            parts.append(int(chunk))
    return partition(parts)


def format_partition(lam: Partition) -> str:
    return ",".join(map(str, lam))


@cache
def enumerate_partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of n in reverse lexicographic order, e.g. (4), (3,1), (2,2), ..."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return tuple(_partitions_bounded(n, n))


def _partitions_bounded(n: int, largest: int):
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            yield (first,) + rest


def partitions_up_to(n: int) -> list[Partition]:
    return [lam for k in range(n + 1) for lam in enumerate_partitions(k)]


def weight(lam: Partition) -> int:
    return sum(lam)


def length(lam: Partition) -> int:
    return len(lam)


def colength(lam: Partition) -> int:
    """|lam| - len(lam); zero only for the all-ones partition."""
    return sum(lam) - len(lam)


def multiplicities(lam: Partition) -> dict[int, int]:
    return dict(Counter(lam))


@cache
def z_mu(mu: Partition) -> int:
    """Order of the centralizer of a permutation of cycle type mu."""
    return math.prod(i**m * math.factorial(m) for i, m in Counter(mu).items())


def class_size(mu: Partition) -> int:
    return math.factorial(sum(mu)) // z_mu(mu)


def aut_order(lam: Partition) -> int:
    return math.prod(math.factorial(m) for m in Counter(lam).values())


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part > j) for j in range(lam[0]))


def cells(lam: Partition) -> list[tuple[int, int]]:
    """Cells (i, j), zero-based row and column, in row-major order."""
    return [(i, j) for i, row in enumerate(lam) for j in range(row)]


def contents(lam: Partition) -> list[int]:
    return [j - i for i, j in cells(lam)]


def hooks(lam: Partition) -> list[int]:
    conj = conjugate(lam)
    return [lam[i] - j + conj[j] - i - 1 for i, j in cells(lam)]


@cache
def hook_product(lam: Partition) -> int:
    return math.prod(hooks(lam))


def dimension(lam: Partition) -> int:
    """Number of standard Young tableaux of shape lam."""
    return math.factorial(sum(lam)) // hook_product(lam)


def pochhammer(u, lam: Partition) -> RationalFunction:
    """Generalized rising factorial: product of (u + content) over the cells of lam."""
    u = as_rf(u)
    result = ONE
    for c in contents(lam):
        result = result * (u + c)
    return result
