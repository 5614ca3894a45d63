"""Permutations of {0..n-1} as image tuples, and the full group algebra for small n.

These are the brute-force oracles: direct convolution of class sums, explicit
Jucys-Murphy products, and monotone transposition paths.
"""

from __future__ import annotations

import itertools
from collections import Counter
from fractions import Fraction
from functools import cache

from .partitions import Partition, partition

Perm = tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(n))


def compose(a: Perm, b: Perm) -> Perm:
    """a * b, acting on the left: (a*b)(i) = a(b(i))."""
    return tuple(a[i] for i in b)


def inverse(a: Perm) -> Perm:
    out = [0] * len(a)
    for i, ai in enumerate(a):
        out[ai] = i
    return tuple(out)


def transposition(n: int, a: int, b: int) -> Perm:
    img = list(range(n))
    img[a], img[b] = b, a
    return tuple(img)


def left_transpose(h: Perm, a: int, b: int) -> Perm:
    """(a b) * h: swap the values a and b in the image tuple."""
    return tuple(b if x == a else a if x == b else x for x in h)


def cycle_type(a: Perm) -> Partition:
    seen = [False] * len(a)
    lengths = []
    for i in range(len(a)):
        if not seen[i]:
            k, j = 0, i
            while not seen[j]:
                seen[j] = True
                j = a[j]
                k += 1
            lengths.append(k)
    return partition(lengths)


@cache
def all_perms(n: int) -> tuple[Perm, ...]:
    return tuple(itertools.permutations(range(n)))


@cache
def perms_by_type(n: int) -> dict[Partition, tuple[Perm, ...]]:
    groups: dict[Partition, list[Perm]] = {}
    for a in all_perms(n):
        groups.setdefault(cycle_type(a), []).append(a)
    return {k: tuple(v) for k, v in groups.items()}


def representative(mu: Partition) -> Perm:
    """A fixed permutation of cycle type mu built from consecutive cycles."""
    img, start = [], 0
    for part in mu:
        img.extend(range(start + 1, start + part))
        img.append(start)
        start += part
    return tuple(img)


# group algebra elements: dict Perm -> Fraction


def ga_mul(x: dict, y: dict) -> dict:
    out: dict = {}
    for a, ca in x.items():
        for b, cb in y.items():
            g = compose(a, b)
            out[g] = out.get(g, 0) + ca * cb
    return {g: c for g, c in out.items() if c}


def ga_add(x: dict, y: dict) -> dict:
    out = dict(x)
    for g, c in y.items():
        out[g] = out.get(g, 0) + c
    return {g: c for g, c in out.items() if c}


def jucys_murphy(n: int, b: int) -> dict:
    """J_b = sum_{a<b} (a b) with 1-based b; J_1 = 0."""
    return {transposition(n, a, b - 1): Fraction(1) for a in range(b - 1)}


def ga_class_coefficients(x: dict) -> dict[Partition, Fraction] | None:
    """Class-sum coefficients if x is central (constant on classes), else None."""
    if not x:
        return {}
    n = len(next(iter(x)))
    out = {}
    for mu, members in perms_by_type(n).items():
        values = {x.get(g, 0) for g in members}
        if len(values) != 1:
            return None
        value = values.pop()
        if value:
            out[mu] = Fraction(value)
    return out


def jm_elementary_direct(n: int, k: int) -> dict:
    """e_k(J_1, ..., J_n) expanded in the group algebra."""
    levels = [{identity(n): Fraction(1)}] + [{} for _ in range(k)]
    for b in range(2, n + 1):
        J = jucys_murphy(n, b)
        for j in range(k, 0, -1):
            levels[j] = ga_add(levels[j], ga_mul(J, levels[j - 1]))
    return levels[k]


def jm_monomial_direct(n: int, lam: Partition) -> dict:
    """m_lam(J_1, ..., J_n) by symmetrizing over distinct exponent placements."""
    from sympy.utilities.iterables import multiset_permutations

    lam = partition(lam)
    if len(lam) > n:
        return {}
    powers: dict[tuple[int, int], dict] = {}

    def jpow(b: int, e: int) -> dict:
        if (b, e) not in powers:
            x = {identity(n): Fraction(1)}
            for _ in range(e):
                x = ga_mul(jucys_murphy(n, b), x)
            powers[(b, e)] = x
        return powers[(b, e)]

    total: dict = {}
    for exps in multiset_permutations(list(lam) + [0] * (n - len(lam))):
        term = {identity(n): Fraction(1)}
        for b, e in enumerate(exps, start=1):
            if e:
                term = ga_mul(jpow(b, e), term)
                if not term:
                    break
        total = ga_add(total, term)
    return total


@cache
def direct_structure_constants(n: int) -> dict[tuple[Partition, Partition], dict[Partition, int]]:
    """c[mu, nu][rho] = #{(a, b) : a in cyc(mu), b in cyc(nu), a*b = g_rho}."""
    types = {a: cycle_type(a) for a in all_perms(n)}
    classes = perms_by_type(n)
    out: dict = {}
    for rho in classes:
        g = representative(rho)
        for a, mu in types.items():
            nu = types[compose(inverse(a), g)]
            row = out.setdefault((mu, nu), {})
            row[rho] = row.get(rho, 0) + 1
    return out


def monotone_paths(start: Perm, d: int, strict: bool = False):
    """Yield (transposition list, end permutation) for weakly (or strictly) monotone paths.

    Transpositions (a, b) with a < b are 0-based and applied by left multiplication;
    the second entries b are nondecreasing (increasing when ``strict``).
    """
    n = len(start)

    def walk(h: Perm, steps: list, bmin: int):
        if len(steps) == d:
            yield list(steps), h
            return
        for b in range(bmin, n):
            for a in range(b):
                steps.append((a, b))
                yield from walk(left_transpose(h, a, b), steps, b + 1 if strict else b)
                steps.pop()

    yield from walk(start, [], 1)


def path_signature(steps) -> Partition:
    return partition(Counter(b for _, b in steps).values())
