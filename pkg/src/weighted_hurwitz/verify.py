"""Verification suites shared by the CLI: each check yields a named pass/fail record."""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .characters import character_table
from .classalg import (
    class_product,
    identity_element,
    idempotent,
    jucys_elementary,
    jm_monomial,
    structure_constants,
)
from .exact import parse_rational_function, series_expand
from .hurwitz import (
    bose_expectation,
    bose_partition_function,
    classical_limit_check,
    classical_limit_expansion,
    exp_hurwitz,
    hurwitz_number,
    weighted_hurwitz_brute,
    weighted_hurwitz_central,
    weighted_hurwitz_geometric,
)
from .partitions import dimension, enumerate_partitions, z_mu
from .perms import ga_class_coefficients, jm_elementary_direct, jm_monomial_direct
from .reference_table import PRINTED, PRINTED_PLAIN, TABLE_COLUMNS
from .symfun import CL_VARIANTS, cauchy_littlewood_check
from .tauseries import pochhammer_identity_check, tau_coefficient
from .weights import parse_generator

PIPELINE_GENERATORS = ("exp", "E", "E^2", "H", "E(q)", "E'(q)", "H(q)", "Q(q,p)")
SUITES = ("plain", "characters", "pipelines", "jucys", "tau", "limits", "cauchy", "bose", "table")


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


def plain_suite() -> list[Check]:
    out = []
    for profiles, expected in PRINTED_PLAIN:
        got = hurwitz_number(profiles)
        out.append(Check(f"H{profiles}", got == Fraction(expected), f"{got}"))
    return out


def characters_suite(n_max: int = 8) -> list[Check]:
    out = []
    for n in range(1, n_max + 1):
        table = character_table(n)
        order, values = table.order, table.values
        size = len(order)
        rows_ok = all(
            sum(Fraction(values[a][k] * values[b][k], z_mu(order[k])) for k in range(size)) == (a == b)
            for a in range(size) for b in range(size)
        )
        cols_ok = all(
            sum(values[l][a] * values[l][b] for l in range(size)) == (z_mu(order[a]) if a == b else 0)
            for a in range(size) for b in range(size)
        )
        dims_ok = all(values[i][-1] == dimension(lam) for i, lam in enumerate(order))
        out.append(Check(f"orthogonality rows n={n}", rows_ok))
        out.append(Check(f"orthogonality columns n={n}", cols_ok))
        out.append(Check(f"dimensions n={n}", dims_ok))
    for d in range(0, 7):
        ok = all(pochhammer_identity_check(lam) for lam in enumerate_partitions(d))
        out.append(Check(f"Pochhammer identity |lam|={d}", ok))
    return out


def _pipeline_block(args) -> list[Check]:
    spec, n, d_max = args
    G = parse_generator(spec)
    bad = []
    count = 0
    for d in range(d_max + 1):
        for mu in enumerate_partitions(n):
            for nu in enumerate_partitions(n):
                a = weighted_hurwitz_geometric(G, d, mu, nu)
                b = weighted_hurwitz_central(G, d, mu, nu)
                c = weighted_hurwitz_brute(G, d, mu, nu)
                count += 1
                if not (a == b == c):
                    bad.append(f"d={d} mu={mu} nu={nu}: {a} | {b} | {c}")
    return [Check(f"pipelines {spec} n={n} ({count} cells)", not bad, "; ".join(bad[:3]))]


def _map(fn, items, jobs: int):
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, items))
    return [fn(x) for x in items]


def pipelines_suite(n_max: int = 5, d_max: int = 4, generators=PIPELINE_GENERATORS, jobs: int = 1) -> list[Check]:
    items = [(g, n, d_max) for g in generators for n in range(1, n_max + 1)]
    return [c for block in _map(_pipeline_block, items, jobs) for c in block]


def jucys_suite(n_max: int = 6) -> list[Check]:
    out = []
    for n in range(1, n_max + 1):
        for k in range(n):
            direct = ga_class_coefficients(jm_elementary_direct(n, k))
            ok = direct is not None and direct == dict(jucys_elementary(n, k).coeffs)
            out.append(Check(f"e_{k}(J) n={n}", ok))
    return out


def class_algebra_suite(n_max: int = 5) -> list[Check]:
    out = []
    for n in range(1, n_max + 1):
        same = structure_constants(n, "direct") == structure_constants(n, "character")
        out.append(Check(f"structure constants n={n}", same))
        Fs = {lam: idempotent(lam) for lam in enumerate_partitions(n)}
        ortho = all(
            class_product(Fs[a], Fs[b]) == (Fs[a] if a == b else Fs[a].scale(0))
            for a in Fs for b in Fs
        )
        total = identity_element(n).scale(0)
        for F in Fs.values():
            total = total + F
        out.append(Check(f"idempotents n={n}", ortho and total == identity_element(n)))
        for d in range(1, 4):
            ok = all(
                ga_class_coefficients(jm_monomial_direct(n, lam)) == dict(jm_monomial(n, lam).coeffs)
                for lam in enumerate_partitions(d)
            )
            out.append(Check(f"m_lam(J) n={n} |lam|={d}", ok))
    return out


def tau_suite(n_max: int = 4, d_max: int = 3, q_cutoff: int = 8) -> list[Check]:
    out = []
    for spec in ("exp", "E", "E^2", "H"):
        G = parse_generator(spec)
        bad = [
            (d, mu, nu)
            for n in range(1, n_max + 1) for d in range(d_max + 1)
            for mu in enumerate_partitions(n) for nu in enumerate_partitions(n)
            if tau_coefficient(G, d, mu, nu) != weighted_hurwitz_geometric(G, d, mu, nu)
        ]
        out.append(Check(f"tau coefficients {spec}", not bad, str(bad[:3])))
    for spec in ("E(q)", "H(q)", "Q(q,p)"):
        G = parse_generator(spec)
        bad = [
            (d, mu, nu)
            for n in range(1, n_max + 1) for d in range(d_max + 1)
            for mu in enumerate_partitions(n) for nu in enumerate_partitions(n)
            if tau_coefficient(G, d, mu, nu, q_cutoff=q_cutoff)
            != series_expand(weighted_hurwitz_geometric(G, d, mu, nu), "q", q_cutoff)
        ]
        out.append(Check(f"tau coefficients {spec} to q^{q_cutoff}", not bad, str(bad[:3])))
    return out


def limits_suite(n_max: int = 4, d_max: int = 3, q_n_max: int = 3) -> list[Check]:
    out = []
    runs = [("E(q)", None, n_max), ("H(q)", None, n_max)] + [("Q(q,p)", t, q_n_max) for t in (1, 2, 3)]
    for spec, t, nm in runs:
        G = parse_generator(spec)
        bad = [
            (d, mu, nu)
            for n in range(1, nm + 1) for d in range(d_max + 1)
            for mu in enumerate_partitions(n) for nu in enumerate_partitions(n)
            if not classical_limit_check(G, d, mu, nu, t)
        ]
        label = spec if t is None else f"{spec} with p=q^{t}"
        out.append(Check(f"classical limit {label}", not bad, str(bad[:3])))
    return out


def cauchy_suite(nx: int = 4, ny: int = 4, deg: int = 6) -> list[Check]:
    return [Check(f"Cauchy-Littlewood {v}", cauchy_littlewood_check(v, nx, ny, deg)) for v in CL_VARIANTS]


def bose_suite() -> list[Check]:
    Z = bose_partition_function(2, 1)
    expect = bose_expectation(1, (1, 1), (2,))
    return [
        Check("Z^1 for n=2", Z == parse_rational_function("q/(1-q)"), str(Z)),
        Check("expectation (1,1),(2)", expect == Fraction(1, 2), str(expect)),
    ]


def _table_cell(args) -> dict:
    n, column = args
    G = parse_generator(column)
    mu, nu = (1,) * n, (n,)
    d = n - 1
    geometric = weighted_hurwitz_geometric(G, d, mu, nu)
    central = weighted_hurwitz_central(G, d, mu, nu)
    values = {"geometric": geometric, "central": central}
    if n <= 7:
        values["brute"] = weighted_hurwitz_brute(G, d, mu, nu)
    agreement = len({str(v) for v in values.values()}) == 1
    cell = {
        "n": n,
        "G": column,
        "value": str(geometric),
        "pipelines": {k: str(v) for k, v in values.items()},
        "agreement": agreement,
    }
    if G.kind in ("Eq", "Hq"):
        cell["classical_limit"] = classical_limit_check(G, d, mu, nu)
    else:
        expansion = classical_limit_expansion(G, d, mu, nu)
        cell["classical_limit"] = expansion is not None and expansion[0] == exp_hurwitz(d, mu, nu)
    cell["leading_coefficient"] = str(exp_hurwitz(d, mu, nu))
    printed = PRINTED.get(n, {}).get(column)
    if printed is not None:
        cell["printed"] = printed
        cell["printed_canonical"] = str(parse_rational_function(printed))
        cell["matches_printed"] = parse_rational_function(printed) == geometric
    return cell


def quantum_table(n_max: int = 5, jobs: int = 1) -> list[dict]:
    items = [(n, column) for n in range(2, n_max + 1) for column in TABLE_COLUMNS]
    return _map(_table_cell, items, jobs)


def table_suite(n_max: int = 5, jobs: int = 1) -> list[Check]:
    out = []
    for cell in quantum_table(n_max, jobs):
        ok = cell["agreement"] and cell["classical_limit"]
        note = "" if cell.get("matches_printed", True) else f"differs from printed {cell['printed']}"
        if cell["n"] == 2:
            ok = ok and cell.get("matches_printed", False)
        out.append(Check(f"table n={cell['n']} {cell['G']}", ok, note))
    return out


def run_suite(name: str, n_max: int = 4, d_max: int = 3, jobs: int = 1) -> list[Check]:
    if name == "all":
        return [c for s in SUITES for c in run_suite(s, n_max, d_max, jobs)]
    if name == "plain":
        return plain_suite()
    if name == "characters":
        return characters_suite(max(n_max, 1)) + class_algebra_suite(min(n_max, 5))
    if name == "pipelines":
        return pipelines_suite(n_max, d_max, jobs=jobs)
    if name == "jucys":
        return jucys_suite(min(n_max, 6))
    if name == "tau":
        return tau_suite(min(n_max, 4), d_max)
    if name == "limits":
        return limits_suite(min(n_max, 4), d_max, min(n_max, 3))
    if name == "cauchy":
        return cauchy_suite()
    if name == "bose":
        return bose_suite()
    if name == "table":
        return table_suite(max(n_max, 2), jobs)
    raise ValueError(f"unknown suite {name!r}")
