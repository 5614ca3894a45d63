"""Command-line interface: ``weighted-hurwitz <command> [flags]``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys

from ._limits import BoundExceeded
from .characters import character_table
from .hurwitz import PIPELINES, hurwitz_number, monotone_path_counts, weighted_hurwitz
from .partitions import format_partition, parse_partition
from .tauseries import tau_coefficient
from .verify import SUITES, quantum_table, run_suite
from .weights import format_generator, parse_generator


class UsageError(Exception):
    pass


def _partition_arg(text: str, flag: str):
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise UsageError(f"{flag}: malformed partition {text!r}") from exc


def _profiles_arg(text: str):
    return [_partition_arg(chunk, "--profiles") for chunk in text.split("|")]


def _generator_arg(text: str):
    try:
        return parse_generator(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _latex(value: str) -> str:
    value = re.sub(r"\^(\d+)", r"^{\1}", value).replace("*", "")
    if "/" in value:
        num, den = value.split("/", 1)
        strip = lambda s: s[1:-1] if s.startswith("(") and s.endswith(")") else s
        return rf"\frac{{{strip(num)}}}{{{strip(den)}}}"
    return value


def _emit(rows: list[dict], columns: list[str], fmt: str, payload) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=None, sort_keys=False)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=columns, extrasaction="ignore", lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: row.get(k, "") for k in columns})
        return buf.getvalue().rstrip("\n")
    lines = [" & ".join(columns) + r" \\"]
    for row in rows:
        cells = []
        for k in columns:
            v = row.get(k, "")
            cells.append(f"${_latex(v)}$" if k in ("value", "printed") and v else str(v))
        lines.append(" & ".join(cells) + r" \\")
    return "\n".join(lines)


def cmd_hurwitz(args) -> tuple[int, str]:
    profiles = _profiles_arg(args.profiles)
    value = str(hurwitz_number(profiles))
    payload = {"query": {"profiles": [format_partition(p) for p in profiles]}, "value": value}
    row = {"profiles": args.profiles, "value": value}
    return 0, _emit([row], ["profiles", "value"], args.format, payload)


def cmd_weighted(args) -> tuple[int, str]:
    G = _generator_arg(args.G)
    mu, nu = _partition_arg(args.mu, "--mu"), _partition_arg(args.nu, "--nu")
    if sum(mu) != sum(nu):
        raise UsageError("--mu and --nu must have the same weight")
    pipelines = PIPELINES if args.pipeline == "all" else (args.pipeline,)
    results = [weighted_hurwitz(G, args.d, mu, nu, p) for p in pipelines]
    values = [str(r.value) for r in results]
    agreement = len(set(values)) == 1
    query = {"G": format_generator(G), "d": args.d, "mu": format_partition(mu), "nu": format_partition(nu)}
    payload = {
        "query": query,
        "value": values[0],
        "pipeline": args.pipeline,
        "agreement": agreement,
        "results": [{"pipeline": r.pipeline, "value": v} for r, v in zip(results, values)],
    }
    rows = [dict(query, pipeline=r.pipeline, value=v) for r, v in zip(results, values)]
    return (0 if agreement else 1), _emit(rows, ["G", "d", "mu", "nu", "pipeline", "value"], args.format, payload)


def cmd_paths(args) -> tuple[int, str]:
    mu, nu = _partition_arg(args.mu, "--mu"), _partition_arg(args.nu, "--nu")
    if sum(mu) != sum(nu):
        raise UsageError("--mu and --nu must have the same weight")
    counts = monotone_path_counts(sum(mu), args.d, nu)
    rows = [
        {"signature": format_partition(sig), "count": c}
        for (end, sig), c in sorted(counts.items(), key=lambda kv: kv[0][1], reverse=True)
        if end == mu
    ]
    payload = {"query": {"d": args.d, "mu": format_partition(mu), "nu": format_partition(nu)}, "counts": rows}
    return 0, _emit(rows, ["signature", "count"], args.format, payload)


def cmd_characters(args) -> tuple[int, str]:
    table = character_table(args.n)
    data = table.to_json()
    rows = [dict({"lambda": lam}, **dict(zip(data["order"], vals))) for lam, vals in zip(data["order"], data["values"])]
    return 0, _emit(rows, ["lambda"] + data["order"], args.format, data)


def cmd_quantum_table(args) -> tuple[int, str]:
    cells = quantum_table(args.n_max, args.jobs)
    ok = all(c["agreement"] and c["classical_limit"] for c in cells)
    payload = {"query": {"n_max": args.n_max}, "cells": cells, "agreement": ok}
    columns = ["n", "G", "value", "agreement", "classical_limit", "printed", "matches_printed"]
    return (0 if ok else 1), _emit(cells, columns, args.format, payload)


def cmd_tau(args) -> tuple[int, str]:
    G = _generator_arg(args.G)
    mu, nu = _partition_arg(args.mu, "--mu"), _partition_arg(args.nu, "--nu")
    if sum(mu) != sum(nu):
        raise UsageError("--mu and --nu must have the same weight")
    try:
        value = tau_coefficient(G, args.d, mu, nu, q_cutoff=args.q_cutoff)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    query = {"G": format_generator(G), "d": args.d, "mu": format_partition(mu), "nu": format_partition(nu),
             "q_cutoff": args.q_cutoff}
    payload = {"query": query, "value": str(value)}
    return 0, _emit([dict(query, value=str(value))], ["G", "d", "mu", "nu", "value"], args.format, payload)


def cmd_verify(args) -> tuple[int, str]:
    checks = run_suite(args.suite, args.n_max, args.d_max, args.jobs)
    passed = sum(c.passed for c in checks)
    rows = [{"check": c.name, "passed": c.passed, "detail": c.detail} for c in checks]
    payload = {"query": {"suite": args.suite, "n_max": args.n_max, "d_max": args.d_max},
               "passed": passed, "total": len(checks), "agreement": passed == len(checks), "checks": rows}
    return (0 if passed == len(checks) else 1), _emit(rows, ["check", "passed", "detail"], args.format, payload)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="weighted-hurwitz", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("json", "csv", "latex"), default="json")
        p.add_argument("--jobs", type=int, default=1)
        return p

    p = common(sub.add_parser("hurwitz", help="plain Hurwitz number of a list of profiles"))
    p.add_argument("--profiles", required=True, help='e.g. "2,1|2,1|3"')
    p.set_defaults(func=cmd_hurwitz)

    p = common(sub.add_parser("weighted", help="weighted double Hurwitz number"))
    p.add_argument("--G", required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--nu", required=True)
    p.add_argument("--pipeline", choices=PIPELINES + ("all",), default="geometric")
    p.set_defaults(func=cmd_weighted)

    p = common(sub.add_parser("paths", help="weakly monotone path counts by signature"))
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--nu", required=True)
    p.set_defaults(func=cmd_paths)

    p = common(sub.add_parser("characters", help="character table of S_n"))
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_characters)

    p = common(sub.add_parser("quantum-table", help="H^{n-1}_G((1^n),(n)) for E(q), H(q), E'(q)"))
    p.add_argument("--n-max", type=int, default=5)
    p.set_defaults(func=cmd_quantum_table)

    p = common(sub.add_parser("tau-coeff", help="Schur-expansion coefficient of the tau-function"))
    p.add_argument("--G", required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--nu", required=True)
    p.add_argument("--q-cutoff", type=int, default=None)
    p.set_defaults(func=cmd_tau)

    p = common(sub.add_parser("verify", help="run verification suites"))
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--n-max", type=int, default=4)
    p.add_argument("--d-max", type=int, default=3)
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv=None) -> tuple[int, str]:
    """Parse argv and execute; returns (exit code, output text)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), ""
    for flag in ("d", "n", "n_max", "d_max", "q_cutoff"):
        value = getattr(args, flag, None)
        if value is not None and value < 0:
            return 2, f"error: --{flag.replace('_', '-')} must be non-negative"
    if getattr(args, "jobs", 1) < 1:
        return 2, "error: --jobs must be at least 1"
    try:
        return args.func(args)
    except (UsageError, BoundExceeded, ValueError) as exc:
        return 2, f"error: {exc}"


def main(argv=None) -> int:
    code, text = run(argv)
    if text:
        stream = sys.stderr if code == 2 else sys.stdout
        print(text, file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
