"""Command-line front end.

    python -m planeinterp bounds --n 10
    python -m planeinterp table --preset corollary12 --format csv
    python -m planeinterp oracle --d 12 --n 6 --m 5 --seed 1 --trials 3

Exit codes: 0 success (Undecided included), 2 invalid input,
3 oracle budget exceeded, 4 Inconclusive oracle result under ``--strict``
(``--strict`` also turns Undecided verdicts into exit 4).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

from .bounds import SquareN, bound_matrix, c1, c2, cf_expand, split_n
from .exactnum import fmt_rational
from .linsys import TABLE_COLUMNS, UNDECIDED, LinearSystem, classify, invariants
from .oracle import (
    DEFAULT_BUDGET,
    DEFAULT_PRIME,
    INCONCLUSIVE,
    MAX_PRIME,
    BudgetExceeded,
    OracleConfig,
    certify,
)
from .sympow import h0, h0_anticanonical_pencil, sym_power, twist

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_STRICT = 4

PRESETS = {
    # systems with v = -1 shown empty by the kappa refinement
    "corollary12": [(1499, 10, 474), (778, 10, 246), (428, 11, 129),
                    (229, 11, 69), (215, 12, 62), (118, 12, 34)],
    # sharp examples with a unique section
    "sharp": [(3, 3, 2), (12, 6, 5), (48, 8, 17)],
    # 3 | d, so the refinement is silent
    "openproblems": [(57, 10, 18), (2220, 10, 702), (627, 11, 189), (312, 12, 90)],
}


class UsageError(Exception):
    pass


def _positive(name):
    def parse(text):
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{name} must be an integer, got {text!r}")
        if value < 1:
            raise argparse.ArgumentTypeError(f"{name} must be positive, got {value}")
        return value
    return parse


def _seed(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"seed must be an integer, got {text!r}")
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return value


def _prime(text):
    from sympy import isprime

    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"prime must be an integer, got {text!r}")
    if not 2 <= value <= MAX_PRIME or not isprime(value):
        raise argparse.ArgumentTypeError(f"{value} is not a prime in [2, {MAX_PRIME}]")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="planeinterp",
        description="Slope bounds and emptiness certificates for L(d, n, m).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")

    def add_dnm(p):
        p.add_argument("--d", type=_positive("d"), required=True)
        p.add_argument("--n", type=_positive("n"), required=True)
        p.add_argument("--m", type=_positive("m"), required=True)

    def add_oracle_flags(p):
        p.add_argument("--prime", type=_prime, default=DEFAULT_PRIME)
        p.add_argument("--seed", type=_seed, default=0)
        p.add_argument("--trials", type=_positive("trials"), default=3)
        p.add_argument("--budget", type=_positive("budget"), default=DEFAULT_BUDGET)

    p = sub.add_parser("bounds", help="split n = k^2 + alpha and print c1, c2")
    p.add_argument("--n", type=_positive("n"), required=True)
    p.add_argument("--level", type=int, choices=(1, 2))
    add_format(p)

    p = sub.add_parser("classify", help="emptiness verdict for L(d, n, m)")
    add_dnm(p)
    p.add_argument("--strict", action="store_true")
    add_format(p)

    p = sub.add_parser("invariants", help="invariant row for L(d, n, m)")
    add_dnm(p)
    add_format(p)

    p = sub.add_parser("table", help="reproduce a preset table")
    p.add_argument("--preset", choices=sorted(PRESETS), required=True)
    p.add_argument("--strict", action="store_true")
    add_oracle_flags(p)
    add_format(p)

    p = sub.add_parser("oracle", help="finite-field rank certificate for L(d, n, m)")
    add_dnm(p)
    add_oracle_flags(p)
    p.add_argument("--strict", action="store_true")
    add_format(p)

    p = sub.add_parser("sympow", help="decompose Sym^m E on the elliptic ruled surface")
    p.add_argument("--m", type=int)
    add_format(p)

    p = sub.add_parser("sweep", help="bounds for every non-square n <= n-max")
    p.add_argument("--n-max", type=_positive("n-max"), required=True)
    add_format(p)
    return parser


def _csv(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, sort_keys=False) + "\n"


def _aligned(header, rows) -> str:
    rows = [list(map(str, r)) for r in rows]
    widths = [max(len(str(h)), *(len(r[i]) for r in rows)) if rows else len(str(h))
              for i, h in enumerate(header)]
    lines = ["  ".join(str(h).rjust(w) for h, w in zip(header, widths))]
    lines += ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in rows]
    return "\n".join(lines) + "\n"


BOUNDS_KEYS = ("n", "k", "alpha", "c1", "c2", "thm1_applies", "main_thm_applies", "refinement_applies")


def cmd_bounds(args, out):
    try:
        ns = split_n(args.n)
    except (SquareN, ValueError) as exc:
        raise UsageError(str(exc))
    record = ns.to_dict()
    if args.level is not None:
        record["level"] = args.level
        record["cf"] = fmt_rational(cf_expand(ns, args.level))
    if args.format == "json":
        out.write(_json(record))
    elif args.format == "csv":
        out.write(_csv(list(record), [list(map(_cell, record.values()))]))
    else:
        out.write(f"n = {ns.n} = {ns.k}^2 + {ns.alpha}\n")
        out.write(f"c1 = {record['c1']}\n")
        out.write(f"c2 = {record['c2']}\n")
        for i in range(1, 5):
            bm = bound_matrix(ns, i)
            out.write(f"M{i} = [[{fmt_rational(bm.p)}, {fmt_rational(bm.q)}], "
                      f"[{fmt_rational(bm.r)}, {fmt_rational(bm.p)}]]  det = {fmt_rational(bm.det)}\n")
        if args.level is not None:
            out.write(f"continued fraction (level {args.level}) = {record['cf']}\n")
        for key in ("thm1_applies", "main_thm_applies", "refinement_applies"):
            out.write(f"{key} = {str(record[key]).lower()}\n")
    return EXIT_OK


def _cell(value):
    if isinstance(value, bool):
        return str(value).lower()
    return "" if value is None else str(value)


def _system(args) -> LinearSystem:
    return LinearSystem(args.d, args.n, args.m)


def cmd_classify(args, out):
    ls = _system(args)
    verdict = classify(ls)
    record = {"d": ls.d, "n": ls.n, "m": ls.m, **verdict.to_dict()}
    if args.format == "json":
        out.write(_json(record))
    elif args.format == "csv":
        out.write(_csv(list(record), [list(record.values())]))
    else:
        out.write(f"{ls}: {verdict.status}\n  {verdict.witness}\n")
    if args.strict and verdict.status == UNDECIDED:
        return EXIT_STRICT
    return EXIT_OK


def cmd_invariants(args, out):
    row = invariants(_system(args))
    _write_rows(args.format, [row], out)
    return EXIT_OK


def _write_rows(fmt, rows, out, verdicts=None):
    if fmt == "json":
        for i, row in enumerate(rows):
            record = row.to_dict()
            if verdicts is not None:
                record["verdict"] = verdicts[i].to_dict()
            out.write(_json(record))
    elif fmt == "csv":
        out.write(_csv(TABLE_COLUMNS, [row.table_row() for row in rows]))
    else:
        header = list(TABLE_COLUMNS) + (["verdict"] if verdicts is not None else [])
        body = [row.table_row() + ([verdicts[i].status] if verdicts is not None else [])
                for i, row in enumerate(rows)]
        out.write(_aligned(header, body))


def cmd_table(args, out):
    systems = [LinearSystem(*t) for t in PRESETS[args.preset]]
    if args.preset == "sharp":
        cfg = OracleConfig(prime=args.prime, seed=args.seed, trials=args.trials, budget=args.budget)
        certs = [certify(ls, cfg) for ls in systems]
        return _write_certs(args, certs, out)
    rows = [invariants(ls) for ls in systems]
    verdicts = [classify(ls) for ls in systems]
    _write_rows(args.format, rows, out, verdicts if args.preset == "openproblems" else None)
    if args.strict and any(v.status == UNDECIDED for v in verdicts):
        return EXIT_STRICT
    return EXIT_OK


CERT_KEYS = ("d", "n", "m", "prime", "seed", "trials", "expected", "h0_observed", "verdict", "per_trial_h0")


def _write_certs(args, certs, out):
    if args.format == "json":
        for cert in certs:
            out.write(_json(cert.to_dict()))
    elif args.format == "csv":
        rows = [[" ".join(map(str, c.per_trial_h0)) if k == "per_trial_h0" else getattr(c, k)
                 for k in CERT_KEYS] for c in certs]
        out.write(_csv(CERT_KEYS, rows))
    else:
        for c in certs:
            out.write(f"L({c.d},{c.n},{c.m}): {c.verdict}, h0 {c.h0_observed} "
                      f"(expected {c.expected}; per trial {c.per_trial_h0}; primes {c.primes})\n")
    if getattr(args, "strict", False) and any(c.verdict == INCONCLUSIVE for c in certs):
        return EXIT_STRICT
    return EXIT_OK


def cmd_oracle(args, out):
    ls = _system(args)
    cfg = OracleConfig(prime=args.prime, seed=args.seed, trials=args.trials, budget=args.budget)
    try:
        cert = certify(ls, cfg)
    except BudgetExceeded as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_BUDGET
    return _write_certs(args, [cert], out)


def cmd_sympow(args, out):
    if args.m is not None and args.m < 0:
        raise UsageError("--m must be nonnegative")
    ms = [args.m] if args.m is not None else list(range(5))
    pencil = h0_anticanonical_pencil()
    if args.format == "json":
        for m in ms:
            dec = sym_power(m)
            out.write(_json({"m": m, "rank": dec.rank, "degree": dec.degree,
                             "h0_twisted": h0(twist(dec, -(m // 2))), "terms": dec.to_json()}))
        out.write(_json({"h0_minus_2K": pencil}))
    elif args.format == "csv":
        rows = [[m, sym_power(m).rank, sym_power(m).degree, sym_power(m).render()] for m in ms]
        out.write(_csv(("m", "rank", "degree", "decomposition"), rows))
    else:
        for m in ms:
            out.write(f"Sym^{m} E = {sym_power(m).render()}\n")
        out.write(f"h0(-2K_S) = h0(Sym^4 E * A^-2) = {pencil}\n")
    return EXIT_OK


def cmd_sweep(args, out):
    records = []
    for n in range(2, args.n_max + 1):
        if math.isqrt(n) ** 2 == n:
            continue
        records.append(split_n(n).to_dict())
    if args.format == "json":
        for r in records:
            out.write(_json(r))
    elif args.format == "csv":
        out.write(_csv(BOUNDS_KEYS, [[_cell(r[k]) for k in BOUNDS_KEYS] for r in records]))
    else:
        out.write(_aligned(BOUNDS_KEYS, [[_cell(r[k]) for k in BOUNDS_KEYS] for r in records]))
    return EXIT_OK


COMMANDS = {
    "bounds": cmd_bounds,
    "classify": cmd_classify,
    "invariants": cmd_invariants,
    "table": cmd_table,
    "oracle": cmd_oracle,
    "sympow": cmd_sympow,
    "sweep": cmd_sweep,
}


def run(argv=None, out=None) -> int:
    """Parse ``argv``, dispatch, and return the exit code."""
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        return COMMANDS[args.command](args, out)
    except (UsageError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


def main():
    sys.exit(run())
