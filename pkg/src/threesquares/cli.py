"""Command-line front end.

Subcommands: verify (identity catalog), count (single representation
count), s (sums of three squares), genus (genus reports), prop54 (the
weighted two-genus identity).  Exit codes: 0 all checks passed, 1 a
verification failed, 2 usage error.  Output is deterministic: JSON lines
are sorted-key and timing is confined to the human-readable table.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from .catalog import catalog, lookup
from .forms import is_prime
from .genera import find_h, genus_partition, tg1, tg2
from .lattice import TernaryForm, rep_count_ternary, s_table
from .verify import run_catalog, verify_prop54

DEFAULT_ORDER = 1000

USAGE_ERROR = 2


class UsageError(SystemExit):
    def __init__(self, message: str):
        print(f"error: {message}", file=sys.stderr)
        super().__init__(USAGE_ERROR)


def _default_order() -> int:
    env = os.environ.get("TERNARY_ORDER")
    if env:
        try:
            return int(env)
        except ValueError:
            raise SystemExit("TERNARY_ORDER must be an integer")
    return DEFAULT_ORDER


def _emit(rows: list[dict], fmt: str, output: str | None, columns) -> None:
    if fmt == "json":
        text = "\n".join(json.dumps(r, sort_keys=True) for r in rows) + "\n"
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=columns, extrasaction="ignore")
        writer.writeheader()
        for r in rows:
            writer.writerow(r)
        text = buf.getvalue()
    else:
        widths = {
            c: max(len(c), *(len(str(r.get(c, ""))) for r in rows)) if rows else len(c)
            for c in columns
        }
        lines = ["  ".join(c.ljust(widths[c]) for c in columns)]
        for r in rows:
            lines.append(
                "  ".join(str(r.get(c, "")).ljust(widths[c]) for c in columns)
            )
        text = "\n".join(lines) + "\n"
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_form(text: str):
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"malformed form tuple {text!r}")
    if len(parts) != 6:
        raise UsageError(
            "expected a 6-tuple a,b,c,d,e,f (coefficients of "
            "x^2, y^2, z^2, yz, zx, xy)"
        )
    try:
        return TernaryForm(*parts)
    except ValueError as exc:
        raise UsageError(str(exc))


def _cmd_verify(args) -> int:
    order = args.order if args.order is not None else _default_order()
    if args.all or not args.id:
        ids = None
    else:
        ids = args.id
        known = {s.id for s in catalog()}
        for ident in ids:
            if ident not in known:
                raise UsageError(f"unknown identity id {ident!r}")
    reports = run_catalog(order, ids)
    rows = []
    for r in reports:
        row = r.to_json_dict()
        if args.format != "json":
            row["firstMismatch"] = (
                "" if r.first_mismatch is None else str(tuple(r.first_mismatch))
            )
        if args.format == "table":
            row["elapsed"] = f"{r.elapsed:.3f}s"
        rows.append(row)
    columns = ["id", "order", "status", "firstMismatch"]
    if args.format == "table":
        columns.append("elapsed")
    _emit(rows, args.format, args.output, columns)
    failed = [r for r in reports if r.status != "pass"]
    if failed:
        print(f"{len(failed)} identities FAILED", file=sys.stderr)
        return 1
    return 0


def _cmd_count(args) -> int:
    form = _parse_form(args.form)
    print(rep_count_ternary(form, args.n))
    return 0


def _cmd_s(args) -> int:
    if args.max < 0:
        raise UsageError("--max must be non-negative")
    table = s_table(args.max)
    rows = [{"n": n, "s": int(table[n])} for n in range(args.max + 1)]
    _emit(rows, args.format, args.output, ["n", "s"])
    return 0


def _genus_rows(genus, label):
    rows = []
    for member, aut, w in zip(
        genus.members, genus.aut_counts, genus.weights48()
    ):
        rows.append(
            {
                "genus": label,
                "form": ",".join(str(c) for c in member.as_tuple()),
                "aut": aut,
                "weight48": w,
            }
        )
    return rows


def _cmd_genus(args) -> int:
    if args.p is None and args.disc is None:
        raise UsageError("genus needs --p or --disc")
    if args.p is not None:
        if args.p == 2 or not is_prime(args.p):
            raise UsageError("--p must be an odd prime")
        genus1, genus2 = tg1(args.p), tg2(args.p)
        if args.format == "json":
            pairing = find_h(args.p, args.max_n)
            doc = {
                "p": args.p,
                "tg1": genus1.to_json_dict(),
                "tg2": genus2.to_json_dict(),
                "hStatus": pairing.status,
                "h": [
                    [list(a.as_tuple()), list(b.as_tuple())]
                    for a, b in pairing.mapping
                ],
            }
            _emit([doc], "json", args.output, [])
            return 0
        rows = _genus_rows(genus1, f"TG1,{args.p}") + _genus_rows(
            genus2, f"TG2,{args.p}"
        )
        _emit(rows, args.format, args.output, ["genus", "form", "aut", "weight48"])
        pairing = find_h(args.p, args.max_n)
        print(f"pullback bijection: {pairing.status}")
        for a, b in pairing.mapping:
            print(f"  {a} -> {b}")
        return 0
    genera = genus_partition(args.disc)
    if args.format == "json":
        _emit([g.to_json_dict() for g in genera], "json", args.output, [])
        return 0
    rows = []
    for i, g in enumerate(genera):
        rows.extend(_genus_rows(g, f"G{i + 1}"))
    _emit(rows, args.format, args.output, ["genus", "form", "aut", "weight48"])
    print(f"{len(genera)} genera of discriminant {args.disc}")
    return 0


def _cmd_prop54(args) -> int:
    primes = []
    for part in args.p.split(","):
        try:
            p = int(part)
        except ValueError:
            raise UsageError(f"malformed prime {part!r}")
        if p == 2 or not is_prime(p):
            raise UsageError(f"{p} is not an odd prime")
        primes.append(p)
    rows = []
    all_pass = True
    for p in primes:
        rep = verify_prop54(p, args.max_n)
        all_pass &= rep.status == "pass"
        rows.append(
            {
                "p": p,
                "maxN": rep.max_n,
                "status": rep.status,
                "firstFail": "" if rep.first_fail is None else rep.first_fail,
                "tg1": " + ".join(f"{c}*R{list(t)}" for c, t in rep.tg1_terms),
                "tg2": " + ".join(f"{c}*R{list(t)}" for c, t in rep.tg2_terms),
            }
        )
    _emit(
        rows,
        args.format,
        args.output,
        ["p", "maxN", "status", "firstFail", "tg1", "tg2"],
    )
    return 0 if all_pass else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="threesquares",
        description="Exact verification of sums-of-three-squares identities "
        "and ternary quadratic form genus constructions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run identity catalog checks")
    p_verify.add_argument("--all", action="store_true", help="run every entry")
    p_verify.add_argument(
        "--id", action="append", help="identity id (repeatable)"
    )
    p_verify.add_argument("--order", type=int, default=None)
    p_verify.set_defaults(func=_cmd_verify)

    p_count = sub.add_parser("count", help="representation count of one n")
    p_count.add_argument("--form", required=True, help="a,b,c,d,e,f")
    p_count.add_argument("--n", type=int, required=True)
    p_count.set_defaults(func=_cmd_count)

    p_s = sub.add_parser("s", help="sums-of-three-squares counts 0..max")
    p_s.add_argument("--max", type=int, required=True)
    p_s.set_defaults(func=_cmd_s)

    p_genus = sub.add_parser("genus", help="genus reports")
    p_genus.add_argument("--p", type=int, help="odd prime: the two genera")
    p_genus.add_argument("--disc", type=int, help="list genera of one discriminant")
    p_genus.add_argument("--all", action="store_true", help="(with --disc)")
    p_genus.add_argument("--max-n", type=int, default=500)
    p_genus.set_defaults(func=_cmd_genus)

    p54 = sub.add_parser("prop54", help="weighted two-genus identity")
    p54.add_argument("--p", required=True, help="comma-separated odd primes")
    p54.add_argument("--max-n", type=int, default=1000)
    p54.set_defaults(func=_cmd_prop54)

    for sp in (p_verify, p_s, p_genus, p54):
        sp.add_argument(
            "--format", choices=("json", "table", "csv"), default="table"
        )
        sp.add_argument("--output", help="write the report to a file")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError:
        raise
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
