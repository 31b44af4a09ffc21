"""Command-line front end: ``xns11 verify | table | jeval | ap``."""

from __future__ import annotations

import argparse
import json
import sys

from . import goursat, jmap
from .exact import IncompleteFactorization, InsufficientPrecision, PoleError, factor_integer
from .report import Config
from .suite import build_report

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _config(args) -> Config:
    return Config.load(args.config, precision=args.precision, bound=args.bound, p_max=getattr(args, "p_max", None))


def cmd_verify(args) -> int:
    report = build_report(_config(args), skip_slow="slow" in (args.skip or []))
    with_time = not args.deterministic
    print(report.dumps(with_time) if args.json else report.render_text(with_time))
    return EXIT_OK if report.passed else EXIT_FAIL


def table_rows(config: Config) -> list[dict]:
    """All 13 rows as JSON-ready dicts; a row that cannot be computed carries an ``error``."""
    G = jmap.resolve_table_orientation()
    out = []
    for n in range(6, -7, -1):
        try:
            out.append(jmap.build_row(n, G, config.bound, config.precision).to_json())
        except (IncompleteFactorization, PoleError, InsufficientPrecision) as exc:
            out.append({"n": n, "error": f"{type(exc).__name__}: {exc}"})
    return out


def render_markdown(rows: list[dict]) -> str:
    lines = ["| n | j (factored) | CM | K |", "|---|---|---|---|"]
    for r in rows:
        if "error" in r:
            lines.append(f"| {r['n']} | error: {r['error']} | | |")
            continue
        cm = "" if r["cm_disc"] is None else str(r["cm_disc"])
        k = r["K"] + ("" if r["K_verified"] or not r["K"] else " (unverified)")
        lines.append(f"| {r['n']} | {r['j_factored']} | {cm} | {k} |")
    return "\n".join(lines)


def cmd_table(args) -> int:
    rows = table_rows(_config(args))
    if args.format == "json":
        print(json.dumps(rows, indent=2, sort_keys=True))
    else:
        print(render_markdown(rows))
    return EXIT_FAIL if any("error" in r for r in rows) else EXIT_OK


def cmd_jeval(args) -> int:
    config = _config(args)
    if abs(args.n) > 6:
        print(f"warning: |n| > 6, factorization may be incomplete at bound {config.bound}", file=sys.stderr)
    G = jmap.resolve_table_orientation()
    P = jmap.XNS_PLUS.mul(args.n, G)
    try:
        j = jmap.build_j()(P, config.precision)
    except PoleError:
        print(f"j has a pole at [{args.n}]P = {P}", file=sys.stderr)
        return EXIT_FAIL
    num, den = factor_integer(j.numerator, config.bound), factor_integer(j.denominator, config.bound)
    factored = "0" if j == 0 else (str(num) if j.denominator == 1 else f"{num}/{den}")
    print(f"[{args.n}]P = {P}")
    print(f"j = {j}")
    print(f"j = {factored}")
    return EXIT_OK


def cmd_ap(args) -> int:
    c = goursat.congruence_check(_config(args).p_max)
    print("p\ta_p(A)\ta_p(D)\tcongruent mod 3")
    for r in c["rows"]:
        print(f"{r['p']}\t{r['a_p(A)']}\t{r['a_p(D)']}\t{r['congruent']}")
    print(f"bad primes skipped: {c['skipped']}")
    return EXIT_OK if c["ok"] else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON config file (default: $XNS11_CONFIG)")
    common.add_argument("--precision", type=int, help="series precision in terms")
    common.add_argument("--bound", type=int, help="trial division bound")

    parser = argparse.ArgumentParser(prog="xns11", description="Exact verifications on X_ns(11).")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", parents=[common], help="run every check")
    v.add_argument("--json", action="store_true", help="emit the JSON report")
    v.add_argument("--skip", action="append", choices=["slow"], help="skip a group of checks")
    v.add_argument("--deterministic", action="store_true", help="omit wall times")
    v.add_argument("--p-max", type=int, dest="p_max", help="congruence bound")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("table", parents=[common], help="print the table of j at [n]P")
    t.add_argument("--format", choices=["md", "json"], default="md")
    t.set_defaults(func=cmd_table)

    j = sub.add_parser("jeval", parents=[common], help="evaluate j at [n]P")
    j.add_argument("--n", type=int, required=True)
    j.set_defaults(func=cmd_jeval)

    a = sub.add_parser("ap", parents=[common], help="a_p of A and D and their congruence mod 3")
    a.add_argument("--p-max", type=int, dest="p_max", default=None)
    a.set_defaults(func=cmd_ap)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        # bad config values or an unreadable config file
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
