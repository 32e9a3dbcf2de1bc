"""Command-line interface.

Commands: power, chordality, witness, fuzz. Every command reads '-' as
standard input. Exit codes: 0 success, 1 property or verification failure,
2 usage or parse error. Timing goes to stderr so stdout is reproducible.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .chordality import is_k_chordal, largest_hole
from .exceptions import ClaimViolationError, ParseError
from .fuzz import PROPERTY_NAMES, TrialConfig, format_report, run_property
from .io import read_edge_list, write_dot, write_edge_list
from .powers import bipartite_power, graph_power
from .witness import CLAIM_CHECK_NAMES, build_path_system, path_system_dot, pullback_hole


def _read_graph(source: str):
    text = sys.stdin.read() if source == "-" else Path(source).read_text()
    return read_edge_list(text)


def _write_text(target: str, text: str) -> None:
    if target == "-":
        sys.stdout.write(text)
    else:
        Path(target).write_text(text)


def _fmt_cycle(seq) -> str:
    return " ".join(str(v) for v in seq)


def cmd_power(args: argparse.Namespace) -> int:
    g = _read_graph(args.input)
    result = bipartite_power(g, args.m) if args.bipartite else graph_power(g, args.m)
    _write_text(args.output, write_edge_list(result))
    return 0


def cmd_chordality(args: argparse.Namespace) -> int:
    g = _read_graph(args.input)
    hole = largest_hole(g)
    print(f"chordality={len(hole) if hole else 0}")
    print(f"hole={_fmt_cycle(hole)}" if hole else "hole=none")
    if args.k is not None:
        print(f"k-chordal={'true' if is_k_chordal(g, args.k) else 'false'}")
    if args.dot:
        _write_text(args.dot, write_dot(g, highlight=hole))
    return 0


def cmd_witness(args: argparse.Namespace) -> int:
    g = _read_graph(args.input)
    power = bipartite_power(g, args.m)
    hole = largest_hole(power)
    print(f"m={args.m}")
    if hole is None or len(hole) < 6:
        print("hole=none" if hole is None else f"hole={_fmt_cycle(hole)}")
        print("verdict=skipped (no hole of length >= 6 in the bipartite power)")
        return 0
    report = pullback_hole(g, args.m, hole, strict=False)
    print(f"hole={_fmt_cycle(hole)}")
    print(f"hole_length={len(hole)}")
    print(f"pulled_back_hole={_fmt_cycle(report.pulled_back_hole)}")
    print(f"pulled_back_length={len(report.pulled_back_hole)}")
    print(f"cycle_prime={_fmt_cycle(report.cycle_prime)}")
    print(f"max_edge_level={report.max_edge_level}")
    print(f"iterations={report.iteration_count}")
    for name in CLAIM_CHECK_NAMES:
        if name in report.claim_checks:
            state = "pass" if report.claim_checks[name] else "FAIL"
            print(f"{name}={state}")
    ok = report.all_checks_pass()
    print(f"verdict={'ok' if ok else 'claims-failed'}")
    if args.dot:
        system = build_path_system(g, args.m, hole)
        _write_text(args.dot, path_system_dot(system, highlight=report.cycle_prime))
    if args.strict and not ok:
        return 1
    return 0


def cmd_fuzz(args: argparse.Namespace) -> int:
    try:
        m_values = tuple(int(tok) for tok in args.m.split(",") if tok)
        cfg = TrialConfig(
            seed=args.seed,
            trials=args.trials,
            max_n=args.max_n,
            m_values=m_values,
            property_name=args.property,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    report = run_property(cfg)
    sys.stdout.write(format_report(report))
    print(f"elapsed={report.elapsed:.2f}s", file=sys.stderr)
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bipower",
        description="Bipartite graph powers, hole search, and hole pullback.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("power", help="write the m-th (bipartite) power as an edge list")
    p.add_argument("--input", required=True, help="edge-list file, or - for stdin")
    p.add_argument("--m", type=int, required=True, help="power exponent")
    p.add_argument("--bipartite", action="store_true", help="bipartite power (odd m)")
    p.add_argument("--output", default="-", help="output file, or - for stdout")
    p.set_defaults(func=cmd_power)

    p = sub.add_parser("chordality", help="largest hole and chordality")
    p.add_argument("--input", required=True)
    p.add_argument("--k", type=int, help="also report whether the graph is k-chordal")
    p.add_argument("--dot", help="write DOT with the largest hole highlighted")
    p.set_defaults(func=cmd_chordality)

    p = sub.add_parser("witness", help="pull the largest power-graph hole back to the input")
    p.add_argument("--input", required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--dot", help="write DOT of the expanded graph with the cycle highlighted")
    p.add_argument("--strict", action="store_true", help="exit 1 if any claim check fails")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("fuzz", help="property-test a theorem statement on random graphs")
    p.add_argument("--property", required=True, choices=PROPERTY_NAMES)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-n", type=int, required=True, dest="max_n")
    p.add_argument("--m", default="3", help="comma-separated odd exponents")
    p.set_defaults(func=cmd_fuzz)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except ClaimViolationError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 1
    except (ValueError, IndexError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
