"""Command-line interface.

Exit codes: 0 for success or a true answer, 1 for a false answer
(unbalanced, not equivalent, counterexamples found), 2 for usage and I/O
errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import io, oracle
from .algebra import SizeLimitError
from .covers import build_cover, double_cover_matches_signs, gain_graph, verify_cover_isomorphism
from .exterior import wedge_power
from .families import KINDS, FamilySpec, generate
from .signed import GraphMismatchError, is_antibalanced, is_balanced, switching_equivalent


class UsageError(Exception):
    pass


def _read_input(path: Optional[str]):
    if path is None or path == "-":
        return io.parse_sg(sys.stdin.read())
    return io.read_sg(path)


def _write_output(text: str, path: Optional[str]) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _fmt_signs(values: Sequence[int]) -> str:
    return " ".join("+1" if x > 0 else "-1" for x in values)


def _parse_sign_list(text: str) -> tuple[int, ...]:
    table = {"+1": 1, "+": 1, "1": 1, "-1": -1, "-": -1}
    try:
        return tuple(table[t] for t in text.replace(",", " ").split())
    except KeyError as exc:
        raise UsageError(f"bad sign {exc.args[0]!r} in --signs") from None


def cmd_gen(args) -> int:
    spec = FamilySpec(
        kind=args.family,
        params=tuple(args.params),
        signing=args.sign,
        negative_edge=tuple(args.neg_edge) if args.neg_edge else None,
        signs=_parse_sign_list(args.signs) if args.signs else (),
        seed=args.seed,
    )
    _write_output(io.format_sg(generate(spec)), args.output)
    return 0


def cmd_wedge(args) -> int:
    g = _read_input(args.input)
    if not (1 <= args.k <= g.n - 1):
        raise UsageError(f"-k must lie in 1..{g.n - 1} for a graph on {g.n} vertices")
    wp = wedge_power(g, args.k)
    if args.format == "json":
        _write_output(io.dump_json(io.wedge_to_json(wp)), args.output)
    elif args.format == "dot":
        labels = ["^".join(str(x) for x in u) for u in wp.subsets]
        _write_output(io.format_dot(wp.graph, labels, name=f"wedge{args.k}"), args.output)
    else:
        _write_output(io.format_sg(wp.graph), args.output)
        if args.output and args.output != "-":
            _write_output(io.dump_json(io.subset_labels(wp)), args.output + ".labels.json")
    return 0


def cmd_balance(args) -> int:
    g = _read_input(args.input)
    if args.anti:
        report = is_antibalanced(g)
        word = "anti-balanced" if report.balanced else "not anti-balanced"
    else:
        report = is_balanced(g)
        word = "balanced" if report.balanced else "unbalanced"
    print(word)
    if report.balanced:
        print(f"switching: {_fmt_signs(report.switching)}")
    else:
        label = "positive cycle" if args.anti else "negative cycle"
        print(f"{label}: {' '.join(map(str, report.cycle))}")
    return 0 if report.balanced else 1


def cmd_switch_equiv(args) -> int:
    g1, g2 = _read_input(args.a), _read_input(args.b)
    try:
        d = switching_equivalent(g1, g2)
    except GraphMismatchError as exc:
        raise UsageError(str(exc)) from None
    if d is None:
        print("not equivalent")
        return 1
    print("equivalent")
    print(f"switching: {_fmt_signs(d)}")
    return 0


def cmd_cover(args) -> int:
    g = _read_input(args.input)
    if not (1 <= args.k <= g.n - 1):
        raise UsageError(f"-k must lie in 1..{g.n - 1} for a graph on {g.n} vertices")
    phi = gain_graph(g, args.k)
    cover = build_cover(phi)
    if args.output:
        _write_output(io.format_sg(cover.graph), args.output)
    iso = verify_cover_isomorphism(g, args.k)
    print(f"cover vertices: {cover.graph.n}")
    print(f"cover edges: {cover.graph.m}")
    print(f"isomorphic: {'true' if iso else 'false'}")
    ok = iso
    if args.k == 2:
        double = double_cover_matches_signs(g)
        print(f"double cover of the signed exterior square: {'true' if double else 'false'}")
        ok = ok and double
    return 0 if ok else 1


def cmd_verify(args) -> int:
    reports = oracle.run_suite(args.suite, n_max=args.nmax, budget=args.budget, seed=args.seed, workers=args.workers)
    if args.json:
        print(json.dumps([r.to_dict() for r in reports], indent=2))
    else:
        for r in reports:
            print(r.render())
        failed = sum(not r.passed for r in reports)
        print(f"{len(reports) - failed}/{len(reports)} checks passed")
    return 0 if all(r.passed for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="extpow", description="Exterior powers of signed graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a standard graph family")
    p.add_argument("family", choices=KINDS)
    p.add_argument("params", nargs="+", type=int, help="n; d for hypercube; n k l for johnson")
    p.add_argument("--sign", default="positive", choices=("positive", "negative", "one-negative", "explicit", "random"))
    p.add_argument("--neg-edge", nargs=2, type=int, metavar=("U", "V"), help="edge made negative by one-negative")
    p.add_argument("--signs", help="comma separated signs, one per edge in sorted order, for --sign explicit")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("wedge", help="exterior k-th power of a graph")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-i", "--input")
    p.add_argument("-o", "--output")
    p.add_argument("--format", choices=("sg", "json", "dot"), default="sg")
    p.set_defaults(func=cmd_wedge)

    p = sub.add_parser("balance", help="balance (or anti-balance) test with witness")
    p.add_argument("-i", "--input")
    p.add_argument("--anti", action="store_true")
    p.set_defaults(func=cmd_balance)

    p = sub.add_parser("switch-equiv", help="switching equivalence of two graphs on the same edges")
    p.add_argument("-a", required=True)
    p.add_argument("-b", required=True)
    p.set_defaults(func=cmd_switch_equiv)

    p = sub.add_parser("cover", help="S_k cover of the exterior power's gain graph")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-i", "--input")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_cover)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", choices=oracle.SUITES, default="all")
    p.add_argument("--nmax", type=int, default=4)
    p.add_argument("--budget", type=int, default=1024)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, io.GraphFormatError, SizeLimitError, ValueError, OSError) as exc:
        print(f"extpow: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
