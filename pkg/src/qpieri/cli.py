"""
Command-line front end.

    qpieri expand   --w 321 --k 2 --p 2 [--format json] [--filter-sn N]
    qpieri monk     --x 321 --k 1 [--format json]
    qpieri chains   --w 321 --k 2 [--p 2] [--format json]
    qpieri markings --w 321 --k 2 --p 2
    qpieri verify   --suite classical [--max-n N] [--format json]

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .chains import enumerate_markings, enumerate_pieri_chains
from .expansion import Expansion, monk_lhs_expand, pieri_expand
from .permutations import Permutation
from .render import chains_table, markings_table
from .verify import SUITES, run_suite


def _parse_perm(text: str) -> Permutation:
    try:
        return Permutation.from_one_line(text)
    except ValueError as exc:
        raise SystemExit(f"error: bad permutation {text!r}: {exc}")


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _expansion_output(expansion: Expansion, fmt: str) -> str:
    if fmt == "json":
        return expansion.to_json() + "\n"
    return expansion.render() + "\n"


def cmd_expand(args) -> int:
    w = _parse_perm(args.w)
    if not 0 <= args.p <= args.k:
        raise SystemExit(f"error: need 0 <= p <= k, got p={args.p}, k={args.k}")
    expansion = pieri_expand(w, args.k, args.p)
    if args.filter_sn:
        expansion = expansion.filter_s_n(args.filter_sn)
    _emit(_expansion_output(expansion, args.format), args.out)
    return 0


def cmd_monk(args) -> int:
    x = _parse_perm(args.x)
    expansion = monk_lhs_expand(x, args.k)
    if args.filter_sn:
        expansion = expansion.filter_s_n(args.filter_sn)
    _emit(_expansion_output(expansion, args.format), args.out)
    return 0


def cmd_chains(args) -> int:
    w = _parse_perm(args.w)
    p = args.p if args.p is not None else args.k
    if args.format == "json":
        records = []
        for chain in enumerate_pieri_chains(w, args.k):
            record = chain.path.to_record()
            record["markings"] = [
                [list(lab) for lab in chain.labels if lab in m]
                for m in enumerate_markings(chain, p)
            ]
            records.append(record)
        _emit(json.dumps(records) + "\n", args.out)
    else:
        _emit(chains_table(w, args.k, p), args.out)
    return 0


def cmd_markings(args) -> int:
    w = _parse_perm(args.w)
    _emit(markings_table(w, args.k, args.p), args.out)
    return 0


def cmd_verify(args) -> int:
    report = run_suite(args.suite, args.max_n)
    if args.format == "json":
        _emit(json.dumps(report.to_json_obj()) + "\n", args.out)
    else:
        lines = [
            f"suite: {report.suite}",
            f"universe: {report.universe}",
            f"checked: {report.checked}",
            f"failures: {len(report.failures)}",
        ]
        lines += [f"  {f}" for f in report.failures[:20]]
        if len(report.failures) > 20:
            lines.append(f"  ... and {len(report.failures) - 20} more")
        _emit("\n".join(lines) + "\n", args.out)
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qpieri",
        description="Quantum Pieri products via chains in the quantum Bruhat graph",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, perm_flag="--w"):
        p.add_argument(perm_flag, required=True, help="permutation in one-line notation")
        p.add_argument("--k", type=int, required=True, help="column of the factor")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--filter-sn", type=int, default=None, metavar="N",
                       help="drop basis terms outside S_N")
        p.add_argument("--out", default=None, help="write output to a file")

    p_expand = sub.add_parser("expand", help="expand a product with a column factor")
    common(p_expand)
    p_expand.add_argument("--p", type=int, required=True, help="degree of the factor")
    p_expand.set_defaults(func=cmd_expand)

    p_monk = sub.add_parser("monk", help="expand the divisor-type product")
    common(p_monk, "--x")
    p_monk.set_defaults(func=cmd_monk)

    p_chains = sub.add_parser("chains", help="list chains with markings and ends")
    common(p_chains)
    p_chains.add_argument("--p", type=int, default=None, help="marking size (default k)")
    p_chains.set_defaults(func=cmd_chains)

    p_mark = sub.add_parser("markings", help="list (chain, marking) pairs")
    common(p_mark)
    p_mark.add_argument("--p", type=int, required=True, help="marking size")
    p_mark.set_defaults(func=cmd_markings)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("--suite", required=True, choices=SUITES)
    p_verify.add_argument("--max-n", type=int, default=None,
                          help="override the default universe bound")
    p_verify.add_argument("--format", choices=("text", "json"), default="text")
    p_verify.add_argument("--out", default=None)
    p_verify.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
