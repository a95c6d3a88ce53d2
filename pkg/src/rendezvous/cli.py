"""Command-line front door for the workbench.

Data goes to stdout, errors to stderr prefixed with a machine-readable
category.  All outputs are deterministic functions of the flags.
"""

from __future__ import annotations

import argparse
import sys

from . import tables
from .automata import (
    DEFAULT_LETTER_CAP,
    associated_automaton,
    subset_bfs,
    verify_krt_equality,
    verify_sandwich,
)
from .boolmat import MatrixSet
from .bounds import build_witness, evaluate_escape, escape_lower, escape_upper
from .builtins import BUILTIN_NAMES, builtin_set
from .errors import WorkbenchError
from .heuristic import run_heuristic
from .pairgraph import check_primitivity
from .semigroup import DEFAULT_MAX_STATES, explore
from .setfile import parse_set_file

FIGURES = ("fig2a", "fig2b", "fig3", "fig4", "fig5", "fig6", "fig7", "fig8", "fig9")


def _add_set_source(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--builtin", choices=BUILTIN_NAMES, help="use a builtin set")
    group.add_argument(
        "--file",
        action="append",
        metavar="PATH",
        help="read a matrix set file (repeatable only for figure fig4)",
    )


def _add_limits(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--max-depth", type=int, default=None, help="BFS depth limit")
    parser.add_argument(
        "--max-states", type=int, default=DEFAULT_MAX_STATES, help="BFS state limit"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rendezvous",
        description="Exponents, k-rendezvous times and bound tables for "
        "primitive sets of NZ boolean matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="NZ / irreducibility / primitivity with certificate")
    _add_set_source(p)

    p = sub.add_parser("exponent", help="exact exponent by semigroup BFS")
    _add_set_source(p)
    _add_limits(p)

    p = sub.add_parser("krt", help="exact k-rendezvous profile by semigroup BFS")
    _add_set_source(p)
    _add_limits(p)
    p.add_argument("--k", type=int, default=None, help="report only this k")

    p = sub.add_parser("automata", help="associated automata analyses")
    p.add_argument(
        "action",
        choices=("construct", "rt", "krt", "sandwich", "krt-equality"),
    )
    _add_set_source(p)
    _add_limits(p)
    p.add_argument("--letter-cap", type=int, default=DEFAULT_LETTER_CAP)
    p.add_argument("--k", type=int, default=None, help="k for krt-equality")

    p = sub.add_parser("bounds", help="B/F/lift/escape/szykula bound table (CSV)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=None, help="single k")
    p.add_argument("--k-max", type=int, default=None, help="k range 2..k-max (default n)")
    p.add_argument("--ceil-variant", action="store_true", help="keep the ceiling in the growth steps")

    p = sub.add_parser("witness", help="build and verify an escape-count witness")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("heuristic", help="greedy column-growing trace")
    _add_set_source(p)
    p.add_argument("--mode", choices=("specific", "any"), default="specific")

    p = sub.add_parser("scan", help="bound-equality conjecture report (CSV)")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--k", type=int, default=None, help="single k")
    p.add_argument("--k-max", type=int, default=None, help="k range 2..k-max")

    p = sub.add_parser("figure", help="emit the CSV behind a named comparison table")
    p.add_argument("name", choices=FIGURES)
    _add_set_source(p)
    _add_limits(p)
    p.add_argument("--letter-cap", type=int, default=DEFAULT_LETTER_CAP)
    p.add_argument("--mode", choices=("specific", "any"), default="specific")
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--k-max", type=int, default=None)
    p.add_argument("--n-max", type=int, default=None)

    return parser


def _load_set(args, allow_multi: bool = False) -> MatrixSet | list[MatrixSet]:
    files = getattr(args, "file", None)
    name = getattr(args, "builtin", None)
    if files:
        sets = [parse_set_file(path) for path in files]
        if allow_multi:
            return sets
        if len(sets) > 1:
            raise ValueError("only figure fig4 accepts multiple --file arguments")
        return sets[0]
    return builtin_set(name or "example")


def _word_labels(mset_or_labels, word) -> str:
    labels = getattr(mset_or_labels, "labels", mset_or_labels)
    return ",".join(labels[i] for i in word) if word else "-"


def _bool(flag: bool) -> str:
    return "true" if flag else "false"


def _cmd_check(args) -> int:
    mset = _load_set(args)
    defect = mset.first_non_nz()
    if defect is None:
        print("nz: true")
    else:
        g_idx, kind, index = defect
        print(f"nz: false (generator {mset.labels[g_idx]} has zero {kind} {index})")
    print(f"irreducible: {_bool(mset.is_irreducible())}")
    if defect is not None:
        print("primitive: skipped (requires NZ generators)")
        return 0
    report = check_primitivity(mset)
    print(f"primitive: {_bool(report.primitive)}")
    if not report.primitive:
        print(f"certificate: {report.describe()}")
    return 0


def _cmd_exponent(args) -> int:
    mset = _load_set(args)
    result = explore(mset, max_depth=args.max_depth, max_states=args.max_states)
    if result.exponent is None:
        reason = result.limit or "semigroup exhausted"
        print(f"not-found ({reason}; explored={result.explored}, depth={result.depth_reached})")
    else:
        print(result.exponent.length)
    return 0


def _cmd_krt(args) -> int:
    mset = _load_set(args)
    if args.k is not None and not 2 <= args.k <= mset.n:
        raise ValueError(f"--k must be in [2, {mset.n}], got {args.k}")
    # A single-k query never needs the exponent, so stop at the profile.
    result = explore(
        mset,
        max_depth=args.max_depth,
        max_states=args.max_states,
        stop_after_profile=args.k is not None,
    )
    ks = [args.k] if args.k is not None else list(range(2, mset.n + 1))
    for k in ks:
        entry = result.krt.get(k)
        if entry is None:
            print(f"k={k} rt=not-found")
        else:
            print(f"k={k} rt={entry.length} word={_word_labels(mset, entry.word)}")
    if args.k is None:
        if result.exponent is None:
            print("exponent=not-found")
        else:
            print(
                f"exponent={result.exponent.length} "
                f"word={_word_labels(mset, result.exponent.word)}"
            )
    return 0


def _print_automaton(title: str, aut) -> None:
    print(f"{title}: {aut.m} letters")
    for label, letter in zip(aut.labels, aut.letters):
        print(f"# {label}")
        for line in letter.to_lines():
            print(line)


def _cmd_automata(args) -> int:
    mset = _load_set(args)
    cap = args.letter_cap
    if args.action == "construct":
        _print_automaton("aut", associated_automaton(mset, cap))
        _print_automaton("aut_T", associated_automaton(mset.transposed(), cap))
        return 0
    if args.action == "rt":
        for title, source in (("aut", mset), ("aut_T", mset.transposed())):
            aut = associated_automaton(source, cap)
            res = subset_bfs(aut)
            if res.reset is None:
                print(f"{title}: not-synchronizing")
            else:
                print(
                    f"{title}: rt={res.reset.length} "
                    f"word={_word_labels(aut, res.reset.word)}"
                )
        return 0
    if args.action == "krt":
        print(tables.to_csv(tables.LONG_HEADER, tables.automata_krt_rows(mset, cap)), end="")
        return 0
    if args.action == "sandwich":
        report = verify_sandwich(
            mset, cap=cap, max_depth=args.max_depth, max_states=args.max_states
        )
        print(f"rt_aut={report.rt_aut}")
        print(f"exponent={report.exponent}")
        print(f"rt_aut_T={report.rt_aut_transpose}")
        print(f"upper={report.upper}")
        print(f"lower_ok={_bool(report.lower_ok)}")
        print(f"upper_ok={_bool(report.upper_ok)}")
        print(f"tight={_bool(report.tight)}")
        return 0
    if args.k is None:
        raise ValueError("krt-equality needs --k")
    report = verify_krt_equality(
        mset, args.k, cap=cap, max_depth=args.max_depth, max_states=args.max_states
    )
    print(f"k={report.k}")
    print(f"rt_set={report.rt_set}")
    print(f"rt_aut={report.rt_aut}")
    print(f"rt_aut_T={report.rt_aut_transpose}")
    print(f"equal={_bool(report.equal)}")
    return 0


def _cmd_bounds(args) -> int:
    if args.k is not None and args.k_max is not None:
        raise ValueError("give either --k or --k-max, not both")
    if args.k is not None:
        ks = [args.k]
    else:
        ks = list(range(2, (args.k_max or args.n) + 1))
    print(
        tables.to_csv(tables.LONG_HEADER, tables.bounds_rows(args.n, ks, args.ceil_variant)),
        end="",
    )
    return 0


def _cmd_witness(args) -> int:
    witness = build_witness(args.n, args.k)
    evaluation = evaluate_escape(witness.matrix, args.k)
    lower = escape_lower(args.n, args.k)
    upper = escape_upper(args.n, args.k)
    verified = (
        evaluation.member
        and evaluation.value == witness.claimed == upper
        and lower <= evaluation.value
    )
    print(f"n={args.n} k={args.k}")
    print(f"kind={witness.kind}")
    print(f"lower={lower}")
    print(f"upper={upper}")
    print(f"claimed={witness.claimed}")
    print(f"evaluated={evaluation.value}")
    print(f"member={_bool(evaluation.member)}")
    print(f"verified={_bool(verified)}")
    for line in witness.matrix.to_lines():
        print(line)
    return 0 if verified else 1


def _cmd_heuristic(args) -> int:
    mset = _load_set(args)
    trace = run_heuristic(mset, mode=args.mode)
    print(f"mode={trace.mode}")
    print(f"column={trace.column_index}")
    print(f"length={trace.length}")
    print(f"word={_word_labels(mset, trace.word)}")
    for k in range(2, mset.n + 1):
        print(f"k={k} length={trace.per_k_length[k]}")
    return 0


def _cmd_scan(args) -> int:
    if args.k is not None and args.k_max is not None:
        raise ValueError("give either --k or --k-max, not both")
    if args.k is not None:
        ks = [args.k]
    else:
        ks = list(range(2, (args.k_max or args.n_max) + 1))
    rows = tables.scan_rows(range(2, args.n_max + 1), ks)
    print(tables.to_csv(tables.LONG_HEADER, rows), end="")
    return 0


def _cmd_figure(args) -> int:
    name = args.name
    mode = args.mode
    header = tables.LONG_HEADER
    if name == "fig2a":
        rows = tables.rt_vs_bounds_rows(
            builtin_set("cpr"), False, args.max_depth, args.max_states
        )
    elif name == "fig2b":
        rows = tables.rt_vs_bounds_rows(
            builtin_set("kari"), False, args.max_depth, args.max_states
        )
    elif name == "fig5":
        rows = tables.rt_vs_bounds_rows(
            _load_set(args), True, args.max_depth, args.max_states
        )
    elif name == "fig3":
        rows = tables.heuristic_vs_bounds_rows(_require_file(args), False, mode)
    elif name == "fig6":
        rows = tables.heuristic_vs_bounds_rows(_require_file(args), True, mode)
    elif name == "fig4":
        sets = _load_set(args, allow_multi=True)
        if not isinstance(sets, list):
            raise ValueError("figure fig4 needs at least one --file")
        k = args.k if args.k is not None else 4
        rows = []
        for mset in sets:
            rows.extend(tables.heuristic_vs_bounds_rows(mset, False, mode, only_k=k))
    elif name == "fig7":
        if args.k is None:
            raise ValueError("figure fig7 needs --k")
        rows = tables.fixed_k_bound_rows(args.k, args.n_max or 200)
    elif name == "fig8":
        rows = tables.threshold_rows(7, args.k_max or 50, args.n_max or 300)
    else:  # fig9
        header = tables.FIG9_HEADER
        rows = tables.nrt_comparison_rows(args.n_max or 100)
    print(tables.to_csv(header, rows), end="")
    return 0


def _require_file(args) -> MatrixSet:
    if not getattr(args, "file", None):
        raise ValueError("this figure needs a matrix set via --file")
    return _load_set(args)


_COMMANDS = {
    "check": _cmd_check,
    "exponent": _cmd_exponent,
    "krt": _cmd_krt,
    "automata": _cmd_automata,
    "bounds": _cmd_bounds,
    "witness": _cmd_witness,
    "heuristic": _cmd_heuristic,
    "scan": _cmd_scan,
    "figure": _cmd_figure,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except WorkbenchError as exc:
        print(f"{exc.category}: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"domain: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
