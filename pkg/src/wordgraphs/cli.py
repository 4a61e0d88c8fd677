"""Command-line interface.

Predicate-style commands answer through their exit status so the tool
composes in shell pipelines: 0 for success or a true predicate, 1 for a
false predicate, 2 for usage or input errors, 3 for a verification
mismatch.  All output is machine-parseable; nothing is written to stderr
on success.
"""

from __future__ import annotations

import argparse
import sys

from .connectivity import (
    bridges,
    edge_connectivity,
    scc_decomposition,
    weakly_connected,
)
from .counting import (
    DEFAULT_CAP,
    CountTable,
    csv_lines,
    scc_histogram,
    strong_partition_count,
    strong_word_count,
)
from .factorization import finest_disjoint_factorization
from .graphs import build_graph, from_json, letter_labeled, to_dot, to_json
from .represent import NotRepresentableError, representational_walk
from .verify import run_verification
from .words import parse_word, symbol_name


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wordgraphs",
        description="Build and analyze the digraphs encoded by words.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="render a word's graph")
    p.add_argument("word")
    p.add_argument("--format", choices=["dot", "json"], default="dot")

    p = sub.add_parser("check", help="connectivity report for a word (exit 0 iff strong)")
    p.add_argument("word")
    p.add_argument("--verbose", action="store_true")

    p = sub.add_parser("count", help="count strongly connected words")
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--alphabet", type=int, required=True)
    p.add_argument(
        "--partitions",
        action="store_true",
        help="count canonical words (one per partition) instead of labeled words",
    )

    p = sub.add_parser("table", help="CSV table of counts")
    p.add_argument("--max-length", type=int, required=True)
    p.add_argument("--max-alphabet", type=int, required=True)
    p.add_argument("--out", help="write CSV here instead of standard output")

    p = sub.add_parser("verify", help="exhaustive identity checks (exit 3 on mismatch)")
    p.add_argument("--max-length", type=int, required=True)
    p.add_argument("--max-alphabet", type=int)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--verbose", action="store_true")
    # Fault-injection hook for testing the harness itself; not for users.
    p.add_argument("--seed-count", metavar="L:N:VALUE", help=argparse.SUPPRESS)

    p = sub.add_parser("represent", help="synthesize a word for a digraph (exit 1 if none)")
    p.add_argument("--input", required=True, help="path to a JSON digraph")

    p = sub.add_parser("histogram", help="words per strong-component count")
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--alphabet", type=int, required=True)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)

    return parser


def _format_factor(letters: tuple[int, ...], alphabet_size: int) -> str:
    if alphabet_size <= 26:
        return "".join(symbol_name(c, alphabet_size) for c in letters)
    return ",".join(str(c) for c in letters)


def _cmd_build(args) -> int:
    graph = letter_labeled(build_graph(parse_word(args.word)))
    if args.format == "dot":
        sys.stdout.write(to_dot(graph))
    else:
        print(to_json(graph))
    return 0


def _cmd_check(args) -> int:
    word = parse_word(args.word)
    graph = build_graph(word)
    decomp = scc_decomposition(graph)
    strong = decomp.count == 1
    cut = edge_connectivity(graph)
    factorization = finest_disjoint_factorization(word)
    n = word.alphabet_size
    bridge_text = ";".join(
        f"{symbol_name(u, n)}->{symbol_name(v, n)}" for u, v in bridges(graph)
    )
    print(f"word={word.text()}")
    print(f"strong={'true' if strong else 'false'}")
    print(f"weak={'true' if weakly_connected(graph) else 'false'}")
    print(f"lambda={'n/a' if cut is None else cut}")
    print(f"bridges={bridge_text}")
    print("factors=" + "|".join(_format_factor(f, n) for f in factorization.factors))
    print(f"k={factorization.cardinality}")
    print(f"sccs={decomp.count}")
    if args.verbose:
        if strong:
            print("# every symbol can reach every other symbol")
        else:
            print(
                f"# the word splits into {factorization.cardinality} "
                "alphabet-disjoint factors, one per strong component"
            )
    return 0 if strong else 1


def _cmd_count(args) -> int:
    if args.length < 1 or args.alphabet < 1:
        raise ValueError("length and alphabet must be at least 1")
    if args.partitions:
        print(strong_partition_count(args.length, args.alphabet))
    else:
        print(strong_word_count(args.length, args.alphabet))
    return 0


def _cmd_table(args) -> int:
    lines = csv_lines(args.max_length, args.max_alphabet)
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="ascii") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_verify(args) -> int:
    table = CountTable()
    if args.seed_count:
        length, alphabet, value = (int(part) for part in args.seed_count.split(":"))
        table.seed_strong_count(length, alphabet, value)
    report = run_verification(
        args.max_length, args.max_alphabet, cap=args.cap, table=table
    )
    for line in report.lines:
        print(line)
    print(f"result={'pass' if report.passed else 'fail'}")
    if args.verbose:
        if report.passed:
            print(f"# all identities hold exhaustively up to length {args.max_length}")
        else:
            print("# first counterexample reported above")
    return 0 if report.passed else 3


def _cmd_represent(args) -> int:
    with open(args.input, encoding="utf-8") as handle:
        graph = from_json(handle.read())
    try:
        walk = representational_walk(graph)
    except NotRepresentableError:
        print("not representable")
        return 1
    if all(len(label) == 1 for label in walk):
        print("".join(walk))
    else:
        print(",".join(walk))
    return 0


def _cmd_histogram(args) -> int:
    for k, count in scc_histogram(args.length, args.alphabet, cap=args.cap).items():
        print(f"{k},{count}")
    return 0


_HANDLERS = {
    "build": _cmd_build,
    "check": _cmd_check,
    "count": _cmd_count,
    "table": _cmd_table,
    "verify": _cmd_verify,
    "represent": _cmd_represent,
    "histogram": _cmd_histogram,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return _HANDLERS[args.command](args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
