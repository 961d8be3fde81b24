"""Command-line interface.

Subcommands: gen, collapse, morse111, embed, verify, tverberg.  Input
paths accept ``-`` for standard input.  Exit codes follow one contract:

    0  success (found / verified)
    1  a definite negative (not collapsible, not embedded, no partition)
    2  budget exhausted before a decision
    3  input error (malformed file, bad parameters)
"""

from __future__ import annotations

import argparse
import sys

from . import collapse as clp
from . import corpus, embed, formats, tverberg
from .embed import EmbedParams, EmbeddingError
from .geometry import DEGENERATE, NOT_EMBEDDED, verify_embedding

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_BUDGET = 2
EXIT_INPUT = 3


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _emit(text: str, output: str | None) -> None:
    if output is None or output == "-":
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_INPUT


def _params_from(args) -> EmbedParams:
    return EmbedParams(base=args.base, spread=args.spread, seed=args.seed,
                       max_escalations=args.max_escalations)


def cmd_gen(args) -> int:
    c = corpus.generate(args.name, args.params, seed=args.seed)
    _emit(formats.write_complex(c), args.output)
    return EXIT_OK


def cmd_collapse(args) -> int:
    c = formats.parse_complex(_read(args.complex))
    search = (clp.find_collapse_to_vertex if args.target == "vertex"
              else clp.find_collapse_to_cycle)
    outcome = search(c, budget=args.budget)
    if outcome.found:
        _emit(formats.write_sequence(outcome.sequence), args.output)
        return EXIT_OK
    print(f"{args.target}: {outcome.status}", file=sys.stderr)
    return EXIT_NEGATIVE if outcome.status == clp.NOT_FOUND else EXIT_BUDGET


def cmd_morse111(args) -> int:
    c = formats.parse_complex(_read(args.complex))
    outcome = clp.find_morse_111(c, budget=args.budget)
    if outcome.found:
        _emit(formats.write_morse_certificate(outcome.certificate), args.output)
        return EXIT_OK
    print(f"morse111: {outcome.status}", file=sys.stderr)
    return EXIT_NEGATIVE if outcome.status == clp.NOT_FOUND else EXIT_BUDGET


def cmd_embed(args) -> int:
    c = formats.parse_complex(_read(args.complex))
    params = _params_from(args)
    if args.mode == "collapsible":
        outcome = clp.find_collapse_to_vertex(c, budget=args.budget)
        if not outcome.found:
            print(f"collapse search: {outcome.status}", file=sys.stderr)
            return EXIT_NEGATIVE if outcome.status == clp.NOT_FOUND else EXIT_BUDGET
        build = lambda: embed.embed_collapsible(c, outcome.sequence, params)
    elif args.mode == "morse111":
        outcome = clp.find_morse_111(c, budget=args.budget)
        if not outcome.found:
            print(f"morse111 search: {outcome.status}", file=sys.stderr)
            return EXIT_NEGATIVE if outcome.status == clp.NOT_FOUND else EXIT_BUDGET
        build = lambda: embed.embed_morse111(c, outcome.certificate, params)
    else:
        build = lambda: embed.embed_generic(c, params)
    try:
        emb_map, _report = build()
    except EmbeddingError as exc:
        print(f"embedding: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    _emit(formats.write_embedding(emb_map), args.output)
    if args.plot:
        from .plot import render_embedding

        render_embedding(c, emb_map, args.plot)
    return EXIT_OK


def cmd_verify(args) -> int:
    c = formats.parse_complex(_read(args.complex))
    emb_map = formats.parse_embedding(_read(args.embedding))
    try:
        report = verify_embedding(c, emb_map)
    except ValueError as exc:
        return _fail(str(exc))
    lines = [f"verdict {report.verdict}"]
    if report.verdict == NOT_EMBEDDED:
        a, b = report.facet_pair
        lines.append("facets " + " ".join(map(str, a)) + " | " + " ".join(map(str, b)))
        lines.append("point " + " ".join(str(q) for q in report.point))
    elif report.verdict == DEGENERATE:
        lines.append("facet " + " ".join(map(str, report.facet)))
        lines.append("dependency " + " ".join(str(q) for q in report.dependency))
    _emit("\n".join(lines) + "\n", args.output)
    if args.plot:
        from .plot import render_embedding

        render_embedding(c, emb_map, args.plot, witness=report.point,
                         title=f"verdict: {report.verdict}")
    return EXIT_OK if report.embedded else EXIT_NEGATIVE


def cmd_tverberg(args) -> int:
    pts = formats.parse_points(_read(args.points))
    cert = tverberg.find_tverberg_partition(pts, args.parts, allow_large=args.force)
    if cert is None:
        print("no partition with intersecting hulls", file=sys.stderr)
        return EXIT_NEGATIVE
    _emit(formats.write_tverberg_certificate(cert), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--seed", type=int, default=0)
    shared.add_argument("--budget", type=int, default=clp.DEFAULT_BUDGET,
                        help="search node budget")
    shared.add_argument("--base", type=int, default=16,
                        help="separation base for tower coordinates")
    shared.add_argument("--spread", type=int, default=10_000,
                        help="range scale of the non-tower coordinates")
    shared.add_argument("--max-escalations", type=int, default=16)
    shared.add_argument("--output", "-o", default=None,
                        help="output path (default: stdout)")

    parser = argparse.ArgumentParser(
        prog="collembed",
        description="Collapsibility search, verified linear embeddings, "
                    "and certified Tverberg partitions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[shared], help="generate a corpus complex")
    p.add_argument("name", choices=sorted(corpus.GENERATORS))
    p.add_argument("params", nargs="*", type=int)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("collapse", parents=[shared],
                       help="search for a collapsing sequence")
    p.add_argument("complex")
    p.add_argument("--target", choices=["vertex", "cycle"], default="vertex")
    p.set_defaults(func=cmd_collapse)

    p = sub.add_parser("morse111", parents=[shared],
                       help="search for a critical triangle certificate")
    p.add_argument("complex")
    p.set_defaults(func=cmd_morse111)

    p = sub.add_parser("embed", parents=[shared],
                       help="build a verified linear embedding")
    p.add_argument("complex")
    p.add_argument("--mode", choices=["collapsible", "morse111", "generic"],
                   default="collapsible")
    p.add_argument("--plot", default=None,
                   help="also render the embedding to this image file")
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("verify", parents=[shared],
                       help="check an embedding file against a complex")
    p.add_argument("complex")
    p.add_argument("embedding")
    p.add_argument("--plot", default=None,
                   help="also render the embedding to this image file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("tverberg", parents=[shared],
                       help="find a certified Tverberg partition")
    p.add_argument("points")
    p.add_argument("-r", "--parts", type=int, required=True)
    p.add_argument("--force", action="store_true",
                   help="override the instance-size guard")
    p.set_defaults(func=cmd_tverberg)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FileNotFoundError as exc:
        return _fail(f"cannot read {exc.filename}")
    except formats.FormatError as exc:
        return _fail(str(exc))
    except ValueError as exc:
        return _fail(str(exc))


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
