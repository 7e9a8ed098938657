"""Command-line entry point.

Standard output carries only graph6 lines or one JSON object per line;
progress and errors go to standard error.  Exit codes: 0 success, 1 a
counterexample to an asserted claim, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from typing import Any, Sequence, TextIO

from . import constructions
from .enumeration import EnumFilter, count_classes, iter_graphs
from .graph import Graph, Graph6Error, to_graph6
from .harness import (
    compute_f,
    recheck_no_weak_vertex,
    scan_conjecture1,
    verify_lemma5,
    verify_lemma7,
    verify_theorem1,
    verify_theorem2,
    verify_theorem3,
    verify_theorem4,
)
from .spectrum import classify_pancyclicity

log = logging.getLogger("pancyclic")

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--jobs", type=int, default=os.cpu_count() or 1,
                        help="worker processes for enumeration (default: all cores)")
    common.add_argument("--format", choices=("json", "table"), default="json")
    common.add_argument("-v", "--verbose", action="store_true", help="progress on stderr")

    p = argparse.ArgumentParser(prog="pancyclic", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", parents=[common], help="cycle spectra of graph6 input")
    a.add_argument("--vertex-spectra", action="store_true",
                   help="include every vertex's cycle lengths")
    a.add_argument("file", nargs="?", default="-")

    c = sub.add_parser("construct", parents=[common], help="emit a named graph as graph6")
    c.add_argument("family", choices=("bt", "gn", "kst", "cycle"))
    c.add_argument("--n", type=int)
    c.add_argument("--s", type=int)
    c.add_argument("--t", type=int)
    c.add_argument("--k", type=int)

    e = sub.add_parser("enumerate", parents=[common], help="all graphs of an order, up to isomorphism")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--edges", metavar="MIN:MAX")
    e.add_argument("--nonbipartite", action="store_true")
    e.add_argument("--connected", action="store_true")
    mode = e.add_mutually_exclusive_group(required=True)
    mode.add_argument("--count", action="store_true")
    mode.add_argument("--emit", action="store_true")

    v = sub.add_parser("verify", parents=[common], help="exhaustively check a claim")
    v.add_argument("claim", choices=("thm1", "thm2", "thm3", "thm4", "lemma5", "lemma7"))
    v.add_argument("--n", type=int, required=True, help="order (for lemma7: half the order, k)")
    v.add_argument("--samples", type=int, help="lemma7 only: random samples instead of exhaustive")
    v.add_argument("--seed", type=int, default=0)

    f = sub.add_parser("search-f", parents=[common], help="compute f(n) by descending size scan")
    f.add_argument("--n", type=int, required=True)
    f.add_argument("--resume", metavar="DIR", help="checkpoint directory")

    cj = sub.add_parser("conjecture", parents=[common], help="scan for conjecture counterexamples")
    cj.add_argument("which", choices=("pancyclic-edge",))
    cj.add_argument("--n", type=int, required=True)
    return p


def _emit(obj: dict[str, Any], fmt: str, out: TextIO) -> None:
    if fmt == "json":
        out.write(json.dumps(obj) + "\n")
    else:
        out.write("  ".join(f"{k}={v}" for k, v in obj.items()) + "\n")


def _parse_edges(text: str | None, n: int) -> tuple[int, int | None]:
    if text is None:
        return 0, None
    try:
        lo, hi = text.split(":")
        return (int(lo) if lo else 0), (int(hi) if hi else None)
    except ValueError:
        raise UsageError(f"--edges expects MIN:MAX, got {text!r}") from None


def _read_graphs(path: str) -> list[Graph]:
    stream = sys.stdin if path == "-" else open(path, encoding="ascii")
    graphs = []
    try:
        for lineno, line in enumerate(stream, 1):
            if not line.strip():
                continue
            try:
                graphs.append(Graph.from_graph6(line))
            except (Graph6Error, ValueError) as exc:
                raise UsageError(f"line {lineno}: {exc}") from None
    finally:
        if stream is not sys.stdin:
            stream.close()
    return graphs


def _analyze(args: argparse.Namespace, out: TextIO) -> int:
    for G in _read_graphs(args.file):
        rep = classify_pancyclicity(G)
        obj: dict[str, Any] = {
            "graph6": to_graph6(G),
            "girth": rep.girth,
            "circumference": rep.circumference,
        }
        if args.vertex_spectra:
            obj["per_vertex_lengths"] = [
                sorted(rep.spectrum.vertex_lengths(v)) for v in range(G.order)
            ]
        obj["wp_vertices"] = sorted(rep.weakly_pancyclic_vertices)
        obj["pancyclic_vertices"] = sorted(rep.pancyclic_vertices)
        obj["pancyclic_edges"] = [list(e) for e in sorted(rep.pancyclic_edges)]
        _emit(obj, args.format, out)
    return EXIT_OK


def _construct(args: argparse.Namespace, out: TextIO) -> int:
    fam = args.family
    if fam in ("bt", "gn"):
        if args.n is None:
            raise UsageError(f"construct {fam} needs --n")
        G = constructions.bt(args.n) if fam == "bt" else constructions.gn(args.n)
    elif fam == "kst":
        if args.s is None or args.t is None:
            raise UsageError("construct kst needs --s and --t")
        G = constructions.complete_bipartite(args.s, args.t)
    else:
        k = args.k if args.k is not None else args.n
        if k is None:
            raise UsageError("construct cycle needs --k")
        G = constructions.cycle_graph(k)
    out.write(to_graph6(G) + "\n")
    return EXIT_OK


def _enumerate(args: argparse.Namespace, out: TextIO) -> int:
    lo, hi = _parse_edges(args.edges, args.n)
    filt = EnumFilter(args.n, lo, hi, args.nonbipartite, args.connected)
    if args.count:
        _emit({"n": args.n, "edges": [filt.size_min, filt.size_max],
               "count": count_classes(filt, args.jobs)}, args.format, out)
    else:
        for G in iter_graphs(filt, args.jobs):
            out.write(to_graph6(G) + "\n")
    return EXIT_OK


def _verify(args: argparse.Namespace, out: TextIO) -> int:
    if args.samples is not None and args.claim != "lemma7":
        raise UsageError("--samples applies to lemma7 only")
    if args.claim == "thm4":
        rep = verify_theorem4(args.n)
    elif args.claim == "lemma7":
        rep = verify_lemma7(args.n, args.samples, args.seed, args.jobs)
    else:
        fn = {"thm1": verify_theorem1, "thm2": verify_theorem2,
              "thm3": verify_theorem3, "lemma5": verify_lemma5}[args.claim]
        rep = fn(args.n, args.jobs)
    _emit(rep.to_json(), args.format, out)
    return EXIT_OK if rep.ok else EXIT_COUNTEREXAMPLE


def _search_f(args: argparse.Namespace, out: TextIO) -> int:
    rec = compute_f(args.n, args.jobs, args.resume)
    bad = [w for w in rec.witnesses if not recheck_no_weak_vertex(w)]
    if bad:
        log.error("witnesses failed standalone re-check: %s", bad)
        return EXIT_COUNTEREXAMPLE
    _emit(rec.to_json(), args.format, out)
    return EXIT_OK


def _conjecture(args: argparse.Namespace, out: TextIO) -> int:
    rep = scan_conjecture1(args.n, args.jobs)
    _emit(rep.to_json(), args.format, out)
    if rep.counterexamples:
        log.warning("order %d: %d graphs without a pancyclic edge", args.n,
                    len(rep.counterexamples))
    return EXIT_COUNTEREXAMPLE if rep.details["endpoint_violations"] else EXIT_OK


COMMANDS = {
    "analyze": _analyze,
    "construct": _construct,
    "enumerate": _enumerate,
    "verify": _verify,
    "search-f": _search_f,
    "conjecture": _conjecture,
}


def run(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out = sys.stdout if out is None else out
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    if args.jobs < 1:
        parser.print_usage(sys.stderr)
        print("pancyclic: error: --jobs must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        return COMMANDS[args.command](args, out)
    except (UsageError, ValueError, OSError) as exc:
        print(f"pancyclic: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
