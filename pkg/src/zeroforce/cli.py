"""Command-line front end: ``zeroforce <subcommand> ...``.

Graphs are given as a GraphSpec:

* a family literal ``P<n>``, ``C<n>``, ``K<n>`` or ``S<n>`` (path, cycle,
  complete graph, star on ``n`` vertices with centre 0);
* a threshold creation string over ``i`` (isolated) and ``c`` (cone), e.g.
  ``icci``, starting from one vertex;
* ``--edges FILE`` for an edge list (``n m`` header, then ``u v`` lines);
* ``--g6 FILE [--index K]`` for line ``K`` (0-based) of a graph6 file.

Exit codes: 0 when every check passed, 1 when a mathematical check failed
(the report is still printed), 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from . import census, lemma_lab, structure
from .errors import ZeroForceError
from .forcing import find_fort_upto, fort_criterion_applies, forcing_profile, zero_forcing_number
from .graph_core import (
    Graph,
    family,
    parse_edge_list,
    parse_graph6,
    threshold_from_sequence,
)
from .structure import HangingCycle, HangingPath

FAMILY_RE = re.compile(r"^[PCKS][0-9]+$")
THRESHOLD_RE = re.compile(r"^[ic]+$")
FAMILIES = {"P": "path", "C": "cycle", "K": "complete", "S": "star"}
LEMMA_IDS = (
    "leaf",
    "hanging-cycle",
    "simplicial",
    "cone",
    "hanging-paths",
    "tree-strict",
    "wedge-cycle-path",
    "path-union",
)


class UsageError(Exception):
    pass


def resolve_graph(args: argparse.Namespace) -> Graph:
    sources = [x is not None for x in (args.graph, args.edges, args.g6)]
    if sum(sources) != 1:
        raise UsageError("give exactly one of: a family/threshold literal, --edges FILE, --g6 FILE")
    if args.graph is not None:
        spec = args.graph
        if FAMILY_RE.match(spec):
            return family(FAMILIES[spec[0]], int(spec[1:]))
        if THRESHOLD_RE.match(spec):
            return threshold_from_sequence(spec)
        raise UsageError(f"malformed graph spec {spec!r}: expected e.g. P10, C8, K5, S4 or icci")
    if args.edges is not None:
        return parse_edge_list(_read(args.edges))
    lines = [ln for ln in _read(args.g6).splitlines() if ln.strip()]
    k = args.index or 0
    if not 0 <= k < len(lines):
        raise UsageError(f"--index {k} out of range: file has {len(lines)} graphs")
    return parse_graph6(lines[k].strip())


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _ints(text: str | None) -> list[int]:
    if not text:
        return []
    return [int(x) for x in re.split(r"[,\s]+", text.strip()) if x]


def _pairs(text: str | None) -> list[tuple[int, int]]:
    out = []
    for tok in (text or "").replace(",", " ").split():
        a, _, b = tok.partition("-")
        out.append((int(a), int(b)))
    return out


def emit(args: argparse.Namespace, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def emit_report(args: argparse.Namespace, rep: lemma_lab.LemmaReport) -> int:
    emit(args, rep.to_dict(), rep.table())
    return 0 if rep.passed else 1


# -- subcommands ------------------------------------------------------------


def cmd_poly(args) -> int:
    G = resolve_graph(args)
    p = forcing_profile(G, workers=args.workers, limit=args.limit)
    text = "z: " + " ".join(map(str, p.z)) + "\nz': " + " ".join(map(str, p.zprimes))
    emit(args, {**p.to_dict(), "zprime": list(p.zprimes)}, text)
    return 0


def cmd_check(args) -> int:
    G = resolve_graph(args)
    return emit_report(args, lemma_lab.check_conjecture(G, limit=args.limit))


def cmd_fort(args) -> int:
    G = resolve_graph(args)
    if args.criterion:
        ok = fort_criterion_applies(G, args.limit)
        z = zero_forcing_number(G, args.limit)
        emit(args, {"criterion_applies": ok, "zero_forcing_number": z},
             f"fort of size <= z+1 = {z + 1}: {'yes' if ok else 'no'}")
        return 0 if ok else 1
    bound = args.bound if args.bound is not None else G.n
    F = find_fort_upto(G, bound)
    verts = None if F is None else F.vertices
    emit(args, {"bound": bound, "fort": verts},
         f"minimum fort (size <= {bound}): {verts if verts is not None else 'none'}")
    return 0


def cmd_structure(args) -> int:
    G = resolve_graph(args)
    rep = structure.structure_report(G)
    lines = [f"{k}: {v}" for k, v in rep.items()]
    emit(args, rep, "\n".join(lines))
    return 0


def _lemma(args) -> lemma_lab.LemmaReport:
    lid = args.lemma_id
    if lid == "path-union":
        if args.m is None or args.n is None:
            raise UsageError("path-union needs --m and --n")
        return lemma_lab.verify_path_union(args.m, args.n)
    G = resolve_graph(args)
    if lid == "leaf":
        x = args.vertex if args.vertex is not None else _first(structure.leaves(G), "the graph has no leaf")
        return lemma_lab.verify_leaf_lemma(G, x)
    if lid == "hanging-cycle":
        if args.anchor:
            v, w = _ints(args.anchor)
            hc = HangingCycle((v, w), tuple(_ints(args.interior)))
        else:
            hc = _first(structure.hanging_cycles(G), "the graph has no hanging cycle")
        return lemma_lab.verify_hanging_cycle(G, hc)
    if lid == "simplicial":
        s = args.vertex if args.vertex is not None else _first(
            [v for v in structure.simplicial_vertices(G) if G.degree(v) >= 2], "no simplicial vertex of degree >= 2"
        )
        return lemma_lab.verify_simplicial(G, s, _pairs(args.remove))
    if lid == "cone":
        return lemma_lab.verify_cone_lemma(G)
    if lid == "hanging-paths":
        if args.A and args.B:
            if args.vertex is None:
                raise UsageError("--A/--B need --vertex")
            A = HangingPath(args.vertex, tuple(_ints(args.A)))
            B = HangingPath(args.vertex, tuple(_ints(args.B)))
            return lemma_lab.verify_hanging_paths_injection(G, args.vertex, A, B)
        pick = lemma_lab._vertex_with_two_paths(G) if args.vertex is None else None
        if args.vertex is not None:
            paths = structure.hanging_paths_at(G, args.vertex)
            if len(paths) < 2:
                raise UsageError(f"vertex {args.vertex} has fewer than two hanging paths")
            pick = (args.vertex, paths[0], paths[1])
        if pick is None:
            raise UsageError("no vertex has two hanging paths")
        return lemma_lab.verify_hanging_paths_injection(G, *pick)
    if lid == "tree-strict":
        return lemma_lab.verify_tree_strict(G)
    if lid == "wedge-cycle-path":
        if args.length is None:
            raise UsageError("wedge-cycle-path needs --length")
        return lemma_lab.verify_wedge_cycle_vs_path(G, args.vertex or 0, args.length)
    raise UsageError(f"unknown lemma id {lid!r}")


def _first(items, message):
    if not items:
        raise UsageError(message)
    return items[0]


def cmd_lemma(args) -> int:
    return emit_report(args, _lemma(args))


def cmd_spantree(args) -> int:
    G = resolve_graph(args)
    rep = lemma_lab.spanning_tree_dominance(G)
    if args.json:
        print(json.dumps(rep.to_dict(), indent=2, sort_keys=True))
    else:
        trees = rep.details["trees"]
        print(f"profile: {' '.join(map(str, rep.details['profile']))}")
        for t in trees:
            verdict = "dominates" if t["dominates"] else f"fails at i = {t['failing_i']}"
            print(f"  tree {t['edges']}: {verdict}")
        if rep.passed:
            print("a dominating spanning tree exists")
        else:
            print("no dominating spanning tree")
    return 0 if rep.passed else 1


def cmd_census(args) -> int:
    if (args.n is None) == (args.infile is None):
        raise UsageError("give either n or --in FILE")
    if args.infile is not None:
        res = census.ingest_graph6(_read(args.infile).splitlines())
        for err in res.errors:
            print(f"{args.infile}: {err}", file=sys.stderr)
        if res.errors:
            return 2
        graphs = res.graphs
    else:
        graphs = census.generate_all_graphs(args.n)
    records, classes = census.census(graphs, workers=args.workers)
    text = census.census_csv(records)
    if args.out:
        Path(args.out).write_text(text)
        print(f"{len(records)} graphs, {len(classes)} classes -> {args.out}")
    else:
        sys.stdout.write(text)
    return 0


def cmd_poset(args) -> int:
    rows = census.read_census_csv(_read(args.csv))
    classes = census.equivalence_classes([g for g, _ in rows], [p for _, p in rows])
    top = census.poset_top(classes)
    order = census.check_partial_order(classes)
    payload = {
        **top,
        "partial_order": order,
        "coatoms_below_path": census.coatoms_below_path(classes),
        "hasse": census.poset_json(classes),
    }
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(f"classes: {len(classes)}")
        print(f"path class: {top['path_class']}")
        print(f"path is unique maximum: {top['path_is_maximum']}")
        print(f"path class is a singleton: {top['path_class_singleton']}")
        print(f"coatoms below path: {payload['coatoms_below_path']}")
        print(f"partial order: {all(order.values())}")
    ok = top["path_is_maximum"] and top["path_class_singleton"] and all(order.values())
    return 0 if ok else 1


# -- parser -------------------------------------------------------------------


def add_graph_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("graph", nargs="?", help="family literal (P10, C8, K5, S4) or threshold string (icci)")
    p.add_argument("--edges", metavar="FILE", help="edge-list file")
    p.add_argument("--g6", metavar="FILE", help="graph6 file")
    p.add_argument("--index", type=int, default=None, help="0-based line in the graph6 file")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--workers", type=int, default=1, help="worker processes for enumeration")
    common.add_argument("--limit", type=int, default=None, help="override the enumeration cap on n")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized sweeps")

    graph = argparse.ArgumentParser(add_help=False)
    add_graph_args(graph)

    p = argparse.ArgumentParser(
        prog="zeroforce",
        description="Exact zero forcing counts and checks of the path-domination bounds.",
        epilog=__doc__.split("\n\n", 1)[1],
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("poly", parents=[common, graph], help="forcing-set counts z(G;i)")
    sp.set_defaults(func=cmd_poly)
    sp = sub.add_parser("check", parents=[common, graph], help="compare with the path counts")
    sp.set_defaults(func=cmd_check)
    sp = sub.add_parser("fort", parents=[common, graph], help="minimum fort up to a size bound")
    sp.add_argument("--bound", type=int, default=None)
    sp.add_argument("--criterion", action="store_true", help="is there a fort of size <= z(G)+1")
    sp.set_defaults(func=cmd_fort)
    sp = sub.add_parser("structure", parents=[common, graph], help="structural features")
    sp.set_defaults(func=cmd_structure)

    sp = sub.add_parser("lemma", parents=[common], help="run one lemma verifier")
    sp.add_argument("lemma_id", choices=LEMMA_IDS)
    add_graph_args(sp)
    sp.add_argument("--vertex", type=int, default=None, help="leaf, simplicial vertex, anchor or wedge vertex")
    sp.add_argument("--anchor", help="hanging-cycle anchor edge as 'v,w'")
    sp.add_argument("--interior", help="hanging-cycle interior as 'a,b,...'")
    sp.add_argument("--remove", help="simplicial: edges to delete, e.g. '1-2,2-3'")
    sp.add_argument("--A", help="hanging-paths: first path 'a1,a2,...'")
    sp.add_argument("--B", help="hanging-paths: second path 'b1,b2,...'")
    sp.add_argument("--length", type=int, help="wedge-cycle-path: cycle/path length")
    sp.add_argument("--m", type=int, help="path-union: first path order")
    sp.add_argument("--n", type=int, help="path-union: second path order")
    sp.set_defaults(func=cmd_lemma)

    sp = sub.add_parser("spantree", parents=[common, graph], help="look for a dominating spanning tree")
    sp.set_defaults(func=cmd_spantree)
    sp = sub.add_parser("census", parents=[common], help="profiles and classes as CSV")
    sp.add_argument("n", nargs="?", type=int, help="generate all graphs on n <= 6 vertices")
    sp.add_argument("--in", dest="infile", metavar="FILE", help="graph6 file to ingest")
    sp.add_argument("--out", metavar="FILE")
    sp.set_defaults(func=cmd_census)
    sp = sub.add_parser("poset", parents=[common], help="dominance poset from a census CSV")
    sp.add_argument("csv")
    sp.set_defaults(func=cmd_poset)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    if args.workers < 1:
        print("zeroforce: --workers must be at least 1", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (UsageError, ZeroForceError, ValueError) as exc:
        print(f"zeroforce: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
