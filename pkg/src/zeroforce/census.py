"""Small-graph censuses, profile equivalence classes and the dominance poset."""

from __future__ import annotations

import csv
import enum
import io
import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import MixedOrders, ParseError, UseIngestion, ZeroForceError
from .forcing import ForcingProfile, forcing_profile, path_profile_formula
from .graph_core import Graph, from_edges, members, parse_graph6, permute, to_graph6

GENERATOR_LIMIT = 6


# -- canonical forms ---------------------------------------------------------


def refine_colors(G: Graph) -> list[int]:
    """Stable colouring by iterated degree refinement.

    Colours are ranks of sorted signatures, so isomorphic graphs get matching
    colour classes.
    """
    colors = G.degrees()
    ncolors = len(set(colors))
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in members(G.adj[v])))) for v in G.vertices()]
        rank = {s: k for k, s in enumerate(sorted(set(sigs)))}
        colors = [rank[s] for s in sigs]
        if len(rank) == ncolors:
            return colors
        ncolors = len(rank)


def _adjacency_key(G: Graph, inv: Sequence[int]) -> int:
    """Upper-triangle bits in graph6 order under the labelling ``new -> inv[new]``;
    the first bit is the most significant."""
    key = 0
    adj = G.adj
    for j in range(1, G.n):
        row = adj[inv[j]]
        for i in range(j):
            key = (key << 1) | (row >> inv[i] & 1)
    return key


def canonical_form(G: Graph) -> Graph:
    """Relabelling of ``G`` shared by every graph isomorphic to it.

    Vertices are ordered by refined colour; inside each colour class every
    ordering is tried and the smallest adjacency bit string wins.
    """
    if G.n <= 1:
        return G
    colors = refine_colors(G)
    cells = [[v for v in G.vertices() if colors[v] == c] for c in sorted(set(colors))]
    best_key = None
    best_inv = None
    for choice in itertools.product(*(itertools.permutations(c) for c in cells)):
        inv = [v for part in choice for v in part]
        key = _adjacency_key(G, inv)
        if best_key is None or key < best_key:
            best_key, best_inv = key, inv
    perm = [0] * G.n
    for new, old in enumerate(best_inv):
        perm[old] = new
    return permute(G, perm)


def canonical_key(G: Graph) -> bytes:
    return to_graph6(canonical_form(G))


def is_isomorphic(G: Graph, H: Graph) -> bool:
    if G.n != H.n or G.m != H.m or sorted(G.degrees()) != sorted(H.degrees()):
        return False
    return canonical_form(G) == canonical_form(H)


def _tree_code(G: Graph, root: int, parent: int) -> str:
    kids = sorted(_tree_code(G, u, root) for u in members(G.adj[root]) if u != parent)
    return "(" + "".join(kids) + ")"


def tree_centers(G: Graph) -> list[int]:
    alive = set(G.vertices())
    deg = {v: G.degree(v) for v in alive}
    layer = [v for v in alive if deg[v] <= 1]
    while len(alive) > 2:
        nxt = []
        for v in layer:
            alive.discard(v)
            for u in members(G.adj[v]):
                if u in alive:
                    deg[u] -= 1
                    if deg[u] == 1:
                        nxt.append(u)
        layer = nxt
    return sorted(alive)


def tree_code(G: Graph) -> str:
    """AHU canonical string of a tree, rooted at its centre(s)."""
    return min(_tree_code(G, c, -1) for c in tree_centers(G))


def _tree_from_code(code: str) -> Graph:
    edges = []
    stack: list[int] = []
    nxt = 0
    for ch in code:
        if ch == "(":
            if stack:
                edges.append((stack[-1], nxt))
            stack.append(nxt)
            nxt += 1
        else:
            stack.pop()
    return from_edges(nxt, edges)


# -- generation and ingestion -------------------------------------------------


def generate_all_graphs(n: int) -> list[Graph]:
    """One canonical representative per isomorphism class on ``n`` vertices.

    Built by adding a vertex with every possible neighbourhood to each class
    on ``n - 1`` vertices; larger orders have to be ingested from graph6.
    """
    if n > GENERATOR_LIMIT:
        raise UseIngestion(f"generation is limited to n <= {GENERATOR_LIMIT}; ingest a graph6 file instead")
    if n < 0:
        raise ValueError("n must be nonnegative")
    reps = {to_graph6(Graph(0, ())): Graph(0, ())}
    for k in range(1, n + 1):
        nxt = {}
        for G in reps.values():
            for nb in range(1 << G.n):
                adj = tuple(a | ((nb >> v & 1) << G.n) for v, a in enumerate(G.adj)) + (nb,)
                C = canonical_form(Graph(k, adj))
                nxt.setdefault(to_graph6(C), C)
        reps = nxt
    return [reps[key] for key in sorted(reps)]


def generate_trees(n: int) -> list[Graph]:
    """One representative per isomorphism class of trees on ``n`` vertices."""
    if n < 1:
        raise ValueError("trees need at least one vertex")
    codes = {"()"}
    for k in range(2, n + 1):
        nxt = set()
        for code in codes:
            T = _tree_from_code(code)
            for v in T.vertices():
                adj = tuple(a | ((v == u) << (k - 1)) for u, a in enumerate(T.adj)) + (1 << v,)
                nxt.add(tree_code(Graph(k, adj)))
        codes = nxt
    return [_tree_from_code(c) for c in sorted(codes)]


@dataclass
class IngestResult:
    graphs: list[Graph] = field(default_factory=list)
    lines: list[int] = field(default_factory=list)
    errors: list[ZeroForceError] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.errors


def ingest_graph6(lines: Iterable[str | bytes]) -> IngestResult:
    """Parse one graph6 string per nonempty line; bad lines are collected in
    ``errors`` with their line numbers and skipped."""
    result = IngestResult()
    for lineno, raw in enumerate(lines, 1):
        text = raw.strip()
        if not text:
            continue
        try:
            G = parse_graph6(text)
        except ParseError as exc:
            result.errors.append(ParseError(str(exc), lineno))
            continue
        except ZeroForceError as exc:
            err = type(exc)(f"line {lineno}: {exc}")
            err.line = lineno
            result.errors.append(err)
            continue
        result.graphs.append(G)
        result.lines.append(lineno)
    return result


# -- classes and dominance ---------------------------------------------------


@dataclass(frozen=True)
class EquivalenceClass:
    profile: ForcingProfile
    members: tuple[Graph, ...]


@dataclass(frozen=True)
class CensusRecord:
    canonical_key: bytes
    profile: ForcingProfile
    class_id: int


class Dominance(enum.Enum):
    LESS = "less"
    GREATER = "greater"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


def dominance(p: ForcingProfile, q: ForcingProfile) -> Dominance:
    if p.n != q.n:
        raise MixedOrders(f"profiles on {p.n} and {q.n} vertices")
    le = all(a <= b for a, b in zip(p.z, q.z))
    ge = all(a >= b for a, b in zip(p.z, q.z))
    if le and ge:
        return Dominance.EQUAL
    if le:
        return Dominance.LESS
    if ge:
        return Dominance.GREATER
    return Dominance.INCOMPARABLE


def leq(p: ForcingProfile, q: ForcingProfile) -> bool:
    return dominance(p, q) in (Dominance.LESS, Dominance.EQUAL)


def compute_profiles(graphs: Sequence[Graph], workers: int = 1) -> list[ForcingProfile]:
    if workers <= 1 or len(graphs) < 2:
        return [forcing_profile(G) for G in graphs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(forcing_profile, graphs, chunksize=max(1, len(graphs) // (4 * workers))))


def equivalence_classes(
    graphs: Sequence[Graph],
    profiles: Sequence[ForcingProfile] | None = None,
    workers: int = 1,
) -> list[EquivalenceClass]:
    """Group graphs by identical profile; classes come in lexicographic
    profile order, members in input order."""
    if len({G.n for G in graphs}) > 1:
        raise MixedOrders("all graphs in a census must have the same vertex count")
    if profiles is None:
        profiles = compute_profiles(graphs, workers)
    groups: dict[tuple[int, ...], list[Graph]] = {}
    by_z: dict[tuple[int, ...], ForcingProfile] = {}
    for G, p in zip(graphs, profiles):
        groups.setdefault(p.z, []).append(G)
        by_z[p.z] = p
    return [EquivalenceClass(by_z[z], tuple(groups[z])) for z in sorted(groups)]


def census(graphs: Sequence[Graph], workers: int = 1) -> tuple[list[CensusRecord], list[EquivalenceClass]]:
    profiles = compute_profiles(graphs, workers)
    classes = equivalence_classes(graphs, profiles)
    index = {c.profile.z: k for k, c in enumerate(classes)}
    records = [CensusRecord(canonical_key(G), p, index[p.z]) for G, p in zip(graphs, profiles)]
    return records, classes


def path_class_index(classes: Sequence[EquivalenceClass]) -> int | None:
    if not classes:
        return None
    target = path_profile_formula(classes[0].profile.n).z
    for k, c in enumerate(classes):
        if c.profile.z == target:
            return k
    return None


def poset_top(classes: Sequence[EquivalenceClass]) -> dict:
    """Whether the path class is the unique maximum of the given classes."""
    _same_order(classes)
    k = path_class_index(classes)
    if k is None:
        return {"path_class": None, "path_is_maximum": False, "path_class_singleton": False, "maximal": []}
    top = classes[k].profile
    maximal = [
        j for j, c in enumerate(classes)
        if not any(dominance(c.profile, d.profile) is Dominance.LESS for d in classes)
    ]
    is_max = all(leq(c.profile, top) for c in classes)
    return {
        "path_class": k,
        "path_is_maximum": is_max and maximal == [k],
        "path_class_singleton": len(classes[k].members) == 1,
        "maximal": maximal,
    }


def _leq_matrix(classes: Sequence[EquivalenceClass]) -> np.ndarray:
    Z = np.array([c.profile.z for c in classes], dtype=np.int64).reshape(len(classes), -1)
    return (Z[:, None, :] <= Z[None, :, :]).all(axis=2)


def hasse_edges(classes: Sequence[EquivalenceClass]) -> list[tuple[int, int]]:
    """Cover pairs ``(lo, hi)``: ``lo < hi`` with no class strictly between."""
    _same_order(classes)
    L = _leq_matrix(classes)
    less = L & ~L.T
    between = (less.astype(np.int64) @ less.astype(np.int64)) > 0
    cover = less & ~between
    return [(int(a), int(b)) for a, b in zip(*np.nonzero(cover))]


def coatoms_below_path(classes: Sequence[EquivalenceClass]) -> list[int]:
    k = path_class_index(classes)
    if k is None:
        return []
    return sorted(a for a, b in hasse_edges(classes) if b == k)


def below(classes: Sequence[EquivalenceClass], target: ForcingProfile) -> list[int]:
    """Indices of classes dominated by ``target`` (e.g. the cycle's profile)."""
    return [k for k, c in enumerate(classes) if leq(c.profile, target)]


def check_partial_order(classes: Sequence[EquivalenceClass]) -> dict[str, bool]:
    """Reflexivity, antisymmetry and transitivity of dominance on the classes,
    checked over every pair and triple through the boolean relation matrix."""
    _same_order(classes)
    L = _leq_matrix(classes)
    distinct = np.array([[p.profile.z != q.profile.z for q in classes] for p in classes], dtype=bool).reshape(L.shape)
    two_step = (L.astype(np.int64) @ L.astype(np.int64)) > 0
    return {
        "reflexive": bool(np.diag(L).all()),
        "antisymmetric": not bool((L & L.T & distinct).any()),
        "transitive": not bool((two_step & ~L).any()),
    }


def _same_order(classes: Sequence[EquivalenceClass]) -> None:
    if len({c.profile.n for c in classes}) > 1:
        raise MixedOrders("classes span different vertex counts")


# -- CSV / JSON --------------------------------------------------------------


def census_csv(records: Sequence[CensusRecord]) -> str:
    if not records:
        return "graph6,n,class_id\n"
    n = records[0].profile.n
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["graph6", "n"] + [f"z_{i}" for i in range(n + 1)] + ["class_id"])
    for r in records:
        w.writerow([r.canonical_key.decode("ascii"), n] + list(r.profile.z) + [r.class_id])
    return buf.getvalue()


def read_census_csv(text: str) -> list[tuple[Graph, ForcingProfile]]:
    rows = list(csv.DictReader(io.StringIO(text)))
    out = []
    for lineno, row in enumerate(rows, 2):
        try:
            n = int(row["n"])
            G = parse_graph6(row["graph6"])
            z = tuple(int(row[f"z_{i}"]) for i in range(n + 1))
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad census row: {exc}", lineno) from None
        if G.n != n:
            raise ParseError(f"graph6 has {G.n} vertices but n={n}", lineno)
        out.append((G, ForcingProfile(n, z)))
    return out


def poset_json(classes: Sequence[EquivalenceClass]) -> dict:
    top = poset_top(classes)
    return {
        "classes": [
            {
                "id": k,
                "profile": list(c.profile.z),
                "members": [to_graph6(G).decode("ascii") for G in c.members],
            }
            for k, c in enumerate(classes)
        ],
        "hasse": [list(e) for e in hasse_edges(classes)],
        "coatoms": coatoms_below_path(classes),
        **top,
    }
