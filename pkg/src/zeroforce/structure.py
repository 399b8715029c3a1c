"""Recognisers for leaves, simplicial vertices, hanging cycles and paths,
blocks, outerplanarity and threshold graphs."""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx

from .errors import TooLarge
from .graph_core import Graph, Step, members, popcount

OUTERPLANAR_LIMIT = 16


@dataclass(frozen=True)
class HangingCycle:
    """Cycle ``v, a_1, ..., a_k, w, v`` whose interior vertices have degree 2.

    ``anchor_edge`` is ``(v, w)`` with ``v`` adjacent to ``interior[0]``.
    """

    anchor_edge: tuple[int, int]
    interior: tuple[int, ...]

    def to_dict(self) -> dict:
        return {"anchor_edge": list(self.anchor_edge), "interior": list(self.interior)}


@dataclass(frozen=True)
class HangingPath:
    """Path ``a_1, ..., a_k`` hanging at ``anchor``: ``a_1`` is adjacent to the
    anchor, the inner vertices have degree 2 and ``a_k`` is a leaf."""

    anchor: int
    path: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.path)

    def to_dict(self) -> dict:
        return {"anchor": self.anchor, "path": list(self.path)}


@dataclass(frozen=True)
class BlockCutTree:
    blocks: tuple[tuple[int, ...], ...]
    cut_vertices: tuple[int, ...]
    tree_edges: tuple[tuple[int, int], ...]

    def to_dict(self) -> dict:
        return {
            "blocks": [list(b) for b in self.blocks],
            "cut_vertices": list(self.cut_vertices),
            "tree_edges": [list(e) for e in self.tree_edges],
        }


def leaves(G: Graph) -> list[int]:
    return [v for v in G.vertices() if G.degree(v) == 1]


def isolated_vertices(G: Graph) -> list[int]:
    return [v for v in G.vertices() if G.adj[v] == 0]


def is_clique(G: Graph, mask: int) -> bool:
    return all((G.adj[u] | (1 << u)) & mask == mask for u in members(mask))


def is_simplicial(G: Graph, v: int) -> bool:
    return is_clique(G, G.adj[v])


def simplicial_vertices(G: Graph) -> list[int]:
    return [v for v in G.vertices() if is_simplicial(G, v)]


def connected_components(G: Graph) -> list[list[int]]:
    seen = 0
    comps = []
    for s in G.vertices():
        if seen >> s & 1:
            continue
        comp = frontier = 1 << s
        while frontier:
            nxt = 0
            for v in members(frontier):
                nxt |= G.adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(members(comp))
    return comps


def is_connected(G: Graph) -> bool:
    return G.n > 0 and len(connected_components(G)) == 1


def is_tree(G: Graph) -> bool:
    return is_connected(G) and G.m == G.n - 1


def is_path(G: Graph) -> bool:
    """Whether ``G`` is a path on its ``n`` vertices (any labelling)."""
    if G.n == 1:
        return True
    degs = G.degrees()
    return is_tree(G) and max(degs) <= 2


def path_order(G: Graph) -> list[int]:
    """Vertices of a path graph in path order, starting at the smaller end."""
    if not is_path(G):
        raise ValueError("graph is not a path")
    if G.n == 1:
        return [0]
    start = min(v for v in G.vertices() if G.degree(v) == 1)
    order = [start]
    prev = -1
    cur = start
    while len(order) < G.n:
        nxt = next(u for u in members(G.adj[cur]) if u != prev)
        order.append(nxt)
        prev, cur = cur, nxt
    return order


# -- blocks ---------------------------------------------------------------


def block_cut_tree(G: Graph) -> BlockCutTree:
    """Biconnected decomposition by the Hopcroft-Tarjan low-point DFS.

    Bridges come out as two-vertex blocks and isolated vertices as one-vertex
    blocks. ``tree_edges`` holds ``(block index, cut vertex)`` incidences.
    """
    disc = [-1] * G.n
    low = [0] * G.n
    blocks: list[tuple[int, ...]] = []
    counter = 0
    for root in G.vertices():
        if disc[root] != -1:
            continue
        if G.adj[root] == 0:
            disc[root] = counter
            counter += 1
            blocks.append((root,))
            continue
        disc[root] = low[root] = counter
        counter += 1
        edge_stack: list[tuple[int, int]] = []
        stack = [(root, -1, iter(members(G.adj[root])))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for u in it:
                if disc[u] == -1:
                    edge_stack.append((v, u))
                    disc[u] = low[u] = counter
                    counter += 1
                    stack.append((u, v, iter(members(G.adj[u]))))
                    advanced = True
                    break
                if u != parent and disc[u] < disc[v]:
                    edge_stack.append((v, u))
                    low[v] = min(low[v], disc[u])
            if advanced:
                continue
            stack.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                verts = set()
                while True:
                    a, b = edge_stack.pop()
                    verts.update((a, b))
                    if (a, b) == (parent, v):
                        break
                blocks.append(tuple(sorted(verts)))
    blocks.sort()
    count = [0] * G.n
    for b in blocks:
        for v in b:
            count[v] += 1
    cuts = tuple(v for v in G.vertices() if count[v] >= 2)
    tree_edges = tuple((k, v) for k, b in enumerate(blocks) for v in b if count[v] >= 2)
    return BlockCutTree(tuple(blocks), cuts, tree_edges)


def is_biconnected(G: Graph) -> bool:
    if not is_connected(G) or G.n < 2:
        return False
    return len(block_cut_tree(G).blocks) == 1


# -- hanging structures ------------------------------------------------------


def _walk_degree_two(G: Graph, start: int, first: int):
    """Follow degree-2 vertices from ``first`` away from ``start``.

    Yields each visited vertex; the walk stops after a vertex whose degree is
    not 2 or when it comes back to ``start``.
    """
    prev, cur = start, first
    while True:
        yield cur
        if cur == start or G.degree(cur) != 2:
            return
        nxt = members(G.adj[cur] & ~(1 << prev))[0]
        prev, cur = cur, nxt


def hanging_cycles(G: Graph) -> list[HangingCycle]:
    """Every hanging cycle, one report per (anchor edge, interior) pair."""
    found = []
    for v, w in G.edges():
        for a1 in members(G.adj[v] & ~(1 << w)):
            interior = []
            for cur in _walk_degree_two(G, v, a1):
                if cur == w:
                    if interior:
                        found.append(HangingCycle((v, w), tuple(interior)))
                    break
                if cur == v or G.degree(cur) != 2:
                    break
                interior.append(cur)
    return found


def is_hanging_cycle(G: Graph, hc: HangingCycle) -> bool:
    v, w = hc.anchor_edge
    cyc = (v,) + hc.interior + (w,)
    if len(hc.interior) < 1 or len(set(cyc)) != len(cyc):
        return False
    if not all(0 <= x < G.n for x in cyc) or not G.has_edge(v, w):
        return False
    if not all(G.has_edge(a, b) for a, b in zip(cyc, cyc[1:])):
        return False
    return all(G.degree(a) == 2 for a in hc.interior)


def hanging_paths_at(G: Graph, v: int) -> list[HangingPath]:
    """All hanging paths at ``v``, one per neighbour that starts one."""
    out = []
    for a1 in members(G.adj[v]):
        path = []
        for cur in _walk_degree_two(G, v, a1):
            if cur == v:
                break
            path.append(cur)
            if G.degree(cur) == 1:
                out.append(HangingPath(v, tuple(path)))
                break
    return out


def hanging_paths(G: Graph) -> list[HangingPath]:
    """Maximal hanging paths, ordered by anchor.

    A hanging path at a degree-2 vertex extends through that vertex, so only
    anchors of degree other than 2 are reported.
    """
    out = []
    for v in G.vertices():
        if G.degree(v) != 2:
            out.extend(hanging_paths_at(G, v))
    return out


def is_hanging_path(G: Graph, hp: HangingPath) -> bool:
    p = hp.path
    if not p or hp.anchor in p or len(set(p)) != len(p):
        return False
    if not G.has_edge(hp.anchor, p[0]):
        return False
    if not all(G.has_edge(a, b) for a, b in zip(p, p[1:])):
        return False
    return all(G.degree(a) == 2 for a in p[:-1]) and G.degree(p[-1]) == 1


# -- outerplanarity and thresholdness ---------------------------------------


def to_networkx(G: Graph) -> nx.Graph:
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges())
    return H


def is_outerplanar(G: Graph, limit: int = OUTERPLANAR_LIMIT) -> bool:
    """A graph is outerplanar exactly when adding one vertex adjacent to all
    others leaves it planar."""
    if G.n > limit:
        raise TooLarge(f"outerplanarity recogniser is limited to n <= {limit}")
    H = to_networkx(G)
    H.add_edges_from(("apex", v) for v in range(G.n))
    planar, _ = nx.check_planarity(H)
    return planar


def is_threshold(G: Graph) -> list[Step] | None:
    """Creation sequence of ``G`` if it is a threshold graph, else ``None``.

    Peels an isolated vertex (preferred) or a dominating vertex off the
    remaining graph until one vertex is left.
    """
    if G.n < 1:
        raise ValueError("threshold recognition needs at least one vertex")
    alive = G.full
    peeled: list[Step] = []
    while popcount(alive) > 1:
        size = popcount(alive)
        pick = None
        for v in members(alive):
            if G.adj[v] & alive == 0:
                pick = (v, Step.ISOLATED)
                break
        if pick is None:
            for v in members(alive):
                if popcount(G.adj[v] & alive) == size - 1:
                    pick = (v, Step.CONE)
                    break
        if pick is None:
            return None
        alive &= ~(1 << pick[0])
        peeled.append(pick[1])
    return peeled[::-1]


def structure_report(G: Graph) -> dict:
    bct = block_cut_tree(G)
    try:
        outer = is_outerplanar(G)
    except TooLarge:
        outer = None
    thr = is_threshold(G) if G.n else None
    return {
        "n": G.n,
        "m": G.m,
        "leaves": leaves(G),
        "isolated": isolated_vertices(G),
        "simplicial": simplicial_vertices(G),
        "components": connected_components(G),
        "hanging_cycles": [h.to_dict() for h in hanging_cycles(G)],
        "hanging_paths": [h.to_dict() for h in hanging_paths(G)],
        "block_cut_tree": bct.to_dict(),
        "outerplanar": outer,
        "threshold": None if thr is None else "".join(s.value for s in thr),
    }
