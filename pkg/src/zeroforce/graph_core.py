"""Immutable simple graphs on vertices 0..n-1 with bitmask adjacency.

A vertex set is a plain ``int`` whose bit ``v`` is set when ``v`` belongs to
the set. Every operation returns a new :class:`Graph`.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import (
    DuplicateEdge,
    InvalidEdge,
    InvalidOrder,
    InvalidVertex,
    MissingEdge,
    ParseError,
    Unsupported,
)

MAX_ORDER = 62


def vset(vertices: Iterable[int]) -> int:
    """Bit mask of an iterable of vertex labels."""
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: int) -> list[int]:
    """Vertex labels of a mask, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if __debug__:
            _check_invariants(self.n, self.adj)

    # -- basic queries -----------------------------------------------------

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return sum(popcount(a) for a in self.adj) // 2

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in members(self.adj[u] >> (u + 1) << (u + 1))]

    def neighbors(self, v: int) -> list[int]:
        return members(self.adj[v])

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [popcount(a) for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise InvalidVertex(f"vertex {v} out of range for n={self.n}")

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def _check_invariants(n: int, adj: tuple[int, ...]) -> None:
    if n < 0 or n > MAX_ORDER:
        raise InvalidOrder(f"vertex count {n} outside 0..{MAX_ORDER}")
    if len(adj) != n:
        raise InvalidOrder(f"adjacency has {len(adj)} rows for n={n}")
    full = (1 << n) - 1
    for v, a in enumerate(adj):
        if a & ~full:
            raise InvalidEdge(f"vertex {v} has neighbours outside 0..{n - 1}")
        if a >> v & 1:
            raise InvalidEdge(f"self-loop at {v}")
        for u in members(a):
            if not adj[u] >> v & 1:
                raise InvalidEdge(f"asymmetric adjacency between {v} and {u}")


# -- constructors -------------------------------------------------------------


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if n < 0 or n > MAX_ORDER:
        raise InvalidOrder(f"vertex count {n} outside 0..{MAX_ORDER}")
    adj = [0] * n
    for u, v in edges:
        if u == v:
            raise InvalidEdge(f"self-loop at {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidEdge(f"edge ({u}, {v}) out of range for n={n}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def empty_graph(n: int = 0) -> Graph:
    return Graph(n, (0,) * n)


def path_graph(n: int) -> Graph:
    return family("path", n)


def cycle_graph(n: int) -> Graph:
    return family("cycle", n)


def complete_graph(n: int) -> Graph:
    return family("complete", n)


def star_graph(n: int) -> Graph:
    """Star on ``n`` vertices, centre 0."""
    return family("star", n)


def family(kind: str, n: int) -> Graph:
    if kind == "cycle":
        if n < 3:
            raise InvalidOrder(f"cycle needs at least 3 vertices, got {n}")
        return from_edges(n, [(k, k + 1) for k in range(n - 1)] + [(0, n - 1)])
    if kind not in ("path", "complete", "star"):
        raise ValueError(f"unknown graph family {kind!r}")
    if n < 1:
        raise InvalidOrder(f"{kind} needs at least 1 vertex, got {n}")
    if kind == "path":
        return from_edges(n, [(k, k + 1) for k in range(n - 1)])
    if kind == "complete":
        full = (1 << n) - 1
        return Graph(n, tuple(full & ~(1 << v) for v in range(n)))
    return from_edges(n, [(0, k) for k in range(1, n)])


def spider(legs: Sequence[int]) -> Graph:
    """Centre 0 with paths of the given lengths attached; legs are labelled
    consecutively, each leg listed from the centre outwards."""
    edges = []
    nxt = 1
    for length in legs:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return from_edges(nxt, edges)


class Step(str, enum.Enum):
    CONE = "c"
    ISOLATED = "i"


def parse_threshold_sequence(steps: Iterable[Step | str]) -> list[Step]:
    out = []
    for s in steps:
        if isinstance(s, Step):
            out.append(s)
        elif s in ("c", "C", "cone", "Cone"):
            out.append(Step.CONE)
        elif s in ("i", "I", "isolated", "Isolated"):
            out.append(Step.ISOLATED)
        else:
            raise ValueError(f"unknown threshold step {s!r}")
    return out


def threshold_from_sequence(steps: Iterable[Step | str]) -> Graph:
    """Build a threshold graph from one vertex; step ``k`` adds vertex ``k+1``."""
    seq = parse_threshold_sequence(steps)
    adj = [0]
    for step in seq:
        new = len(adj)
        if step is Step.CONE:
            adj = [a | (1 << new) for a in adj]
            adj.append((1 << new) - 1)
        else:
            adj.append(0)
    return Graph(len(adj), tuple(adj))


# -- operations ---------------------------------------------------------------


@dataclass(frozen=True)
class VertexMapping:
    """Order-preserving relabelling of the vertices that survive a deletion."""

    old_to_new: dict[int, int] = field(default_factory=dict)

    def __getitem__(self, old: int) -> int:
        return self.old_to_new[old]

    def __contains__(self, old: int) -> bool:
        return old in self.old_to_new

    @property
    def new_to_old(self) -> dict[int, int]:
        return {b: a for a, b in self.old_to_new.items()}

    def map_mask(self, mask: int) -> int:
        """Image of an old-label mask; vertices without an image are dropped."""
        return vset(self.old_to_new[v] for v in members(mask) if v in self.old_to_new)

    def pull_mask(self, mask: int) -> int:
        """Old-label mask of a new-label mask."""
        back = self.new_to_old
        return vset(back[v] for v in members(mask))


def delete_vertices(G: Graph, W: int | Iterable[int]) -> tuple[Graph, VertexMapping]:
    if not isinstance(W, int):
        W = vset(W)
    if W & ~G.full:
        raise InvalidVertex("deleted set has vertices out of range")
    keep = [v for v in range(G.n) if not W >> v & 1]
    mapping = VertexMapping({old: new for new, old in enumerate(keep)})
    adj = tuple(mapping.map_mask(G.adj[old] & ~W) for old in keep)
    return Graph(len(keep), adj), mapping


def delete_edge(G: Graph, u: int, v: int) -> Graph:
    _check_pair(G, u, v)
    if not G.has_edge(u, v):
        raise MissingEdge(f"no edge ({u}, {v})")
    adj = list(G.adj)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    return Graph(G.n, tuple(adj))


def add_edge(G: Graph, u: int, v: int) -> Graph:
    _check_pair(G, u, v)
    if G.has_edge(u, v):
        raise DuplicateEdge(f"edge ({u}, {v}) already present")
    adj = list(G.adj)
    adj[u] |= 1 << v
    adj[v] |= 1 << u
    return Graph(G.n, tuple(adj))


def _check_pair(G: Graph, u: int, v: int) -> None:
    G.check_vertex(u)
    G.check_vertex(v)
    if u == v:
        raise InvalidEdge(f"self-loop at {u}")


def disjoint_union(G: Graph, H: Graph) -> Graph:
    return Graph(G.n + H.n, G.adj + tuple(a << G.n for a in H.adj))


def wedge(G: Graph, v: int, H: Graph, w: int) -> Graph:
    """Identify ``v`` of ``G`` with ``w`` of ``H``.

    ``G`` keeps its labels; the other vertices of ``H`` follow in their
    original order starting at ``G.n``.
    """
    G.check_vertex(v)
    H.check_vertex(w)
    label = {}
    for u in range(H.n):
        if u == w:
            label[u] = v
        else:
            label[u] = G.n + (u if u < w else u - 1)
    edges = G.edges() + [(label[a], label[b]) for a, b in H.edges()]
    return from_edges(G.n + H.n - 1, edges)


def cone(G: Graph) -> tuple[Graph, int]:
    """Cone over ``G``; the apex gets label ``G.n``."""
    apex = G.n
    adj = tuple(a | (1 << apex) for a in G.adj) + (G.full,)
    return Graph(G.n + 1, adj), apex


def permute(G: Graph, perm: Sequence[int]) -> Graph:
    """Relabel so that old vertex ``v`` becomes ``perm[v]``."""
    adj = [0] * G.n
    for v in range(G.n):
        adj[perm[v]] = vset(perm[u] for u in members(G.adj[v]))
    return Graph(G.n, tuple(adj))


def induced_subgraph(G: Graph, keep: int) -> tuple[Graph, VertexMapping]:
    return delete_vertices(G, G.full & ~keep)


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return from_edges(n, edges)


def random_connected_graph(n: int, p: float, rng: random.Random) -> Graph:
    """Random spanning tree (random attachment) plus independent extra edges."""
    order = list(range(n))
    rng.shuffle(order)
    edges = {tuple(sorted((order[k], order[rng.randrange(k)]))) for k in range(1, n)}
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.add((u, v))
    return from_edges(n, sorted(edges))


# -- graph6 ---------------------------------------------------------------


def to_graph6(G: Graph) -> bytes:
    if G.n > MAX_ORDER:
        raise Unsupported("graph6 long form is not supported")
    bits = [G.adj[j] >> i & 1 for j in range(1, G.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = bytearray([G.n + 63])
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        out.append(val + 63)
    return bytes(out)


def parse_graph6(text: bytes | str) -> Graph:
    if isinstance(text, str):
        text = text.encode("ascii", errors="replace")
    data = text.strip()
    if not data:
        raise ParseError("empty graph6 string")
    for b in data:
        if b < 63 or b > 126:
            raise ParseError(f"byte {b!r} outside the graph6 range 63..126")
    if data[0] == 126:
        raise Unsupported("graph6 long form (n > 62) is not supported")
    n = data[0] - 63
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[1:]
    if len(body) != nbytes:
        raise ParseError(f"expected {nbytes} data bytes for n={n}, got {len(body)}")
    bits = []
    for b in body:
        val = b - 63
        bits.extend((val >> s) & 1 for s in range(5, -1, -1))
    if any(bits[nbits:]):
        raise ParseError("nonzero padding bits")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))


# -- edge-list text -------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """First non-comment line ``n m``, then ``m`` lines ``u v``; ``#`` starts a
    comment line."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected two integers, got {line!r}", lineno)
        try:
            rows.append((lineno, int(parts[0]), int(parts[1])))
        except ValueError:
            raise ParseError(f"expected two integers, got {line!r}", lineno) from None
    if not rows:
        raise ParseError("missing 'n m' header")
    _, n, m = rows[0]
    if len(rows) - 1 != m:
        raise ParseError(f"header announces {m} edges, found {len(rows) - 1}")
    return from_edges(n, [(u, v) for _, u, v in rows[1:]])


def to_edge_list(G: Graph) -> str:
    edges = G.edges()
    lines = [f"{G.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def iter_subsets(mask: int) -> Iterator[int]:
    """All submasks of ``mask`` (including 0 and ``mask``)."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask
