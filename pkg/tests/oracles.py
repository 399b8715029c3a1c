"""Slow, independent reference implementations used only by the tests.

Nothing here imports the bitmask machinery of the package; graphs are plain
``(n, edge list)`` pairs and vertex sets are Python sets.
"""

from __future__ import annotations

import itertools
import math


def neighbour_sets(n, edges):
    nb = [set() for _ in range(n)]
    for u, v in edges:
        nb[u].add(v)
        nb[v].add(u)
    return nb


def oracle_closure(n, edges, S):
    nb = neighbour_sets(n, edges)
    blue = set(S)
    changed = True
    while changed:
        changed = False
        for v in sorted(blue):
            white = nb[v] - blue
            if len(white) == 1:
                blue |= white
                changed = True
    return blue


def oracle_forces(n, edges, S):
    return len(oracle_closure(n, edges, S)) == n


def oracle_profile(n, edges):
    z = [0] * (n + 1)
    for i in range(n + 1):
        for S in itertools.combinations(range(n), i):
            if oracle_forces(n, edges, S):
                z[i] += 1
    return z


def oracle_path_nonforcing(n):
    """Non-forcing subsets of the path, counted directly as sets avoiding both
    ends with no two consecutive members."""
    out = [0] * (n + 1)
    for i in range(n + 1):
        for S in itertools.combinations(range(n), i):
            if S and (S[0] == 0 or S[-1] == n - 1):
                continue
            if any(b - a == 1 for a, b in zip(S, S[1:])):
                continue
            out[i] += 1
    return out


def path_edges(n):
    return [(k, k + 1) for k in range(n - 1)]


def cycle_edges(n):
    return path_edges(n) + [(0, n - 1)]


def oracle_is_fort(n, edges, F):
    nb = neighbour_sets(n, edges)
    F = set(F)
    return bool(F) and all(len(nb[v] & F) != 1 for v in range(n) if v not in F)


def graph6_decode(s):
    """Hand decoder for graph6 strings with n <= 62."""
    data = [ord(c) - 63 for c in s]
    n = data[0]
    bits = []
    for d in data[1:]:
        bits.extend((d >> (5 - k)) & 1 for k in range(6))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return n, sorted(edges)


def oracle_hanging_cycles(n, edges):
    """Every ``((v, w), interior)`` with ``v < w`` an edge and ``interior`` a
    nonempty path of degree-2 vertices from a neighbour of ``v`` to a
    neighbour of ``w``, found by exhaustive simple-path search."""
    nb = neighbour_sets(n, edges)
    found = set()
    for v, w in edges:
        v, w = min(v, w), max(v, w)
        stack = [[a] for a in nb[v] if a != w and len(nb[a]) == 2]
        while stack:
            path = stack.pop()
            last = path[-1]
            if w in nb[last]:
                found.add(((v, w), tuple(path)))
            for u in nb[last]:
                if u not in path and u not in (v, w) and len(nb[u]) == 2:
                    stack.append(path + [u])
    return found


def oracle_is_outerplanar(n, edges):
    """Outerplanar iff every biconnected block with at least three vertices
    has a Hamiltonian cycle whose remaining edges are pairwise non-crossing
    chords of that cycle."""
    import networkx as nx

    H = nx.Graph()
    H.add_nodes_from(range(n))
    H.add_edges_from(edges)
    for block in nx.biconnected_components(H):
        if len(block) < 3:
            continue
        B = H.subgraph(block)
        verts = sorted(block)
        first = verts[0]
        ok = False
        for perm in itertools.permutations(verts[1:]):
            if perm[0] > perm[-1]:
                continue
            cyc = (first,) + perm
            if not all(B.has_edge(cyc[k], cyc[(k + 1) % len(cyc)]) for k in range(len(cyc))):
                continue
            pos = {v: k for k, v in enumerate(cyc)}
            ring = {frozenset((cyc[k], cyc[(k + 1) % len(cyc)])) for k in range(len(cyc))}
            chords = [tuple(sorted((pos[u], pos[v]))) for u, v in B.edges() if frozenset((u, v)) not in ring]
            if all(not (a < c < b < d or c < a < d < b) for (a, b), (c, d) in itertools.combinations(chords, 2)):
                ok = True
                break
        if not ok:
            return False
    return True


def _root(parent, x):
    while parent[x] != x:
        x = parent[x]
    return x


def oracle_spanning_trees(n, edges):
    out = []
    for combo in itertools.combinations(edges, n - 1):
        parent = list(range(n))
        ok = True
        for u, v in combo:
            ru, rv = _root(parent, u), _root(parent, v)
            if ru == rv:
                ok = False
                break
            parent[ru] = rv
        if ok:
            out.append(sorted(combo))
    return out


def comb(a, b):
    return math.comb(a, b) if 0 <= b <= a else 0
