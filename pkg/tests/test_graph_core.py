from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import graph6_decode
from zeroforce.errors import (
    DuplicateEdge,
    InvalidEdge,
    InvalidOrder,
    MissingEdge,
    ParseError,
    Unsupported,
)
from zeroforce.graph_core import (
    Graph,
    add_edge,
    complete_graph,
    cone,
    cycle_graph,
    delete_edge,
    delete_vertices,
    disjoint_union,
    empty_graph,
    family,
    from_edges,
    parse_edge_list,
    parse_graph6,
    parse_threshold_sequence,
    path_graph,
    permute,
    random_connected_graph,
    random_graph,
    spider,
    star_graph,
    threshold_from_sequence,
    to_edge_list,
    to_graph6,
    wedge,
)
from zeroforce.structure import is_connected


def test_from_edges_path():
    G = from_edges(3, [(0, 1), (1, 2)])
    assert G == path_graph(3)
    assert G.edges() == [(0, 1), (1, 2)]
    assert G.degrees() == [1, 2, 1]


def test_single_vertex():
    G = from_edges(1, [])
    assert G.n == 1 and G.m == 0


@pytest.mark.parametrize("edges", [[(0, 3)], [(1, 1)], [(-1, 0)]])
def test_invalid_edges(edges):
    with pytest.raises(InvalidEdge):
        from_edges(3, edges)


def test_families():
    assert family("path", 2).edges() == [(0, 1)]
    assert family("cycle", 3) == complete_graph(3)
    with pytest.raises(InvalidOrder):
        family("cycle", 2)
    assert star_graph(4).degrees() == [3, 1, 1, 1]
    with pytest.raises(ValueError):
        family("wheel", 5)


def test_spider_labelling():
    G = spider((2, 2, 1))
    assert G.n == 6
    assert G.edges() == [(0, 1), (0, 3), (0, 5), (1, 2), (3, 4)]


def test_threshold_construction():
    G = threshold_from_sequence("icci")
    assert G.n == 5 and G.m == 5
    assert G.degree(4) == 0
    # both cone vertices see everything that came before them
    assert G.has_edge(2, 0) and G.has_edge(2, 1)
    assert G.has_edge(3, 0) and G.has_edge(3, 1) and G.has_edge(3, 2)
    assert threshold_from_sequence([]).n == 1
    assert threshold_from_sequence(["c"]) == path_graph(2)
    with pytest.raises(ValueError):
        parse_threshold_sequence("icx")


def test_delete_vertices():
    G, mp = delete_vertices(path_graph(4), {3})
    assert G == path_graph(3)
    assert mp.old_to_new == {0: 0, 1: 1, 2: 2}
    G, _ = delete_vertices(cycle_graph(4), {0})
    assert G == path_graph(3)
    G, _ = delete_vertices(complete_graph(3), {0, 1, 2})
    assert G.n == 0


def test_mapping_roundtrip():
    G = cycle_graph(6)
    H, mp = delete_vertices(G, {1, 4})
    assert mp.new_to_old == {0: 0, 1: 2, 2: 3, 3: 5}
    S = 0b101001  # {0, 3, 5}
    assert mp.pull_mask(mp.map_mask(S)) == S


def test_edge_edits():
    assert delete_edge(cycle_graph(4), 0, 3) == path_graph(4)
    assert add_edge(path_graph(3), 0, 2) == complete_graph(3)
    with pytest.raises(MissingEdge):
        delete_edge(path_graph(3), 0, 2)
    with pytest.raises(DuplicateEdge):
        add_edge(path_graph(3), 0, 1)


def test_disjoint_union():
    U = disjoint_union(path_graph(2), path_graph(2))
    assert U.n == 4 and U.edges() == [(0, 1), (2, 3)]
    assert disjoint_union(path_graph(1), empty_graph(0)) == path_graph(1)
    assert disjoint_union(path_graph(2), path_graph(3)) == delete_edge(path_graph(5), 1, 2)


def test_wedge():
    assert wedge(path_graph(2), 1, path_graph(2), 0) == path_graph(3)
    bowtie = wedge(complete_graph(3), 0, complete_graph(3), 0)
    assert bowtie.n == 5 and bowtie.m == 6 and bowtie.degree(0) == 4
    assert wedge(path_graph(1), 0, cycle_graph(4), 0) == cycle_graph(4)


def test_cone():
    C, apex = cone(empty_graph(2))
    assert apex == 2 and C.degrees() == [1, 1, 2]
    C, _ = cone(path_graph(2))
    assert C == complete_graph(3)
    C, apex = cone(empty_graph(0))
    assert C.n == 1 and apex == 0


def test_graph6_known_strings():
    assert parse_graph6(b"Bw") == complete_graph(3)
    assert to_graph6(complete_graph(3)) == b"Bw"
    assert parse_graph6("B?") == empty_graph(3)


@pytest.mark.parametrize("bad, err", [(b"!!", ParseError), (b"Bw_", ParseError), (b"Bx", ParseError),
                                      (b"~?", Unsupported), (b"", ParseError)])
def test_graph6_errors(bad, err):
    with pytest.raises(err):
        parse_graph6(bad)


def test_graph6_against_hand_decoder():
    rng = random.Random(7)
    for _ in range(200):
        G = random_graph(rng.randint(1, 12), rng.random(), rng)
        s = to_graph6(G).decode()
        n, edges = graph6_decode(s)
        assert n == G.n and edges == G.edges()


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 14), st.data())
def test_graph6_roundtrip_property(n, data):
    pairs = [(i, j) for j in range(n) for i in range(j)]
    chosen = data.draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    G = from_edges(n, chosen)
    assert parse_graph6(to_graph6(G)) == G


def test_edge_list_roundtrip_and_errors():
    G = cycle_graph(5)
    assert parse_edge_list(to_edge_list(G)) == G
    assert parse_edge_list("# comment\n3 1\n0 2\n") == from_edges(3, [(0, 2)])
    with pytest.raises(ParseError) as exc:
        parse_edge_list("3 2\n0 1\nx y\n")
    assert exc.value.line == 3
    with pytest.raises(ParseError):
        parse_edge_list("3 2\n0 1\n")


def test_permute():
    G = path_graph(3)
    H = permute(G, [1, 0, 2])
    assert H.edges() == [(0, 1), (0, 2)]


def test_random_connected():
    rng = random.Random(1)
    for n in range(1, 12):
        assert is_connected(random_connected_graph(n, 0.2, rng))


def test_graph_invariants_checked():
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0))
