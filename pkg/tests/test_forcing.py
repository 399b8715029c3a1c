from __future__ import annotations

import random

import numpy as np
import pytest

from oracles import comb, oracle_closure, oracle_is_fort, oracle_path_nonforcing, oracle_profile
from zeroforce.errors import EmptyFort, TooLarge
from zeroforce.forcing import (
    ForcingProfile,
    all_forts,
    closure,
    closure_mask,
    closure_masks,
    find_fort_upto,
    forcing_profile,
    forcing_table,
    fort_criterion_applies,
    is_forcing,
    is_fort,
    path_profile_formula,
    zero_forcing_number,
)
from zeroforce.graph_core import (
    complete_graph,
    cone,
    cycle_graph,
    disjoint_union,
    empty_graph,
    from_edges,
    members,
    path_graph,
    random_graph,
    star_graph,
    vset,
)

# eight vertices: path 0..5 with two extra leaves 6, 7 on vertex 2
STUCK_SAMPLE = from_edges(8, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (6, 2), (2, 7)])


def test_closure_examples():
    t = closure(path_graph(3), 0b001)
    assert t.steps == ((0, 1), (1, 2)) and t.final == 0b111
    t = closure(cycle_graph(4), 0b0001)
    assert t.steps == () and t.final == 0b0001
    assert closure(STUCK_SAMPLE, vset([0, 1, 4, 7])).final != STUCK_SAMPLE.full


def test_is_forcing_examples():
    assert is_forcing(path_graph(4), 0b0001)
    assert not is_forcing(path_graph(4), 0b0010)
    assert is_forcing(complete_graph(3), 0b011)


def test_profile_examples():
    assert forcing_profile(path_graph(4)).z == (0, 2, 6, 4, 1)
    assert forcing_profile(cycle_graph(4)).z == (0, 0, 4, 4, 1)
    assert forcing_profile(star_graph(4)).z == (0, 0, 3, 4, 1)
    assert forcing_profile(empty_graph(0)).z == (1,)
    assert forcing_profile(path_graph(1)).z == (0, 1)


def test_path_formula_values():
    assert path_profile_formula(4).z[1] == 2
    assert path_profile_formula(5).zprime(2) == 1
    assert path_profile_formula(1).z == (0, 1)


def test_path_formula_against_direct_count():
    for n in range(1, 13):
        direct = oracle_path_nonforcing(n)
        assert list(path_profile_formula(n).zprimes) == direct


def test_profile_against_oracle_random():
    rng = random.Random(11)
    for _ in range(60):
        G = random_graph(rng.randint(1, 8), rng.random(), rng)
        assert list(forcing_profile(G).z) == oracle_profile(G.n, G.edges())


def test_routes_agree_on_every_mask():
    rng = random.Random(3)
    for _ in range(25):
        G = random_graph(rng.randint(1, 10), rng.random(), rng)
        table = forcing_table(G)
        scalar = np.array([closure_mask(G.adj, S) == G.full for S in range(1 << G.n)])
        assert (table == scalar).all()


def test_closure_masks_match_oracle_closure():
    rng = random.Random(5)
    G = random_graph(9, 0.35, rng)
    masks = np.arange(1 << 9, dtype=np.uint64)
    out = closure_masks(G.adj, G.n, masks)
    for S in range(0, 1 << 9, 7):
        assert members(int(out[S])) == sorted(oracle_closure(G.n, G.edges(), members(S)))


def test_random_order_closure_agrees():
    rng = random.Random(2)
    G = random_graph(10, 0.3, rng)
    for _ in range(50):
        S = rng.getrandbits(10)
        assert closure(G, S, rng).final == closure_mask(G.adj, S)


def test_workers_do_not_change_counts():
    rng = random.Random(9)
    G = random_graph(13, 0.3, rng)
    assert forcing_profile(G, workers=1) == forcing_profile(G, workers=3)


def test_limit():
    with pytest.raises(TooLarge, match="limit"):
        forcing_profile(path_graph(25))
    with pytest.raises(TooLarge):
        forcing_profile(path_graph(12), limit=10)
    with pytest.raises(ValueError):
        forcing_profile(path_graph(5), limit=40)


def test_zero_forcing_number():
    for n in range(1, 9):
        assert zero_forcing_number(path_graph(n)) == 1
    assert zero_forcing_number(cycle_graph(5)) == 2
    assert zero_forcing_number(complete_graph(4)) == 3
    p = forcing_profile(cycle_graph(5))
    assert p.zero_forcing_number == 2


def test_forts():
    assert is_fort(cycle_graph(4), 0b1010)
    assert is_fort(star_graph(4), 0b0110)
    assert not is_fort(complete_graph(3), 0b001)
    with pytest.raises(EmptyFort):
        is_fort(path_graph(3), 0)
    assert find_fort_upto(cycle_graph(4), 2).vertices == [0, 2]
    assert find_fort_upto(path_graph(4), 1) is None
    base = disjoint_union(empty_graph(2), path_graph(2))
    C, _ = cone(base)
    assert find_fort_upto(C, 2).vertices == [0, 1]


def test_forts_against_oracle():
    rng = random.Random(4)
    for _ in range(20):
        G = random_graph(rng.randint(1, 7), rng.random(), rng)
        got = all_forts(G)
        want = [F for F in range(1, 1 << G.n) if oracle_is_fort(G.n, G.edges(), members(F))]
        assert got == want


def test_fort_criterion():
    assert fort_criterion_applies(cycle_graph(4))
    assert fort_criterion_applies(star_graph(4))
    # P_5 has forts only of size >= 3 (e.g. {0, 2, 4}); z + 1 = 2
    assert not fort_criterion_applies(path_graph(5))


def test_profile_serialisation():
    p = forcing_profile(cycle_graph(5))
    assert ForcingProfile.from_dict(p.to_dict()) == p
    assert p.zprimes == tuple(comb(5, i) - p.z[i] for i in range(6))
