import random
from itertools import combinations

import pytest

from forcing_lab.forcing import (
    ColoringState,
    is_forcing_set,
    is_total_forcing_set,
    mandatory_tf_vertices,
    propagate,
    replay_trace,
    total_forcing_number,
    zero_forcing_number,
)
from forcing_lab.graph_core import CapacityError, Graph, InputError, VertexSet
from forcing_lab.generate import all_trees, named

from helpers import brute_total_forcing, brute_zero_forcing, mixed_corpus


def vs(g, *vertices):
    return VertexSet.from_vertices(vertices, g.n)


def test_propagate_path_from_one_end():
    p4 = named("path", [4])
    trace = propagate(p4, vs(p4, 0))
    assert trace.moves == ((0, 1), (1, 2), (2, 3))
    assert trace.final_colored.bits == p4.full_mask


def test_propagate_full_set_plays_nothing():
    for g in mixed_corpus(5):
        trace = propagate(g, VertexSet(g.full_mask, g.n))
        assert trace.moves == () and trace.final_colored.bits == g.full_mask


def test_propagate_blocked_star_center():
    star = named("star", [3])
    trace = propagate(star, vs(star, 0))
    assert trace.moves == () and trace.final_colored.members() == (0,)


def test_propagate_rejects_foreign_vertex_set():
    with pytest.raises(InputError):
        propagate(named("path", [3]), VertexSet(1, 4))


def test_traces_replay_on_corpus():
    for g in mixed_corpus(5):
        for bits in range(1 << g.n):
            trace = propagate(g, VertexSet(bits, g.n))
            assert replay_trace(g, trace)
            assert trace.final_colored.bits & bits == bits


def test_coloring_state_consistency():
    g = named("double_star", [2, 2])
    state = ColoringState.initial(g, vs(g, 0, 2))
    assert state.consistent(g)
    state.uncolored_nbr_count[0] += 1
    assert not state.consistent(g)


def test_is_forcing_set_cycle_examples():
    c4 = named("cycle", [4])
    for u in range(4):
        assert is_forcing_set(c4, vs(c4, u, (u + 1) % 4))
        assert not is_forcing_set(c4, vs(c4, u))
    assert not is_forcing_set(c4, VertexSet(0, 4))


def test_is_total_forcing_set_examples():
    p4 = named("path", [4])
    assert is_total_forcing_set(p4, vs(p4, 0, 1))
    assert is_forcing_set(p4, vs(p4, 0, 2))
    assert not is_total_forcing_set(p4, vs(p4, 0, 2))
    p2 = named("path", [2])
    assert not is_total_forcing_set(p2, VertexSet(0, 2))


def test_zero_forcing_closed_forms():
    assert zero_forcing_number(named("path", [7])).z == 1
    assert zero_forcing_number(named("complete", [5])).z == 4
    assert zero_forcing_number(named("star", [5])).z == 4


def test_total_forcing_closed_forms():
    assert total_forcing_number(named("path", [9])).ft == 2
    assert total_forcing_number(named("star", [5])).ft == 5
    assert total_forcing_number(named("double_star", [2, 2])).ft == 4


def test_forcing_number_errors():
    with pytest.raises(InputError):
        zero_forcing_number(Graph.from_edges(0, []))
    with pytest.raises(InputError):
        total_forcing_number(named("path", [1]))
    with pytest.raises(InputError):
        total_forcing_number(Graph.from_edges(3, [(0, 1)]))  # isolated vertex
    with pytest.raises(CapacityError):
        zero_forcing_number(named("path", [25]))
    with pytest.raises(CapacityError):
        total_forcing_number(named("path", [25]))


def test_witnesses_reverify():
    for g in mixed_corpus(6):
        if g.n == 0:
            continue
        res = zero_forcing_number(g)
        assert is_forcing_set(g, res.z_witness) and len(res.z_witness) == res.z
        if g.n >= 2 and all(g.degree(v) > 0 for v in range(g.n)):
            res = total_forcing_number(g)
            assert is_total_forcing_set(g, res.ft_witness)
            assert len(res.ft_witness) == res.ft


def test_mandatory_tf_vertices():
    ds = named("double_star", [2, 2])
    strong, bundles = mandatory_tf_vertices(ds)
    assert strong.members() == (0, 1)
    assert bundles == ((0, (2, 3)), (1, (4, 5)))
    strong, bundles = mandatory_tf_vertices(named("path", [6]))
    assert strong.members() == () and bundles == ()
    strong, bundles = mandatory_tf_vertices(named("star", [4]))
    assert strong.members() == (0,) and bundles == ((0, (1, 2, 3, 4)),)
    with pytest.raises(InputError):
        mandatory_tf_vertices(Graph.from_edges(2, []))


def test_bundle_lemma_spot_check():
    # Missing two leaves of one strong support can never force totally.
    for n in range(3, 8):
        for cert in all_trees(n):
            g = cert.graph
            _, bundles = mandatory_tf_vertices(g)
            for _, bundle in bundles:
                for x, y in combinations(bundle, 2):
                    s = VertexSet(g.full_mask & ~(1 << x) & ~(1 << y), g.n)
                    assert not is_total_forcing_set(g, s)


def test_play_order_confluence_small():
    rng = random.Random(99)
    for g in mixed_corpus(5):
        for bits in range(1 << g.n):
            s = VertexSet(bits, g.n)
            expected = propagate(g, s).final_colored.bits
            for _ in range(5):
                assert propagate(g, s, order_rng=rng).final_colored.bits == expected


def test_forcing_monotonicity_random_graphs():
    rng = random.Random(2024)
    for _ in range(30):
        n = rng.randint(2, 10)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4]
        g = Graph.from_edges(n, edges)
        for _ in range(20):
            base = rng.getrandbits(n)
            extra = base | rng.getrandbits(n)
            if is_forcing_set(g, VertexSet(base, n)):
                assert is_forcing_set(g, VertexSet(extra, n))


def test_pruned_search_matches_unpruned():
    for n in range(2, 9):
        for cert in all_trees(n):
            g = cert.graph
            assert (
                zero_forcing_number(g).z
                == zero_forcing_number(g, use_bounds=False).z
            )
            assert (
                total_forcing_number(g).ft
                == total_forcing_number(g, use_bounds=False).ft
            )
    for g in (named("complete", [5]), named("complete_bipartite", [3, 3]), named("cycle", [6])):
        assert total_forcing_number(g).ft == total_forcing_number(g, use_bounds=False).ft


def test_search_matches_brute_force_oracle():
    for g in mixed_corpus(5):
        if g.n == 0:
            continue
        assert zero_forcing_number(g).z == brute_zero_forcing(g)
        if g.n >= 2 and all(g.degree(v) > 0 for v in range(g.n)):
            assert total_forcing_number(g).ft == brute_total_forcing(g)


def test_ft_at_most_double_z_and_tree_gap():
    for g in mixed_corpus(6):
        if g.n < 2 or any(g.degree(v) == 0 for v in range(g.n)):
            continue
        z = zero_forcing_number(g).z
        ft = total_forcing_number(g).ft
        assert ft <= 2 * z
    for n in range(2, 9):
        for cert in all_trees(n):
            z = zero_forcing_number(cert.graph).z
            ft = total_forcing_number(cert.graph).ft
            assert ft >= z + 1
