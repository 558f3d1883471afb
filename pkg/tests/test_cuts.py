import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

import cutbounds as cb
from cutbounds.cuts import place_blocks
from helpers import random_certificate_edges, random_connected_graph


def test_verify_single_edge():
    g = cb.cycle(5)
    cert = cb.verify_induced_bipartite(g, [0])
    assert len(cert.components) == 1
    assert cert.components[0].vertices == (0, 1)


def test_verify_spanning_path_not_induced():
    g = cb.cycle(5)
    with pytest.raises(cb.NotInducedError):
        cb.verify_induced_bipartite(g, [0, 1, 2, 3])


def test_verify_three_edge_path():
    g = cb.cycle(5)
    # path v0-v1-v2-v3; v0 and v3 are not adjacent in C5
    assert not g.has_edge(0, 3)
    cert = cb.verify_induced_bipartite(g, [0, 1, 2])
    assert len(cert.components) == 1


def test_verify_odd_component():
    g = cb.complete(3)
    with pytest.raises(cb.NotBipartiteError):
        cb.verify_induced_bipartite(g, [0, 1, 2])


def test_verify_matching_with_cross_edges():
    # two disjoint edges of C5 joined by a cycle edge: still a certificate
    g = cb.cycle(5)
    cert = cb.verify_induced_bipartite(g, [0, 2])
    assert len(cert.components) == 2


def test_derandomized_cut_fixtures():
    g = cb.cycle(5)
    one = cb.derandomized_cut(g, cb.verify_induced_bipartite(g, [0]))
    assert one.weight >= 3.0
    empty = cb.derandomized_cut(g, cb.verify_induced_bipartite(g, []))
    assert empty.weight >= 2.5
    path3 = cb.derandomized_cut(g, cb.verify_induced_bipartite(g, [0, 1, 2]))
    assert path3.weight == 4.0  # >= (5+3)/2 and the maximum cut is 4


def test_certificate_edges_cross():
    rng = random.Random(7)
    for _ in range(60):
        g = random_connected_graph(rng.randint(2, 10), rng.randint(0, 8), rng, True)
        ids = random_certificate_edges(g, rng)
        cert = cb.verify_induced_bipartite(g, ids)
        cut = cb.derandomized_cut(g, cert)
        for e in ids:
            assert cut.crosses(g, e)
        assert cut.weight == cut.recompute_weight(g)


def test_derandomizer_exact_guarantee_integer_mode():
    rng = random.Random(11)
    for _ in range(400):
        g = random_connected_graph(rng.randint(2, 9), rng.randint(0, 7), rng, True)
        ids = random_certificate_edges(g, rng)
        cert = cb.verify_induced_bipartite(g, ids)
        cut = cb.derandomized_cut(g, cert)
        need = (Fraction(int(g.total_weight)) + Fraction(int(cert.weight(g)))) / 2
        assert Fraction(cut.weight) >= need


def test_place_blocks_rejects_overlap():
    g = cb.cycle(4)
    with pytest.raises(ValueError):
        place_blocks(g, [{0: 0, 1: 1}, {1: 0}])


def test_local_search_k4():
    g = cb.complete(4)
    flat = cb.Cut.from_side(g, [0, 0, 0, 0])
    out = cb.local_search_improve(g, flat)
    assert out.weight >= 3.0


def test_local_search_keeps_optimum():
    g = cb.cycle(5)
    opt = cb.Cut.from_side(g, [0, 1, 0, 1, 1])
    assert opt.weight == 4.0
    assert cb.local_search_improve(g, opt).weight == 4.0


def test_local_search_monotone():
    rng = random.Random(3)
    for _ in range(50):
        g = random_connected_graph(rng.randint(2, 9), rng.randint(0, 6), rng)
        side = [rng.randint(0, 1) for _ in range(g.n)]
        start = cb.Cut.from_side(g, side)
        out = cb.local_search_improve(g, start)
        assert out.weight >= start.weight
        # local optimum: no single flip improves
        for v in range(g.n):
            flipped = list(out.side)
            flipped[v] ^= 1
            assert cb.Cut.from_side(g, flipped).weight <= out.weight + 1e-9


def test_check_matching():
    g = cb.cycle(5)
    with pytest.raises(cb.NotAMatchingError):
        cb.cuts.check_matching(g, [0, 1])
    assert cb.cuts.check_matching(g, [0, 2]) == (0, 2)


@settings(max_examples=80, deadline=None)
@given(st.integers(2, 10), st.integers(0, 9), st.integers(0, 10 ** 6))
def test_derandomizer_guarantee_property(n, extra, seed):
    rng = random.Random(seed)
    g = random_connected_graph(n, extra, rng, integer_weights=True)
    cert = cb.verify_induced_bipartite(g, random_certificate_edges(g, rng))
    cut = cb.derandomized_cut(g, cert)
    assert Fraction(cut.weight) >= (Fraction(int(g.total_weight))
                                    + Fraction(int(cert.weight(g)))) / 2
    assert all(cut.crosses(g, e) for e in cert.edge_ids)
    assert cut.weight == cut.recompute_weight(g)


def test_empty_and_single_vertex_graphs():
    empty = cb.WeightedGraph(0, [])
    assert cb.derandomized_cut(empty, cb.verify_induced_bipartite(empty, ())).weight == 0.0
    one = cb.WeightedGraph(1, [])
    cut = cb.derandomized_cut(one, cb.verify_induced_bipartite(one, ()))
    assert cut.side == (0,)
    with pytest.raises(cb.DisconnectedGraphError):
        cb.dfs_bound(empty)
