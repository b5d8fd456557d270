from __future__ import annotations

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from graphcert.brute import alpha_brute, is_isomorphic_brute
from graphcert.families import (
    FamilySpec,
    build_family,
    circulant,
    complete,
    cycle,
    eight_fifths_extremal,
    g58,
    gnp,
    graph_from_spec,
    kneser,
    kneser_labels,
    parse_family_spec,
    ramsey_r35,
    random_3partite,
    random_bipartite,
    schrijver,
    schrijver_labels,
    schrijver_order,
    sparse_subsets,
)
from graphcert.graph import Graph
from graphcert.solvers import chromatic_number, clique_cover_number, max_stable_set


def test_cycle_small_orders():
    assert cycle(0) == Graph.empty(0)
    assert cycle(1) == Graph.empty(1)
    assert cycle(2).edges() == [(0, 1)]
    assert cycle(3) == complete(3)
    assert cycle(5).edges() == [(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]


def test_complete_counts():
    assert complete(5).edge_count == 10
    assert complete(0).n == 0
    assert complete(1).edge_count == 0


def test_circulant_structure():
    g = circulant(8, (1, 4))
    assert all(g.degree(v) == 3 for v in range(8))  # distance 4 pairs up
    h = circulant(9, (2, 3))
    assert all(h.degree(v) == 4 for v in range(9))
    assert circulant(5, (1, 2)) == complete(5)


def test_circulant_rejects_bad_distances():
    with pytest.raises(ValueError):
        circulant(8, (0,))
    with pytest.raises(ValueError):
        circulant(8, (5,))


def test_circulant_13_parameters():
    g = ramsey_r35()
    assert g.n == 13
    assert g.edge_count == 26
    assert all(g.degree(v) == 4 for v in range(13))
    assert g.find_triangle() is None
    assert max_stable_set(g).value == 4


def test_circulant_13_vertex_deleted_stability():
    g = ramsey_r35()
    for v in range(13):
        rest = g.induced_subgraph([u for u in range(13) if u != v])
        assert max_stable_set(rest).value == 4


def test_subdivided_circulant_construction():
    g = g58()
    assert g.n == 15
    assert g.edge_count == 28
    assert g.find_triangle() is None
    assert g.odd_girth() == 5
    assert g == ramsey_r35().subdivide_edge(0, 1, 2)


def test_extremal_family_initial_cases():
    assert eight_fifths_extremal(0) == Graph.empty(0)
    g1 = eight_fifths_extremal(1)
    assert g1.n == 1 and g1.edge_count == 0
    g5 = eight_fifths_extremal(5)
    assert g5 == g58()


def test_extremal_family_reaches_the_bound():
    for x in range(10):
        g = eight_fifths_extremal(x)
        assert max_stable_set(g).value == x
        assert clique_cover_number(g).value == 8 * x // 5


def test_kneser_orders():
    for n in range(1, 5):
        for k in range(0, 5):
            g = kneser(n, k)
            assert g.n == math.comb(2 * n + k, n)


def test_kneser_labels_are_sorted_subsets():
    labels = kneser_labels(2, 1)
    assert len(labels) == 10
    assert labels[0] == (1, 2)
    assert all(len(s) == 2 for s in labels)
    assert labels == sorted(labels)


def test_kneser_edges_are_disjoint_pairs():
    labels = kneser_labels(2, 2)
    g = kneser(2, 2)
    for u, v in g.edges():
        assert not set(labels[u]) & set(labels[v])
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not set(labels[u]) & set(labels[v]):
                assert g.has_edge(u, v)


def test_kneser_one_is_complete():
    for k in range(0, 4):
        assert kneser(1, k) == complete(k + 2)


def test_kneser_petersen_shape():
    pete = kneser(2, 1)
    assert pete.n == 10
    assert pete.edge_count == 15
    assert all(pete.degree(v) == 3 for v in range(10))
    assert pete.odd_girth() == 5


def test_sparse_subsets_examples():
    # 2-subsets of a 5-cycle's vertices with no two cyclically adjacent
    got = list(sparse_subsets(2, 1))
    assert got == [(1, 3), (1, 4), (2, 4), (2, 5), (3, 5)]
    assert list(sparse_subsets(1, 0)) == [(1,), (2,)]


def test_schrijver_order_formula_matches_enumeration():
    for n in range(1, 5):
        for k in range(1, 5):
            want = math.comb(n + k, n) + math.comb(n + k - 1, n - 1)
            assert schrijver_order(n, k) == want
            assert len(schrijver_labels(n, k)) == want


def test_schrijver_subgraph_of_kneser():
    big = kneser_labels(2, 2)
    small = schrijver_labels(2, 2)
    assert set(small) <= set(big)
    g = schrijver(2, 2)
    assert g.n == 9


def test_schrijver_n1_is_an_odd_cycle():
    for n in (2, 3, 4):
        g = schrijver(n, 1)
        assert g.n == 2 * n + 1
        assert all(g.degree(v) == 2 for v in range(g.n))
        assert g.is_connected()
        assert chromatic_number(g).value == 3


def test_schrijver_21_is_pentagon():
    assert is_isomorphic_brute(schrijver(2, 1), cycle(5))


def test_schrijver_rejects_k_zero():
    with pytest.raises(ValueError):
        schrijver(2, 0)
    with pytest.raises(ValueError):
        schrijver_order(2, 0)


def test_gnp_extremes():
    assert gnp(8, 0.0, seed=0) == Graph.empty(8)
    assert gnp(6, 1.0, seed=0) == complete(6)


def test_gnp_determinism():
    assert gnp(12, 0.4, seed=7) == gnp(12, 0.4, seed=7)
    assert gnp(12, 0.4, seed=7) != gnp(12, 0.4, seed=8)


def test_random_bipartite_sides_are_stable():
    g = random_bipartite(4, 5, 0.8, seed=3)
    assert g.n == 9
    for u, v in g.edges():
        assert u < 4 <= v
    assert g.is_bipartite()


def test_random_3partite_parts_are_stable():
    g = random_3partite(3, 4, 5, 0.7, seed=2)
    assert g.n == 12
    parts = [range(0, 3), range(3, 7), range(7, 12)]
    for part in parts:
        sub = g.induced_subgraph(part)
        assert sub.edge_count == 0
    assert chromatic_number(g).value <= 3


def test_random_3partite_full_probability_alpha():
    g = random_3partite(2, 3, 4, 1.0, seed=0)
    assert max_stable_set(g).value == 4
    assert alpha_brute(g) == 4


@pytest.mark.parametrize(
    "text",
    [
        "g58",
        "ramsey35",
        "cycle:5",
        "complete:4",
        "circulant:13,1,5",
        "extremalC:7",
        "kneser:2,2",
        "schrijver:3,2",
        "gnp:12,0.4,seed=7",
        "random-bipartite:3,4,0.5,seed=1",
        "random-3partite:2,2,2,0.9,seed=4",
    ],
)
def test_spec_canonical_round_trip(text):
    spec = parse_family_spec(text)
    assert spec.canonical() == text
    assert parse_family_spec(spec.canonical()) == spec
    build_family(spec)  # must not raise


def test_spec_seed_defaults_to_zero():
    spec = parse_family_spec("gnp:10,0.3")
    assert spec.seed == 0
    assert spec.canonical() == "gnp:10,0.3,seed=0"
    assert graph_from_spec("gnp:10,0.3") == gnp(10, 0.3, seed=0)


def test_spec_random_gnp_alias():
    spec = parse_family_spec("random-gnp:9,0.5,seed=2")
    assert spec.tag == "gnp"
    assert build_family(spec) == gnp(9, 0.5, seed=2)


def test_spec_probability_formats():
    assert parse_family_spec("gnp:9,0.5").params[1] == 0.5
    assert parse_family_spec("gnp:9,1").params[1] == 1.0


def test_spec_errors():
    with pytest.raises(ValueError):
        parse_family_spec("mystery:3")
    with pytest.raises(ValueError):
        parse_family_spec("cycle")
    with pytest.raises(ValueError):
        parse_family_spec("cycle:3,4")
    with pytest.raises(ValueError):
        parse_family_spec("cycle:x")
    with pytest.raises(ValueError):
        parse_family_spec("g58:1")
    with pytest.raises(ValueError):
        parse_family_spec("cycle:5,seed=1")  # deterministic family, no seed
    with pytest.raises(ValueError):
        parse_family_spec("gnp:9")


def test_build_known_specs():
    assert graph_from_spec("cycle:5") == cycle(5)
    assert graph_from_spec("g58") == g58()
    assert graph_from_spec("circulant:13,1,5") == ramsey_r35()
    assert graph_from_spec("kneser:2,1") == kneser(2, 1)


@given(st.integers(0, 14))
def test_extremal_family_sizes(x):
    g = eight_fifths_extremal(x)
    k, r = divmod(x, 5)
    assert g.n == 15 * k + (0, 1, 5, 6, 10)[r]
