from __future__ import annotations

import pytest

from graphcert.brute import (
    all_labeled_graphs,
    alpha_brute,
    chi_brute,
    has_cycle_of_length,
    is_isomorphic_brute,
    max_deficiency_brute,
    nu_brute,
    omega_brute,
    theta_brute,
)
from graphcert.families import cycle, complete, kneser
from graphcert.graph import Graph


def path(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def test_pentagon_values():
    g = cycle(5)
    assert alpha_brute(g) == 2
    assert omega_brute(g) == 2
    assert chi_brute(g) == 3
    assert theta_brute(g) == 3
    assert nu_brute(g) == 2
    assert max_deficiency_brute(g) == 1


def test_complete_graph_values():
    g = complete(4)
    assert alpha_brute(g) == 1
    assert omega_brute(g) == 4
    assert chi_brute(g) == 4
    assert theta_brute(g) == 1
    assert nu_brute(g) == 2
    assert max_deficiency_brute(g) == 2


def test_edgeless_values():
    g = Graph.empty(5)
    assert alpha_brute(g) == 5
    assert omega_brute(g) == 1
    assert chi_brute(g) == 1
    assert theta_brute(g) == 5
    assert nu_brute(g) == 0
    assert max_deficiency_brute(g) == 0


def test_empty_graph_values():
    g = Graph.empty(0)
    assert alpha_brute(g) == 0
    assert omega_brute(g) == 0
    assert chi_brute(g) == 0
    assert theta_brute(g) == 0
    assert nu_brute(g) == 0
    assert max_deficiency_brute(g) == 0


def test_path_values():
    g = path(4)
    assert alpha_brute(g) == 2
    assert chi_brute(g) == 2
    assert theta_brute(g) == 2
    assert nu_brute(g) == 2


def test_even_cycle_matching():
    assert nu_brute(cycle(6)) == 3
    assert nu_brute(cycle(8)) == 4


def test_bipartite_deficiency_zero():
    assert max_deficiency_brute(cycle(6)) == 0
    assert max_deficiency_brute(path(5)) == 0


def test_wrong_pentagon_wrong_value_caught():
    # alpha and theta disagree on the pentagon; guards against a trivially
    # weak oracle that conflates the two
    g = cycle(5)
    assert theta_brute(g) != alpha_brute(g)


def test_all_labeled_graph_counts():
    assert sum(1 for _ in all_labeled_graphs(0)) == 1
    assert sum(1 for _ in all_labeled_graphs(3)) == 8
    assert sum(1 for _ in all_labeled_graphs(4)) == 64


def test_all_labeled_graphs_distinct():
    seen = set(all_labeled_graphs(4))
    assert len(seen) == 64


def test_all_labeled_graphs_cap():
    with pytest.raises(ValueError):
        list(all_labeled_graphs(7))


def test_isomorphism_positive():
    a = cycle(5)
    b = Graph.from_edges(5, [(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)])
    assert is_isomorphic_brute(a, b)
    assert is_isomorphic_brute(a, a.complement())  # pentagon is self-complementary


def test_isomorphism_negative():
    assert not is_isomorphic_brute(complete(3), path(3))
    assert not is_isomorphic_brute(cycle(4), path(4))
    assert not is_isomorphic_brute(cycle(4), cycle(5))


def test_isomorphism_cap():
    with pytest.raises(ValueError):
        is_isomorphic_brute(cycle(9), cycle(9))


def test_brute_caps():
    big = Graph.empty(23)
    with pytest.raises(ValueError):
        alpha_brute(big)
    with pytest.raises(ValueError):
        chi_brute(Graph.empty(19))
    with pytest.raises(ValueError):
        max_deficiency_brute(Graph.empty(17))


def test_has_cycle_of_length():
    g = cycle(6)
    assert has_cycle_of_length(g, 6)
    assert not has_cycle_of_length(g, 3)
    assert not has_cycle_of_length(g, 4)
    assert not has_cycle_of_length(g, 5)
    pete = kneser(2, 1)
    assert not has_cycle_of_length(pete, 3)
    assert not has_cycle_of_length(pete, 4)
    assert has_cycle_of_length(pete, 5)
    assert has_cycle_of_length(pete, 6)


def test_brute_agreement_on_small_census():
    for g in all_labeled_graphs(4):
        assert alpha_brute(g) == omega_brute(g.complement())
        assert theta_brute(g) == chi_brute(g.complement())
        assert alpha_brute(g) + nu_brute(g) <= g.n
