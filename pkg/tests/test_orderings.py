import networkx as nx
import numpy as np
import pytest

from trilist.models import Graph, Ordering, cost_report, orient, gen_gnm
from trilist.models.exceptions import OrderingMethodUnknown
from trilist.orderings import (ORDERING_METHODS, compute_ordering, identity_order, random_order,
                               degree_order, core_order, core_decomposition, split_order,
                               check_order)
from trilist.oracle import min_cost_exhaustive


def test_every_method_returns_a_named_permutation(gnm):
    for method in ORDERING_METHODS:
        ordering = compute_ordering(gnm, method)
        assert ordering.n == gnm.n
        assert sorted(ordering.rank.tolist()) == list(range(1, gnm.n + 1))
        assert ordering.name == method


def test_every_method_handles_the_empty_graph(empty):
    for method in ORDERING_METHODS:
        assert compute_ordering(empty, method).n == 0


def test_unknown_method(k4):
    with pytest.raises(OrderingMethodUnknown):
        compute_ordering(k4, 'alphabetical')
    with pytest.raises(OrderingMethodUnknown):
        compute_ordering(k4, 'neigh', initial='neigh')


def test_identity_order(k4):
    assert identity_order(k4).rank.tolist() == [1, 2, 3, 4]


def test_random_order_is_reproducible(gnm):
    assert random_order(gnm, seed=5) == random_order(gnm, seed=5)
    assert random_order(gnm, seed=5) != random_order(gnm, seed=6)


def test_random_order_puts_every_vertex_first_equally_often(cycle5):
    draws = 10000
    first = np.bincount([random_order(cycle5, seed=seed).sequence()[0] for seed in range(draws)],
                        minlength=cycle5.n)
    assert np.all(np.abs(first / draws - 0.2) <= 0.02)


def test_degree_order_is_non_decreasing_with_id_ties():
    graph = Graph.from_edges(5, [(0, 1), (0, 2), (0, 3), (3, 4)])
    assert degree_order(graph).sequence() == [1, 2, 4, 3, 0]


def test_degree_order_on_star(star):
    ordering = degree_order(star)
    assert ordering.sequence()[-1] == 0
    assert cost_report(star, ordering).c_pp == 4


def test_core_decomposition_matches_networkx(gnm):
    decomposition = core_decomposition(gnm)
    core_number = nx.core_number(gnm.to_networkx())
    assert decomposition.coreness == [core_number[u] for u in range(gnm.n)]
    assert decomposition.degeneracy == max(core_number.values())


def test_core_peeling_degrees_never_decrease(gnm):
    decomposition = core_decomposition(gnm)
    peeled = [decomposition.peel_degrees[u] for u in decomposition.ordering.sequence()]
    assert peeled == sorted(peeled)


def test_core_order_bounds_out_degree_by_degeneracy():
    for seed in range(10):
        graph = gen_gnm(60, 300, seed)
        decomposition = core_decomposition(graph)
        out_degree = orient(graph, decomposition.ordering).out_degree
        assert int(out_degree.max()) <= decomposition.degeneracy
        assert core_order(graph) == decomposition.ordering


def test_core_of_a_clique(k4):
    assert core_decomposition(k4).degeneracy == 3


def test_split_order_alternates_ends(star):
    assert split_order(star).rank.tolist() == [1, 5, 2, 4, 3]


def test_split_order_formula(gnm):
    degrees = gnm.degrees
    delta = np.empty(gnm.n, dtype=np.int64)
    delta[np.argsort(-degrees, kind='stable')] = np.arange(1, gnm.n + 1)
    rank = split_order(gnm).rank
    for u in range(gnm.n):
        i = delta[u] // 2
        assert rank[u] == (i + 1 if delta[u] % 2 else gnm.n + 1 - i)


def test_check_order_on_star(star):
    ordering = check_order(star)
    assert ordering.rank.tolist() == [5, 4, 3, 2, 1]
    assert cost_report(star, ordering).c_pm == 0


def test_check_order_on_triangle(triangle):
    ordering = check_order(triangle)
    assert ordering.rank.tolist() == [3, 1, 2]
    assert cost_report(triangle, ordering).c_pm == 1


def test_neigh_improves_on_its_start():
    for seed in range(5):
        graph = gen_gnm(80, 400, seed)
        start = cost_report(graph, split_order(graph)).c_pm
        assert cost_report(graph, compute_ordering(graph, 'neigh')).c_pm <= start


def _small_connected_graphs(count, seed):
    rng = np.random.default_rng(seed)
    graphs = []
    while len(graphs) < count:
        n = int(rng.integers(2, 8))
        m = int(rng.integers(n - 1, n * (n - 1) // 2 + 1))
        graph = gen_gnm(n, m, int(rng.integers(1 << 30)))
        if nx.is_connected(graph.to_networkx()):
            graphs.append(graph)
    return graphs


def test_heuristics_never_beat_the_optimum():
    for graph in _small_connected_graphs(40, seed=21):
        best, _ = min_cost_exhaustive(graph, 'pm')
        for method in ('split', 'check', 'neigh'):
            assert best <= cost_report(graph, compute_ordering(graph, method)).c_pm


def test_neigh_keeps_an_optimal_start():
    for graph in _small_connected_graphs(40, seed=22):
        best, optimum = min_cost_exhaustive(graph, 'pm')
        result = compute_ordering(graph, 'neigh', initial=optimum)
        assert cost_report(graph, result).c_pm == best
        assert result == optimum


def test_every_connected_graph_up_to_seven_vertices():
    for nx_graph in nx.graph_atlas_g()[1:]:
        if not nx.is_connected(nx_graph):
            continue
        graph = Graph.from_edges(nx_graph.number_of_nodes(), list(nx_graph.edges()))
        best, _ = min_cost_exhaustive(graph, 'pm')
        for method in ('split', 'check', 'neigh'):
            assert best <= cost_report(graph, compute_ordering(graph, method)).c_pm


def test_neigh_accepts_an_initial_ordering_by_name(gnm):
    from_degree = compute_ordering(gnm, 'neigh', initial='degree')
    assert cost_report(gnm, from_degree).c_pm <= cost_report(gnm, degree_order(gnm)).c_pm


def test_orderings_of_isolated_vertices():
    graph = Graph.from_edges(4, [])
    for method in ORDERING_METHODS:
        assert cost_report(graph, compute_ordering(graph, method)).c_pm == 0
        assert isinstance(compute_ordering(graph, method), Ordering)
