import numpy as np
import pytest

from trilist.models import Ordering, CostReport, cost_report, cost_pm_by_edges, orient, gen_gnm
from trilist.models.cost import cost_report_of_view
from trilist.models.exceptions import OrderingMismatch


def test_triangle_costs_do_not_depend_on_the_ordering(triangle):
    for sequence in ([0, 1, 2], [2, 0, 1], [1, 2, 0]):
        report = cost_report(triangle, Ordering.from_sequence(sequence))
        assert report.c_pp == 5
        assert report.c_pm == 1
        assert report.c_mm == 5
        assert report.check_identity()


def test_path_with_middle_vertex_first(path):
    report = cost_report(path, Ordering.from_sequence([1, 0, 2]))
    assert report.c_pp == 4
    assert report.c_pm == 0


def test_star_costs(star):
    center_last = cost_report(star, Ordering.from_sequence([1, 2, 3, 4, 0]))
    assert center_last.c_pp == 4
    assert center_last.c_pm == 0

    center_first = cost_report(star, Ordering.from_sequence([0, 1, 2, 3, 4]))
    assert center_first.c_pp == 16
    assert center_first.c_pm == 0

    center_inside = cost_report(star, Ordering.from_sequence([1, 2, 0, 3, 4]))
    assert center_inside.c_pp == 6
    assert center_inside.c_pm == 4


def test_clique_costs(k4):
    report = cost_report(k4, Ordering([1, 2, 3, 4]))
    assert report.to_dict() == {'n': 4, 'm': 6, 'c_pp': 14, 'c_pm': 4, 'c_mm': 14,
                                'sum_deg_sq': 36}


def test_empty_graph_costs(empty):
    report = cost_report(empty, Ordering([]))
    assert report.c_pp == report.c_pm == report.c_mm == report.sum_deg_sq == 0


def test_cost_identity_on_random_orderings():
    rng = np.random.default_rng(11)
    for seed in range(20):
        graph = gen_gnm(30, 120, seed)
        report = cost_report(graph, Ordering(rng.permutation(graph.n) + 1))
        assert report.check_identity()


def test_edge_accumulation_agrees(gnm):
    rng = np.random.default_rng(3)
    for _ in range(5):
        ordering = Ordering(rng.permutation(gnm.n) + 1)
        assert cost_pm_by_edges(gnm, ordering) == cost_report(gnm, ordering).c_pm


def test_reversed_ordering_swaps_pp_and_mm(gnm):
    ordering = Ordering(np.arange(1, gnm.n + 1))
    reverse = Ordering(gnm.n + 1 - np.arange(1, gnm.n + 1))
    forward, backward = cost_report(gnm, ordering), cost_report(gnm, reverse)
    assert forward.c_pp == backward.c_mm
    assert forward.c_pm == backward.c_pm


def test_report_from_view(gnm):
    ordering = Ordering(np.arange(1, gnm.n + 1))
    assert cost_report_of_view(orient(gnm, ordering)) == cost_report(gnm, ordering)
    with pytest.raises(TypeError):
        cost_report_of_view(gnm)


def test_cost_by_algorithm():
    report = CostReport(c_pp=7, c_pm=2, c_mm=3, sum_deg_sq=14)
    assert report.cost('app') == 7
    assert report.cost('apm') == 2
    assert report.check_identity()


def test_ordering_must_match_graph(k4):
    with pytest.raises(OrderingMismatch):
        cost_report(k4, Ordering([1, 2]))
