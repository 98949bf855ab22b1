import numpy as np
import pytest

from trilist.models import Graph, Ordering, cost_report, gen_gnm
from trilist.orderings import NeighState, neigh_run, split_order


def _random_start(graph, seed):
    return Ordering(np.random.default_rng(seed).permutation(graph.n) + 1)


def _check_every_move(state, u, delta):
    assert delta < 0
    assert state.cost == state.recompute()


def test_local_minimum_is_returned_after_one_sweep(triangle):
    start = Ordering([2, 3, 1])
    result = neigh_run(triangle, start)
    assert result.ordering == start
    assert result.sweeps == 1
    assert result.relocations == 0
    assert result.history == [1, 1]


def test_star_reaches_zero(star):
    result = neigh_run(star, Ordering.from_sequence([1, 2, 0, 3, 4]))
    assert result.initial_cost == 4
    assert result.final_cost == 0
    assert cost_report(star, result.ordering).c_pm == 0


def test_path_never_gets_worse():
    graph = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    result = neigh_run(graph, Ordering.from_sequence([1, 0, 2, 3]), callback=_check_every_move)
    assert result.initial_cost == 1
    assert result.final_cost <= 1


def test_best_position_prefers_the_current_one(triangle):
    state = NeighState(triangle, Ordering([1, 2, 3]))
    for u in range(3):
        neighbors, current, best, delta = state.best_position(u)
        assert best == current
        assert delta == 0


def test_best_position_lists_neighbors_by_position(k4):
    state = NeighState(k4, Ordering.from_sequence([3, 1, 0, 2]))
    neighbors, current, _, _ = state.best_position(0)
    assert neighbors == [3, 1, 2]
    assert current == 2


def test_relocation_keeps_degrees_and_keys_consistent():
    graph = gen_gnm(30, 90, seed=4)
    state = NeighState(graph, _random_start(graph, 4))
    for u in range(graph.n):
        state.relocate(u)
        sequence = state.sequence()
        keys = [state._key[v] for v in sequence]
        assert keys == sorted(keys)
        rank = state.ordering().rank
        for v in range(graph.n):
            later = sum(1 for x in graph.neighbors(v).tolist() if rank[x] > rank[v])
            assert state.out_degree[v] == later
            assert state.in_degree[v] == graph.degree(v) - later


@pytest.mark.parametrize('objective', ['pm', 'pp'])
def test_cost_is_exact_after_every_move(objective):
    for seed in range(20):
        graph = gen_gnm(int(10 + seed), int(3 * (10 + seed)), seed)
        result = neigh_run(graph, _random_start(graph, seed), objective=objective,
                           callback=_check_every_move)
        report = cost_report(graph, result.ordering)
        assert result.final_cost == (report.c_pm if objective == 'pm' else report.c_pp)


def test_history_is_non_increasing_and_capped():
    graph = gen_gnm(100, 600, seed=9)
    result = neigh_run(graph, _random_start(graph, 9), max_sweeps=3)
    assert result.sweeps <= 3
    assert all(a >= b for a, b in zip(result.history, result.history[1:]))


def test_zero_eps_runs_until_no_improvement(gnm):
    result = neigh_run(gnm, split_order(gnm), eps=0.0)
    assert result.history[-1] == result.history[-2]


def test_invalid_parameters(triangle):
    with pytest.raises(ValueError):
        neigh_run(triangle, eps=-0.1)
    with pytest.raises(ValueError):
        NeighState(triangle, Ordering([1, 2, 3]), objective='mm')


@pytest.mark.slow
def test_neigh_monotone_on_random_graphs():
    rng = np.random.default_rng(2024)
    for i in range(100):
        n = int(rng.integers(5, 201))
        m = int(rng.integers(0, min(4 * n, n * (n - 1) // 2) + 1))
        graph = gen_gnm(n, m, i)
        callback = _check_every_move if n <= 40 else None
        result = neigh_run(graph, _random_start(graph, i), eps=0.01, max_sweeps=50,
                           callback=callback)
        assert all(a >= b for a, b in zip(result.history, result.history[1:]))
        assert result.final_cost == cost_report(graph, result.ordering).c_pm
        assert result.sweeps <= 50
