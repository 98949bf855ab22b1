import io

import numpy as np
import pytest

from trilist.models import Graph, Ordering, cost_report, gen_gnm
from trilist.models.exceptions import (GadgetInvalid, MultisetEmpty, NaeFormulaInvalid,
                                       SetCoverInvalid)
from trilist.oracle import (NaeFormula, SetCoverInstance, min_cost_exhaustive, nae_solve,
                            read_nae_formula, sequence_cost)
from trilist.gadgets import (WeightedGraph, CostMultiset, LabeledGadget, weighted_cost,
                             elimination_costs, multiset_costs, nae_graph, nae_witness_order,
                             nae_assignment_from_order, ld_gadget, ld_reference_cost,
                             ld_reference_order, ld_unit_weight_cost, setcover_graph,
                             setcover_witness_order, admissible_d, write_gadget, read_gadget,
                             read_weighted, write_weights, verify_nae, verify_ld, verify_setcover,
                             verify_linear_cost, Verdict)


def test_weighted_graph_validation(triangle):
    with pytest.raises(GadgetInvalid):
        WeightedGraph(triangle, [1, 2])
    with pytest.raises(GadgetInvalid):
        WeightedGraph(triangle, [0, -1, 0])
    wg = WeightedGraph(triangle).with_weight(1, 4)
    assert wg.weights == (0, 4, 0)
    assert wg.total_weight == 4


def test_weighted_cost_without_weights_is_c_pp(gnm):
    ordering = Ordering(np.random.default_rng(2).permutation(gnm.n) + 1)
    assert weighted_cost(WeightedGraph(gnm), ordering) == cost_report(gnm, ordering).c_pp


def test_elimination_costs_add_the_weights(path):
    wg = WeightedGraph(path, [2, 0, 1])
    costs = elimination_costs(wg, Ordering([1, 2, 3]))
    assert costs.tolist() == [3, 1, 1]
    assert weighted_cost(wg, Ordering([1, 2, 3])) == 11


def test_linear_cost_is_invariant():
    rng = np.random.default_rng(99)
    for i in range(1000):
        n = int(rng.integers(1, 13))
        graph = gen_gnm(n, int(rng.integers(0, n * (n - 1) // 2 + 1)), i)
        wg = WeightedGraph(graph, rng.integers(0, 4, size=n))
        costs = multiset_costs(wg, Ordering(rng.permutation(n) + 1))
        assert costs.n == n
        assert costs.linear_cost() == graph.m + wg.total_weight


def test_multiset_base_and_balance():
    balanced = CostMultiset([2, 1, 1])
    assert balanced.values == (1, 1, 2)
    assert balanced.base() == (1, 1)
    assert balanced.is_balanced()
    assert balanced.marginal_cost() == 0
    assert balanced.squared_cost() == balanced.balanced_cost() == 6

    skewed = CostMultiset([0, 0, 3])
    assert skewed.base() == (0, 3)
    assert not skewed.is_balanced()
    assert skewed.marginal_cost() == 2
    assert skewed.balanced_cost() == 3
    assert skewed.squared_cost() == 9


def test_empty_multiset_has_no_base():
    with pytest.raises(MultisetEmpty):
        CostMultiset([]).base()


def test_marginal_cost_bounds_the_squared_cost():
    rng = np.random.default_rng(8)
    for _ in range(500):
        costs = CostMultiset(rng.integers(0, 9, size=int(rng.integers(1, 12))))
        excess = costs.squared_cost() - costs.balanced_cost()
        assert excess >= 2 * costs.marginal_cost()
        d, _ = costs.base()
        tight = all(d <= x <= d + 2 for x in costs.values)
        assert (excess == 2 * costs.marginal_cost()) == tight


@pytest.mark.parametrize('n, linear, marginal', [(3, 3, 1), (6, 25, 0), (10, 40, 1), (5, 12, 1)])
def test_minimal_shape(n, linear, marginal):
    shape = CostMultiset.minimal_shape(n, linear, marginal)
    assert shape.n == n
    assert shape.linear_cost() == linear
    assert shape.marginal_cost() == marginal
    assert shape.squared_cost() == shape.balanced_cost() + 2 * marginal


def test_minimal_shape_rejects_large_marginal():
    with pytest.raises(ValueError):
        CostMultiset.minimal_shape(3, 3, 2)


def test_staircase_certificate():
    assert CostMultiset([2, 3, 3, 0, 1, 2]).staircase_certificate() == 2
    assert CostMultiset([0, 0, 2]).staircase_certificate() is None
    assert CostMultiset([]).staircase_certificate() is None


def test_labeled_gadget_roles(triangle):
    gadget = LabeledGadget('demo', triangle, ['X_1', 'X_2', 'Y'], {'threshold': 3})
    assert gadget.vertex('Y') == 2
    assert gadget.vertices('X') == [0, 1]
    assert gadget['threshold'] == 3
    assert gadget.weights == (0, 0, 0)
    with pytest.raises(GadgetInvalid):
        LabeledGadget('demo', triangle, ['X_1', 'X_1', 'Y'])
    with pytest.raises(GadgetInvalid):
        LabeledGadget('demo', triangle, ['X_1'])


def test_nae_graph_sizes():
    single = nae_graph(NaeFormula(3, [(1, 2, 3)]))
    assert single.graph.n == 6
    assert single.graph.m == 6
    assert single['threshold'] == 2

    double = nae_graph(NaeFormula(4, [(1, 2, 3), (2, 3, 4)]))
    assert double.graph.n == 10
    assert double.graph.m == 12
    assert double['threshold'] == 4
    assert double.vertices('X') == [0, 1, 2, 3]
    assert double.vertex('L_2^3') == 9
    assert 3 in double.graph.neighbors(double.vertex('L_2^3')).tolist()


def test_nae_witness_order_costs_twice_the_clauses():
    formula = NaeFormula(5, [(1, 2, 3), (2, 4, 5), (1, 3, 5)])
    assignment = nae_solve(formula)
    gadget = nae_graph(formula)
    witness = nae_witness_order(formula, assignment)
    assert cost_report(gadget.graph, witness).c_pm == 2 * formula.m
    assert nae_assignment_from_order(formula, witness) == assignment


def test_nae_witness_needs_a_satisfying_assignment():
    formula = NaeFormula(3, [(1, 2, 3)])
    with pytest.raises(NaeFormulaInvalid):
        nae_witness_order(formula, [True, True, True])


def test_unsatisfiable_formula_stays_above_the_threshold(data_dir):
    formula = read_nae_formula(data_dir / 'nae_unsat.txt')
    gadget = nae_graph(formula)
    rng = np.random.default_rng(0)
    for _ in range(200):
        ordering = Ordering(rng.permutation(gadget.graph.n) + 1)
        assert cost_report(gadget.graph, ordering).c_pm > gadget['threshold']


def _random_formulas(count, seed):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        n_vars = int(rng.integers(3, 5))
        m = int(rng.integers(1, 3))
        clauses = [tuple(int(x) + 1 for x in rng.choice(n_vars, size=3, replace=False))
                   for _ in range(m)]
        yield NaeFormula(n_vars, clauses)


def test_nae_equivalence_on_random_formulas():
    for formula in _random_formulas(50, seed=17):
        assert verify_nae(formula)


def test_nae_assignment_from_an_optimal_order():
    for formula in _random_formulas(20, seed=18):
        gadget = nae_graph(formula)
        best, optimum = min_cost_exhaustive(gadget.graph, 'pm')
        assert best <= gadget['threshold']
        assert formula.is_satisfied_by(nae_assignment_from_order(formula, optimum))


def test_ld_gadget_shape():
    gadget = ld_gadget(2)
    assert gadget.graph.n == 6
    assert gadget.graph.m == 11
    assert gadget.vertex('e') == 0
    assert gadget.vertices('K') == [3, 4, 5]
    with pytest.raises(GadgetInvalid):
        ld_gadget(0)


@pytest.mark.parametrize('d, expected', [(1, 6), (2, 27), (3, 71)])
def test_ld_reference_cost(d, expected):
    assert ld_reference_cost(d) == expected
    gadget = ld_gadget(d)
    assert cost_report(gadget.graph, ld_reference_order(d)).c_pp == expected


@pytest.mark.parametrize('d', [2, 3])
def test_ld_optimum_and_unit_weight(d):
    verdict = verify_ld(d)
    assert verdict
    assert verdict.values['min_cost'] == ld_reference_cost(d)
    assert verdict.values['min_cost_weighted'] == ld_reference_cost(d) + 2 * d + 1


def test_l1_unit_weight_costs_one_more():
    verdict = verify_ld(1)
    assert verdict
    assert verdict.values['min_cost'] == 6
    assert verdict.values['min_cost_weighted'] == 7
    assert ld_unit_weight_cost(1) == 7

    gadget = ld_gadget(1)
    weights = [0] * gadget.graph.n
    weights[gadget.vertex('e')] = 1
    clique_first = [gadget.vertex('K_0'), gadget.vertex('K_1'), gadget.vertex('v_1'),
                    gadget.vertex('e')]
    assert sequence_cost(gadget.graph, clique_first, 'pp', weights) == 7


@pytest.mark.parametrize('d', [1, 2, 3, 4])
def test_ld_reference_order_has_a_staircase_certificate(d):
    costs = multiset_costs(ld_gadget(d).weighted, ld_reference_order(d))
    assert costs.staircase_certificate() == d


def test_setcover_worked_instance():
    instance = SetCoverInstance(1, [{1}], k=1)
    assert admissible_d(instance) == 3
    gadget = setcover_graph(instance)
    assert gadget.graph.n == 6
    assert gadget['d'] == 3
    assert gadget['bound'] == 105
    weights = {role: gadget.weights[gadget.vertex(role)]
               for role in ('A', 'e_1', 's_1', 'a_1^1', 'b_1^1', 'c_1^1')}
    assert weights == {'A': 4, 'e_1': 3, 's_1': 2, 'a_1^1': 3, 'b_1^1': 3, 'c_1^1': 3}

    witness = setcover_witness_order(gadget, instance, [0])
    assert weighted_cost(gadget.weighted, witness) == 105
    best, _ = min_cost_exhaustive(gadget.graph, 'pp', gadget.weights)
    assert best == 105


def test_setcover_witness_reaches_the_bound():
    instance = SetCoverInstance(3, [{1, 2}, {2, 3}, {3}, {1}], k=2)
    gadget = setcover_graph(instance)
    witness = setcover_witness_order(gadget, instance, [0, 1])
    assert weighted_cost(gadget.weighted, witness) == gadget['bound']

    padded = SetCoverInstance(3, [{1, 2, 3}, {2}, {3}], k=2)
    gadget = setcover_graph(padded)
    witness = setcover_witness_order(gadget, padded, [0])
    assert weighted_cost(gadget.weighted, witness) == gadget['bound']


def test_setcover_witness_errors():
    instance = SetCoverInstance(2, [{1}, {2}], k=1)
    gadget = setcover_graph(instance)
    with pytest.raises(SetCoverInvalid):
        setcover_witness_order(gadget, instance, [0])
    with pytest.raises(SetCoverInvalid):
        setcover_witness_order(gadget, instance, [0, 1])


def test_setcover_graph_errors():
    with pytest.raises(SetCoverInvalid):
        setcover_graph(SetCoverInstance(2, [{1}], k=1))
    with pytest.raises(SetCoverInvalid):
        setcover_graph(SetCoverInstance(1, [{1}], k=2))
    with pytest.raises(GadgetInvalid):
        setcover_graph(SetCoverInstance(1, [{1}], k=1), d=2)


@pytest.mark.parametrize('n, sets, k, d', [
    (1, [{1}], 1, None),
    (1, [{1}], 1, 4),
    (1, [{1}, {1}], 1, None),
    (1, [{1}, {1}], 2, None),
    (1, [{1}, set()], 1, None),
    (1, [{1}, set()], 2, None),
    (1, [{1}, set(), set()], 1, None),
    (1, [{1}, set(), set()], 3, None),
    (2, [{1, 2}], 1, None),
    (2, [{1, 2}, set()], 2, None),
    (2, [{1}, {2}], 1, None),
    (2, [{1}, {2}], 1, 4),
    (2, [{1}, {2}], 2, None),
])
def test_setcover_equivalence(n, sets, k, d):
    instance = SetCoverInstance(n, sets, k)
    verdict = verify_setcover(instance, d)
    assert verdict
    assert (verdict.values['min_cost'] <= verdict.values['bound']) == \
        (verdict.values['min_cover'] <= k)


def test_linear_cost_check_on_gadgets():
    for gadget in (ld_gadget(3), setcover_graph(SetCoverInstance(2, [{1}, {2}], k=1)),
                   nae_graph(NaeFormula(4, [(1, 2, 3)]))):
        assert verify_linear_cost(gadget.weighted, samples=10)


def test_verdict_formatting():
    verdict = Verdict('ld', False, {'min_cost': 27, 'reference_cost': 28})
    assert not verdict
    assert str(verdict) == 'FAIL ld: min_cost=27, reference_cost=28'


def test_gadget_round_trip_keeps_isolated_vertices():
    gadget = nae_graph(NaeFormula(5, [(1, 2, 3)]))
    graph_stream, sidecar_stream = io.StringIO(), io.StringIO()
    write_gadget(gadget, graph_stream, sidecar_stream)
    assert sidecar_stream.getvalue().startswith('# kind nae\n# threshold 2\n# clauses 1\n')

    loaded = read_gadget(io.StringIO(graph_stream.getvalue()),
                         io.StringIO(sidecar_stream.getvalue()))
    assert loaded.kind == 'nae'
    assert loaded.graph.n == 8
    assert loaded.roles == gadget.roles
    assert loaded['threshold'] == 2
    assert loaded.graph.edges().tolist() == gadget.graph.edges().tolist()


def test_weighted_gadget_round_trip():
    gadget = setcover_graph(SetCoverInstance(1, [{1}], k=1))
    graph_stream, sidecar_stream = io.StringIO(), io.StringIO()
    write_gadget(gadget, graph_stream, sidecar_stream)
    loaded = read_gadget(io.StringIO(graph_stream.getvalue()),
                         io.StringIO(sidecar_stream.getvalue()))
    assert loaded.weights == gadget.weights
    assert loaded['bound'] == 105


def test_read_weighted(data_dir):
    wg = read_weighted(data_dir / 'edge.txt', data_dir / 'weights.txt')
    assert wg.graph.labels.tolist() == [1, 2]
    assert wg.weights == (1, 0)

    isolated = read_weighted(io.StringIO('1 2\n'), io.StringIO('7 2\n'))
    assert isolated.graph.labels.tolist() == [1, 2, 7]
    assert isolated.weights == (0, 0, 2)

    stream = io.StringIO()
    write_weights(isolated, stream)
    assert stream.getvalue() == '1 0\n2 0\n7 2\n'


def test_weighted_graph_repr():
    assert repr(WeightedGraph(Graph.from_edges(2, [(0, 1)]), [1, 0])) == \
        '<WeightedGraph n=2 m=1 total_weight=1>'
