import numpy as np

from trilist.models.ordering import Ordering
from trilist.oracle.exhaustive import min_cost_exhaustive, EXHAUSTIVE_GUARD
from trilist.oracle.solvers import nae_satisfiable, min_set_cover, NAE_VARS_GUARD, SET_COVER_GUARD
from trilist.logger import get_logger
from .weighted import multiset_costs
from .nae import nae_graph
from .ld import ld_gadget, ld_unit_weight_cost
from .setcover import setcover_graph
from .reduction import weighted_to_weightless_gadget, GADGET_VERTICES_GUARD


logger = get_logger(__name__)


class Verdict:
    """ The outcome of checking a construction against the exhaustive oracles.

    Args:
        check (str): What was checked.
        passed (bool): Whether both sides agree.
        values (dict): The values computed on both sides, for reporting.
    """
    def __init__(self, check, passed, values):
        self.check = check
        self.passed = passed
        self.values = values

    def __bool__(self):
        return self.passed

    def __str__(self):
        return '{} {}: {}'.format('PASS' if self.passed else 'FAIL', self.check,
                                  ', '.join('{}={}'.format(k, v) for k, v in self.values.items()))

    def __repr__(self):
        return '<Verdict {}>'.format(self)


def _log(verdict):
    logger.info(str(verdict))
    return verdict


def verify_nae(formula, *, exhaustive_limit=EXHAUSTIVE_GUARD, nae_limit=NAE_VARS_GUARD):
    """ Check that the formula is satisfiable exactly when its graph has an ordering of
    C+- cost at most twice the number of clauses.
    """
    gadget = nae_graph(formula)
    satisfiable = nae_satisfiable(formula, limit=nae_limit)
    best, _ = min_cost_exhaustive(gadget.graph, 'pm', limit=exhaustive_limit)
    threshold = gadget['threshold']
    return _log(Verdict('nae', satisfiable == (best <= threshold), {
        'satisfiable': satisfiable,
        'min_cost': best,
        'threshold': threshold,
    }))


def verify_ld(d, *, exhaustive_limit=EXHAUSTIVE_GUARD):
    """ Check the best C++ cost of L_d, with and without a unit weight on e. """
    gadget = ld_gadget(d)
    best, _ = min_cost_exhaustive(gadget.graph, 'pp', limit=exhaustive_limit)
    weights = [0] * gadget.graph.n
    weights[gadget.vertex('e')] = 1
    weighted_best, _ = min_cost_exhaustive(gadget.graph, 'pp', weights, limit=exhaustive_limit)
    reference = gadget['reference_cost']
    expected = ld_unit_weight_cost(d)
    return _log(Verdict('ld', best == reference and weighted_best == expected, {
        'min_cost': best,
        'reference_cost': reference,
        'min_cost_weighted': weighted_best,
        'expected_weighted': expected,
    }))


def verify_setcover(instance, d=None, *, exhaustive_limit=EXHAUSTIVE_GUARD,
                    sets_limit=SET_COVER_GUARD):
    """ Check that the best weighted cost reaches the bound exactly when k sets cover
    the universe.
    """
    gadget = setcover_graph(instance, d)
    best, _ = min_cost_exhaustive(gadget.graph, 'pp', gadget.weights, limit=exhaustive_limit)
    cover = min_set_cover(instance, limit=sets_limit)
    bound = gadget['bound']
    return _log(Verdict('setcover', (best <= bound) == (cover <= instance.k), {
        'min_cost': best,
        'bound': bound,
        'min_cover': cover,
        'k': instance.k,
        'd': gadget['d'],
    }))


def verify_weight2plain(wg, *, exhaustive_limit=EXHAUSTIVE_GUARD,
                        gadget_limit=GADGET_VERTICES_GUARD):
    """ Check that removing the weights shifts the best C++ cost by the offset. """
    gadget = weighted_to_weightless_gadget(wg, limit=gadget_limit)
    weighted_best, _ = min_cost_exhaustive(wg.graph, 'pp', wg.weights, limit=exhaustive_limit)
    plain_best, _ = min_cost_exhaustive(gadget.graph, 'pp', limit=exhaustive_limit)
    offset = gadget['offset']
    return _log(Verdict('weight2plain', plain_best == weighted_best + offset, {
        'min_cost_weighted': weighted_best,
        'offset': offset,
        'min_cost_plain': plain_best,
    }))


def verify_linear_cost(wg, *, samples=20, seed=0):
    """ Check on random orderings that the cost multiset always has n values summing to
    m plus the total weight.
    """
    rng = np.random.default_rng(seed)
    expected = wg.m + wg.total_weight
    failures = 0
    for _ in range(samples):
        ordering = Ordering(rng.permutation(wg.n) + 1)
        costs = multiset_costs(wg, ordering)
        if costs.n != wg.n or costs.linear_cost() != expected:
            failures += 1
    return _log(Verdict('linear-cost', failures == 0, {
        'linear_cost': expected,
        'samples': samples,
        'failures': failures,
    }))
