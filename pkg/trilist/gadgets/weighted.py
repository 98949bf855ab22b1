from collections import Counter

import numpy as np

from trilist.models.oriented import orient
from trilist.models.exceptions import GadgetInvalid, MultisetEmpty


class WeightedGraph:
    """ A graph whose vertices carry non-negative integer weights.

    Under an ordering, a vertex u costs (d_u^+ + w(u))^2, so a weight acts like extra
    successors that every ordering has to pay for.

    Args:
        graph (Graph): The graph.
        weights: The weight of every vertex, zero for all when omitted.

    Raises:
        GadgetInvalid: If a weight is negative or the weights do not match the graph.
    """
    def __init__(self, graph, weights=None):
        self.graph = graph
        if weights is None:
            weights = [0] * graph.n
        self.weights = tuple(int(w) for w in weights)
        if len(self.weights) != graph.n:
            raise GadgetInvalid('Expected {} weights, got {}'.format(graph.n, len(self.weights)))
        if any(w < 0 for w in self.weights):
            raise GadgetInvalid('Vertex weights must be non-negative')

    @property
    def n(self):
        return self.graph.n

    @property
    def m(self):
        return self.graph.m

    @property
    def total_weight(self):
        return sum(self.weights)

    def with_weight(self, u, weight):
        """ Return a copy where the weight of u is replaced. """
        weights = list(self.weights)
        weights[u] = weight
        return WeightedGraph(self.graph, weights)

    def __repr__(self):
        return '<WeightedGraph n={} m={} total_weight={}>'.format(
            self.n, self.m, self.total_weight)


def elimination_costs(wg, ordering):
    """ Return d_u^+ + w(u) for every vertex u, as an int64 array. """
    out_degree = orient(wg.graph, ordering).out_degree
    return out_degree + np.asarray(wg.weights, dtype=np.int64)


def weighted_cost(wg, ordering):
    """ Return the sum over the vertices of (d_u^+ + w(u))^2 under the ordering.

    With all weights zero this is the C++ cost of the ordering.
    """
    costs = elimination_costs(wg, ordering)
    return int(np.dot(costs, costs))


class CostMultiset:
    """ The multiset of elimination costs of the vertices of a weighted graph.

    The linear cost (sum of the values) and the size do not depend on the ordering
    the values come from; the squared cost does. Writing the linear cost as n*d + v with
    1 <= v <= n, the balanced multiset holds v times d + 1 and n - v times d and has
    the lowest squared cost among all multisets of the same size and linear cost.

    Args:
        values: The costs, in any order.
    """
    def __init__(self, values):
        self.values = tuple(sorted(int(x) for x in values))

    @classmethod
    def minimal_shape(cls, n, linear_cost, marginal):
        """ Build the cheapest multiset with a given size, linear cost and marginal cost.

        It holds marginal times d + 2, v - 2*marginal times d + 1 and the rest at d.

        Raises:
            ValueError: If 2 * marginal exceeds v.
        """
        d, v = _divide(n, linear_cost)
        if marginal < 0 or 2 * marginal > v:
            raise ValueError('A marginal cost of {} needs 2k <= {}'.format(marginal, v))
        return cls([d + 2] * marginal + [d + 1] * (v - 2 * marginal) + [d] * (n - v + marginal))

    @property
    def n(self):
        return len(self.values)

    def linear_cost(self):
        return sum(self.values)

    def squared_cost(self):
        return sum(x * x for x in self.values)

    def base(self):
        """ Return (d, v) with linear cost n*d + v and 1 <= v <= n.

        Raises:
            MultisetEmpty: If the multiset has no values.
        """
        if not self.values:
            raise MultisetEmpty('The cost multiset is empty')
        return _divide(self.n, self.linear_cost())

    def marginal_cost(self):
        """ Return how far the values exceed d + 1 in total. """
        d, _ = self.base()
        return sum(max(0, x - (d + 1)) for x in self.values)

    def balanced_cost(self):
        """ Return the squared cost of the balanced multiset with the same linear cost. """
        d, v = self.base()
        return v * (d + 1) ** 2 + (self.n - v) * d * d

    def is_balanced(self):
        """ Return whether all values are d or d + 1, a certificate of an optimal order. """
        d, _ = self.base()
        return all(x in (d, d + 1) for x in self.values)

    def staircase_certificate(self):
        """ Find the d certifying an optimal order of a weightless graph.

        The certificate holds when every value lies in 0..d+1 and each of 0..d-1
        appears at most once.

        Returns:
            int: The smallest such d, or None.
        """
        if not self.values or self.values[0] < 0:
            return None
        # a larger d only adds constraints
        counts = Counter(self.values)
        d = max(0, self.values[-1] - 1)
        if all(counts[i] <= 1 for i in range(d)):
            return d
        return None

    def __eq__(self, other):
        return isinstance(other, CostMultiset) and self.values == other.values

    def __hash__(self):
        return hash(self.values)

    def __repr__(self):
        return '<CostMultiset {}>'.format(list(self.values))


def _divide(n, linear_cost):
    d = (linear_cost - 1) // n
    return d, linear_cost - n * d


def multiset_costs(wg, ordering):
    """ Return the CostMultiset of the weighted graph under the ordering. """
    return CostMultiset(elimination_costs(wg, ordering).tolist())
