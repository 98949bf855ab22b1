from trilist.models.graph import Graph
from trilist.models.ordering import Ordering
from trilist.models.exceptions import GadgetInvalid, SetCoverInvalid
from .labeled import LabeledGadget
from .weighted import WeightedGraph


def admissible_d(instance):
    """ Return the smallest d making every weight of the set cover graph positive.

    The construction needs d > 2|S_j| for every set and d > the number of sets.
    """
    largest = max((len(s) for s in instance.sets), default=0)
    return 1 + max(len(instance.sets), 2 * largest)


def _memberships(instance):
    """ Yield (j, i) for every element i of every set S_j, sets and elements ascending. """
    for j, s in enumerate(instance.sets, start=1):
        for i in sorted(s):
            yield j, i


def setcover_graph(instance, d=None):
    """ Build the weighted graph whose best C++ cost decides a set cover instance.

    The vertices are A, one e_i per element, one s_j per set, and a_j^i, b_j^i, c_j^i
    for every element i of every set S_j. A is joined to all e_i and s_j; a_j^i and
    b_j^i are joined to s_j and c_j^i; c_j^i is joined to e_i. Weights are chosen so
    that the degree plus the weight of each vertex is d + 2, except d + 3 for the c
    vertices and d + 1 + n + k for A.

    The universe can be covered with k sets exactly when some ordering costs at most
    bound = k(d + 2)^2 + (sum |S_j| - n) d^2 + r (d + 1)^2, where r counts the
    remaining vertices.

    Vertex ids: A is 0, e_i is i, s_j is n + j, and the a, b, c triples follow by
    ascending set and element.

    Args:
        instance (SetCoverInstance): A non-trivial instance.
        d (int): The construction parameter, the smallest admissible value if omitted.

    Returns:
        LabeledGadget: The weighted graph with the constants 'd', 'bound' and 'k'.

    Raises:
        SetCoverInvalid: If some element is in no set or there are fewer than k sets.
        GadgetInvalid: If d is below the admissible value.
    """
    if not instance.is_nontrivial():
        raise SetCoverInvalid('The instance must cover every element with at least k = {} sets'
                              .format(instance.k))
    smallest = admissible_d(instance)
    if d is None:
        d = smallest
    elif d < smallest:
        raise GadgetInvalid('d must be at least {}, got {}'.format(smallest, d))

    n, k, ell = instance.n, instance.k, len(instance.sets)
    roles = ['A'] + ['e_{}'.format(i) for i in range(1, n + 1)] + \
        ['s_{}'.format(j) for j in range(1, ell + 1)]
    targets = [d + 1 + n + k] + [d + 2] * (n + ell)
    edges = [(0, u) for u in range(1, n + ell + 1)]

    for j, i in _memberships(instance):
        a = len(roles)
        roles.extend('{}_{}^{}'.format(name, j, i) for name in 'abc')
        targets.extend([d + 2, d + 2, d + 3])
        s_j = n + j
        edges.extend([(a, s_j), (a + 1, s_j), (a, a + 2), (a + 1, a + 2), (a + 2, i)])

    graph = Graph.from_edges(len(roles), edges)
    weights = [target - degree for target, degree in zip(targets, graph.degrees.tolist())]
    if any(w < 0 for w in weights):
        raise GadgetInvalid('Negative weight in the set cover graph with d = {}'.format(d))

    low = sum(len(s) for s in instance.sets) - n
    rest = graph.n - k - low
    bound = k * (d + 2) ** 2 + low * d * d + rest * (d + 1) ** 2
    return LabeledGadget('setcover', WeightedGraph(graph, weights), roles, {
        'd': d,
        'bound': bound,
        'k': k,
    })


def setcover_witness_order(gadget, instance, cover):
    """ Turn a cover of at most k sets into an ordering of cost equal to the bound.

    The chosen sets are eliminated first, each s_j followed by its a, b, c triples and
    by the elements it covers for the first time. A comes next, then the other sets
    with their triples. A cover smaller than k is padded with unused sets.

    Args:
        gadget (LabeledGadget): The result of setcover_graph(instance).
        instance (SetCoverInstance): The instance.
        cover (list): 0-based indices of sets covering the universe.

    Raises:
        SetCoverInvalid: If the sets do not cover the universe or exceed k.
    """
    chosen = list(dict.fromkeys(cover))
    if frozenset().union(*(instance.sets[j] for j in chosen)) != instance.universe:
        raise SetCoverInvalid('The chosen sets do not cover the universe')
    if len(chosen) > instance.k:
        raise SetCoverInvalid('The cover uses {} sets, more than k = {}'.format(
            len(chosen), instance.k))
    unused = [j for j in range(len(instance.sets)) if j not in chosen]
    chosen.extend(unused[:instance.k - len(chosen)])
    others = [j for j in range(len(instance.sets)) if j not in chosen]

    sequence = []
    done = set()

    def eliminate_set(j, with_elements):
        sequence.append(gadget.vertex('s_{}'.format(j + 1)))
        for i in sorted(instance.sets[j]):
            for name in 'abc':
                sequence.append(gadget.vertex('{}_{}^{}'.format(name, j + 1, i)))
            if with_elements and i not in done:
                done.add(i)
                sequence.append(gadget.vertex('e_{}'.format(i)))

    for j in chosen:
        eliminate_set(j, True)
    sequence.append(gadget.vertex('A'))
    for j in others:
        eliminate_set(j, False)
    return Ordering.from_sequence(sequence, name='setcover-witness')
