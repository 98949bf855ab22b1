from itertools import combinations

from trilist.models.graph import Graph
from trilist.models.ordering import Ordering
from trilist.models.exceptions import GadgetInvalid
from .labeled import LabeledGadget


def ld_size(d):
    """ Return the number of vertices of L_d. """
    return 2 * d + 2


def ld_roles(d):
    return ['e'] + ['v_{}'.format(i) for i in range(1, d + 1)] + \
        ['K_{}'.format(i) for i in range(d + 1)]


def ld_edges(d, base=0):
    """ Return the edges of L_d with all vertex ids shifted by base.

    Vertex e has id base, v_i has id base + i for i in 1..d and K_i has id
    base + d + 1 + i for i in 0..d.
    """
    if d < 1:
        raise GadgetInvalid('L_d needs d >= 1, got {}'.format(d))
    e = base
    fan = [base + i for i in range(1, d + 1)]
    clique = [base + d + 1 + i for i in range(d + 1)]
    edges = list(combinations(clique, 2))
    edges.extend((e, v) for v in fan)
    edges.extend((v, k) for v in fan for k in clique)
    return edges


def ld_gadget(d):
    """ Build L_d: a (d+1)-clique K_0..K_d, a vertex e with d neighbors v_1..v_d, and
    every v_i joined to every clique vertex.

    Adding one unit of weight to e raises the best C++ cost of L_d by exactly 2d + 1
    for d >= 2, see ld_unit_weight_cost().

    Returns:
        LabeledGadget: The graph, with the constants 'd' and 'reference_cost'.
    """
    graph = Graph.from_edges(ld_size(d), ld_edges(d))
    return LabeledGadget('ld', graph, ld_roles(d), {
        'd': d,
        'reference_cost': ld_reference_cost(d),
    })


def ld_reference_cost(d):
    """ Return the C++ cost of the order e, v_1..v_d, K_d..K_0 of L_d. """
    if d < 1:
        raise GadgetInvalid('L_d needs d >= 1, got {}'.format(d))
    return d * d + d * (d + 1) ** 2 + sum(i * i for i in range(d + 1))


def ld_reference_order(d):
    """ Return the ordering e, v_1..v_d, K_d..K_0 over the ids of ld_gadget(d). """
    clique = [d + 1 + i for i in reversed(range(d + 1))]
    return Ordering.from_sequence([0] + list(range(1, d + 1)) + clique, name='ld-reference')


def ld_unit_weight_cost(d):
    """ Return the best C++ cost of L_d when e carries one unit of weight.

    For d >= 2 this is C_d + 2d + 1. L_1 is the exception: its clique has d + 1 = 2
    vertices, so placing the clique first and e last costs 4 + 1 + 1 + 1 = 7 = C_1 + 1.
    """
    if d < 1:
        raise GadgetInvalid('L_d needs d >= 1, got {}'.format(d))
    if d == 1:
        return ld_reference_cost(1) + 1
    return ld_reference_cost(d) + 2 * d + 1
