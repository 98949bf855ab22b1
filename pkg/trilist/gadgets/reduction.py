import numpy as np

from trilist.models.graph import Graph
from trilist.models.exceptions import GadgetSizeExceeded
from trilist.logger import get_logger
from .labeled import LabeledGadget
from .ld import ld_edges, ld_roles, ld_size, ld_reference_cost


logger = get_logger(__name__)

GADGET_VERTICES_GUARD = 10000


def join_by_edge(first, u, second, v):
    """ Return the disjoint union of two graphs plus the single edge {u, v}.

    The vertices of the second graph are shifted by first.n, so v becomes first.n + v.
    """
    edges = np.concatenate((first.edges(), second.edges() + first.n,
                            np.array([[u, first.n + v]], dtype=np.int64)))
    return Graph.from_edges(first.n + second.n, edges)


def weighted_to_weightless_gadget(wg, *, limit=GADGET_VERTICES_GUARD):
    """ Replace every unit of vertex weight by a pendant copy of L_d.

    Vertices are processed by ascending id and their weight is removed one unit at a
    time. For a vertex u of current degree deg and remaining weight w, a fresh L_d with
    d = deg + w is attached through the edge {u, e}; the best C++ cost then equals the
    best weighted cost of the graph where w(u) is one lower, plus the cost C_d of L_d.

    Args:
        wg (WeightedGraph): The weighted graph.
        limit (int): The largest number of vertices of the output.

    Returns:
        LabeledGadget: The weightless graph, with the constant 'offset' holding the
            sum of the C_d of all attachments. Original vertex u has role 'g_u' and
            keeps its id and label.

    Raises:
        GadgetSizeExceeded: If the output would have more than limit vertices.
    """
    graph = wg.graph
    degree = graph.degrees.tolist()
    roles = ['g_{}'.format(u) for u in range(graph.n)]
    edges = [graph.edges()]
    offset = 0
    attachments = 0

    for u, weight in enumerate(wg.weights):
        while weight > 0:
            d = degree[u] + weight
            base = len(roles)
            if base + ld_size(d) > limit:
                raise GadgetSizeExceeded('Removing the weights needs more than {} vertices'
                                         .format(limit))
            attachments += 1
            roles.extend('{}@{}'.format(role, attachments) for role in ld_roles(d))
            edges.append(np.array(ld_edges(d, base) + [(u, base)], dtype=np.int64))
            offset += ld_reference_cost(d)
            degree[u] += 1
            weight -= 1

    n = len(roles)
    top = int(graph.labels.max()) + 1 if graph.n else 0
    labels = np.concatenate((graph.labels, np.arange(top, top + n - graph.n, dtype=np.int64)))
    result = Graph.from_edges(n, np.concatenate(edges).reshape(-1, 2), labels=labels)
    logger.debug('Attached {} L_d gadgets, {} vertices added, cost offset {}'.format(
        attachments, n - graph.n, offset))
    return LabeledGadget('weight2plain', result, roles, {'offset': offset})


def weighted_to_weightless(wg, *, limit=GADGET_VERTICES_GUARD):
    """ Return an unweighted graph and the offset between its best C++ cost and the
    best weighted cost of wg.
    """
    gadget = weighted_to_weightless_gadget(wg, limit=limit)
    return gadget.graph, gadget['offset']
