from .baseline import (identity_order, random_order, degree_order, core_order,
                       core_decomposition, CoreDecomposition)
from .split import split_order
from .check import check_order
from .neigh import neigh_order, neigh_run, NeighState, NeighResult
from trilist.models.exceptions import OrderingMethodUnknown


ORDERING_METHODS = ('identity', 'random', 'degree', 'core', 'split', 'check', 'neigh')


def compute_ordering(graph, method, *, seed=0, eps=0.01, max_sweeps=50, initial=None,
                     objective='pm'):
    """ Compute an ordering of the graph by the name of its method.

    Args:
        graph (Graph): The graph to order.
        method (str): One of ORDERING_METHODS.
        seed (int): The seed of the random ordering.
        eps (float): Relative improvement threshold of neigh.
        max_sweeps (int): Sweep cap of neigh.
        initial: The starting ordering of neigh, either an Ordering or the name of
            another method. Defaults to split.
        objective (str): The cost neigh minimizes, 'pm' or 'pp'.

    Returns:
        Ordering: The ordering, named after its method.

    Raises:
        OrderingMethodUnknown: If the method name is not known.
    """
    if method == 'identity':
        return identity_order(graph)
    elif method == 'random':
        return random_order(graph, seed)
    elif method == 'degree':
        return degree_order(graph)
    elif method == 'core':
        return core_order(graph)
    elif method == 'split':
        return split_order(graph)
    elif method == 'check':
        return check_order(graph)
    elif method == 'neigh':
        if isinstance(initial, str):
            if initial == 'neigh':
                raise OrderingMethodUnknown('neigh cannot start from itself')
            initial = compute_ordering(graph, initial, seed=seed)
        return neigh_order(graph, initial, eps, max_sweeps, objective=objective)
    else:
        raise OrderingMethodUnknown('Unknown ordering method {!r}, expected one of {}'
                                    .format(method, ', '.join(ORDERING_METHODS)))


__all__ = [
    'identity_order', 'random_order', 'degree_order', 'core_order', 'core_decomposition',
    'CoreDecomposition', 'split_order', 'check_order', 'neigh_order', 'neigh_run',
    'NeighState', 'NeighResult', 'compute_ordering', 'ORDERING_METHODS',
]
