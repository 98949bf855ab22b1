from trilist.models.graph import Graph
from trilist.models.ordering import Ordering
from trilist.models.exceptions import NaeFormulaInvalid
from .labeled import LabeledGadget


def variable_role(i):
    return 'X_{}'.format(i)


def literal_role(j, a):
    return 'L_{}^{}'.format(j, a)


def nae_graph(formula):
    """ Build the graph whose C+- optimum decides a NAE3SAT+ formula.

    Every clause j becomes a triangle L_j^1, L_j^2, L_j^3 and every variable i a vertex
    X_i joined to the literal vertices that name it. The formula is satisfiable exactly
    when some ordering costs at most twice the number of clauses.

    Vertex X_i has id i - 1 and L_j^a has id n_vars + 3(j - 1) + (a - 1).

    Args:
        formula (NaeFormula): The formula, with distinct variables in every clause.

    Returns:
        LabeledGadget: The graph, with the constants 'threshold' and 'clauses'.
    """
    n_vars = formula.n_vars
    roles = [variable_role(i) for i in range(1, n_vars + 1)]
    edges = []
    for j, clause in enumerate(formula.clauses, start=1):
        base = n_vars + 3 * (j - 1)
        roles.extend(literal_role(j, a) for a in (1, 2, 3))
        edges.extend([(base, base + 1), (base, base + 2), (base + 1, base + 2)])
        edges.extend((x - 1, base + a) for a, x in enumerate(clause))

    graph = Graph.from_edges(len(roles), edges)
    return LabeledGadget('nae', graph, roles, {
        'threshold': 2 * formula.m,
        'clauses': formula.m,
    })


def nae_witness_order(formula, assignment):
    """ Turn a satisfying assignment into an ordering of cost 2m on the formula's graph.

    True variables come first, then the false literal of every clause, then the
    remaining literal, then the true literal, and the false variables come last. Only
    the middle literal of each clause has both predecessors and successors.

    Raises:
        NaeFormulaInvalid: If the assignment leaves a clause with equal truth values.
    """
    if not formula.is_satisfied_by(assignment):
        raise NaeFormulaInvalid('The assignment does not satisfy the formula')
    n_vars = formula.n_vars
    true_vars = [i - 1 for i in range(1, n_vars + 1) if assignment[i - 1]]
    false_vars = [i - 1 for i in range(1, n_vars + 1) if not assignment[i - 1]]

    first, middle, last = [], [], []
    for j, clause in enumerate(formula.clauses):
        base = n_vars + 3 * j
        values = [bool(assignment[x - 1]) for x in clause]
        f = values.index(False)
        t = values.index(True)
        a = 3 - f - t
        first.append(base + f)
        middle.append(base + a)
        last.append(base + t)

    return Ordering.from_sequence(true_vars + first + middle + last + false_vars,
                                  name='nae-witness')


def nae_assignment_from_order(formula, ordering):
    """ Read an assignment back from an ordering of the formula's graph.

    A variable is true when its vertex precedes all its literal vertices. When the
    ordering costs at most 2m this assignment satisfies the formula.
    """
    rank = ordering.rank
    ranked_before = {}
    for j, clause in enumerate(formula.clauses):
        base = formula.n_vars + 3 * j
        for a, x in enumerate(clause):
            first = bool(rank[x - 1] < rank[base + a])
            ranked_before[x] = ranked_before.get(x, True) and first
    return [ranked_before.get(i, True) for i in range(1, formula.n_vars + 1)]
