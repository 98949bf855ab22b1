from itertools import combinations

from trilist.models.exceptions import GuardExceeded, SetCoverUncoverable


NAE_VARS_GUARD = 20
SET_COVER_GUARD = 20

BIT_ORDERS = ('low', 'high')


def nae_solve(formula, *, bit_order='low', limit=NAE_VARS_GUARD):
    """ Search an assignment leaving no clause with three equal truth values.

    Assignments are enumerated as the integers 0 .. 2^n - 1. With bit_order 'low',
    variable i is bit i - 1 of the integer; with 'high' it is bit n - i. Both orders
    visit every assignment, in different sequences.

    Args:
        formula (NaeFormula): The formula.
        bit_order (str): 'low' or 'high'.
        limit (int): The largest number of variables accepted.

    Returns:
        list: The truth value of every variable, or None if the formula is unsatisfiable.

    Raises:
        GuardExceeded: If the formula has more than limit variables.
    """
    n = formula.n_vars
    if n > limit:
        raise GuardExceeded('Variable count for NAE3SAT+', n, limit)
    if bit_order not in BIT_ORDERS:
        raise ValueError('Unknown bit order {!r}, expected one of {}'.format(
            bit_order, ', '.join(BIT_ORDERS)))

    def bit(x):
        return x - 1 if bit_order == 'low' else n - x

    clause_masks = [sum(1 << bit(x) for x in clause) for clause in formula.clauses]
    for assignment in range(1 << n):
        for mask in clause_masks:
            values = assignment & mask
            if values == 0 or values == mask:
                break
        else:
            return [bool(assignment >> bit(x) & 1) for x in range(1, n + 1)]
    return None


def nae_satisfiable(formula, *, bit_order='low', limit=NAE_VARS_GUARD):
    """ Return whether the formula is not-all-equal satisfiable, by exhaustive search. """
    return nae_solve(formula, bit_order=bit_order, limit=limit) is not None


def smallest_cover(instance, *, limit=SET_COVER_GUARD):
    """ Return the indices of a smallest family of sets covering the universe.

    Families are enumerated by increasing size, and lexicographically within one size.

    Raises:
        GuardExceeded: If the instance has more than limit sets.
        SetCoverUncoverable: If the union of all sets is not the universe.
    """
    if len(instance.sets) > limit:
        raise GuardExceeded('Set count for set cover', len(instance.sets), limit)
    if not instance.is_coverable():
        raise SetCoverUncoverable('The sets do not cover the elements {}'.format(
            sorted(instance.universe - frozenset().union(*instance.sets))))

    universe = (1 << instance.n) - 1
    masks = [sum(1 << (x - 1) for x in s) for s in instance.sets]
    for size in range(len(masks) + 1):
        for family in combinations(range(len(masks)), size):
            covered = 0
            for j in family:
                covered |= masks[j]
            if covered == universe:
                return list(family)


def min_set_cover(instance, *, limit=SET_COVER_GUARD):
    """ Return the minimum number of sets covering the universe. """
    return len(smallest_cover(instance, limit=limit))
