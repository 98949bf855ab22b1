from pathlib import Path

from trilist.models.exceptions import (FormatParseError, NaeFormulaInvalid,
                                       SetCoverInvalid)


class NaeFormula:
    """ A NAE3SAT+ formula: clauses of three positive literals.

    Variables are numbered 1..n_vars. Every clause names three distinct variables.

    Args:
        n_vars (int): The number of variables.
        clauses (list): Triples of variable indices.

    Raises:
        NaeFormulaInvalid: If a clause does not name three distinct variables in range.
    """
    def __init__(self, n_vars, clauses):
        self.n_vars = n_vars
        self.clauses = [tuple(int(x) for x in clause) for clause in clauses]
        for j, clause in enumerate(self.clauses, start=1):
            if len(clause) != 3:
                raise NaeFormulaInvalid('Clause {} has {} literals, expected 3'
                                        .format(j, len(clause)))
            if len(set(clause)) != 3:
                raise NaeFormulaInvalid('Clause {} repeats a variable: {}'.format(j, clause))
            if min(clause) < 1 or max(clause) > n_vars:
                raise NaeFormulaInvalid('Clause {} names a variable outside 1..{}'
                                        .format(j, n_vars))

    @property
    def m(self):
        return len(self.clauses)

    def is_satisfied_by(self, assignment):
        """ Return whether no clause is monochromatic under the assignment.

        Args:
            assignment: Truth values indexed by variable - 1.
        """
        for clause in self.clauses:
            values = {bool(assignment[x - 1]) for x in clause}
            if len(values) == 1:
                return False
        return True

    def __repr__(self):
        return '<NaeFormula vars={} clauses={}>'.format(self.n_vars, self.clauses)


class SetCoverInstance:
    """ A set cover instance over the universe {1..n}.

    Args:
        n (int): The size of the universe.
        sets (list): The candidate subsets.
        k (int): The budget on the number of sets.

    Raises:
        SetCoverInvalid: If a set leaves the universe or k is negative.
    """
    def __init__(self, n, sets, k):
        self.n = n
        self.sets = [frozenset(int(x) for x in s) for s in sets]
        self.k = k
        if k < 0:
            raise SetCoverInvalid('The budget k must be non-negative')
        for j, s in enumerate(self.sets, start=1):
            if s and (min(s) < 1 or max(s) > n):
                raise SetCoverInvalid('Set {} has elements outside 1..{}'.format(j, n))

    @property
    def universe(self):
        return frozenset(range(1, self.n + 1))

    def is_coverable(self):
        """ Return whether the union of all sets is the universe. """
        return frozenset().union(*self.sets) == self.universe

    def is_nontrivial(self):
        """ Return whether every element is covered and there are at least k sets. """
        return self.is_coverable() and len(self.sets) >= self.k

    def __repr__(self):
        return '<SetCoverInstance n={} k={} sets={}>'.format(
            self.n, self.k, [sorted(s) for s in self.sets])


def _lines(source):
    """ Yield (line number, tokens) of the non-empty, non-comment lines of a source. """
    if isinstance(source, (str, Path)):
        with open(str(source), 'r') as stream:
            yield from _lines(stream)
        return
    for line_number, line in enumerate(source, start=1):
        line = line.strip()
        if line and not line.startswith('#'):
            yield line_number, line.split()


def _ints(what, line_number, tokens):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise FormatParseError(what, line_number, 'expected integers, got {!r}'
                               .format(' '.join(tokens)))


def read_nae_formula(source):
    """ Read a formula: a first line 'n m', then m lines 'a b c'. """
    lines = list(_lines(source))
    if not lines:
        raise FormatParseError('Formula', 1, 'missing header "n m"')
    line_number, header = lines[0]
    values = _ints('Formula', line_number, header)
    if len(values) != 2:
        raise FormatParseError('Formula', line_number, 'header must be "n m"')
    n_vars, m = values
    if len(lines) - 1 != m:
        raise FormatParseError('Formula', line_number,
                               'header announces {} clauses, found {}'.format(m, len(lines) - 1))
    clauses = [_ints('Formula', number, tokens) for number, tokens in lines[1:]]
    return NaeFormula(n_vars, clauses)


def write_nae_formula(formula, stream):
    stream.write('{} {}\n'.format(formula.n_vars, formula.m))
    for clause in formula.clauses:
        stream.write('{} {} {}\n'.format(*clause))


def read_set_cover(source):
    """ Read an instance: a first line 'n k', then one line per set listing its elements.

    An empty set is written as a line holding a single '-'.
    """
    lines = list(_lines(source))
    if not lines:
        raise FormatParseError('Set cover', 1, 'missing header "n k"')
    line_number, header = lines[0]
    values = _ints('Set cover', line_number, header)
    if len(values) != 2:
        raise FormatParseError('Set cover', line_number, 'header must be "n k"')
    n, k = values
    sets = [[] if tokens == ['-'] else _ints('Set cover', number, tokens)
            for number, tokens in lines[1:]]
    return SetCoverInstance(n, sets, k)


def write_set_cover(instance, stream):
    stream.write('{} {}\n'.format(instance.n, instance.k))
    for s in instance.sets:
        stream.write('{}\n'.format(' '.join(str(x) for x in sorted(s)) if s else '-'))
