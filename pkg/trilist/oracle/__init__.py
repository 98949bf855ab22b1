from .formulas import (NaeFormula, SetCoverInstance, read_nae_formula, write_nae_formula,
                       read_set_cover, write_set_cover)
from .exhaustive import brute_triangles, min_cost_exhaustive, sequence_cost
from .solvers import nae_solve, nae_satisfiable, smallest_cover, min_set_cover


__all__ = [
    'NaeFormula', 'SetCoverInstance', 'read_nae_formula', 'write_nae_formula',
    'read_set_cover', 'write_set_cover',
    'brute_triangles', 'min_cost_exhaustive', 'sequence_cost',
    'nae_solve', 'nae_satisfiable', 'smallest_cover', 'min_set_cover',
]
