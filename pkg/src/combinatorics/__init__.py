"""
Combinatorial side of the workbench.

Laurent Schur functions and Littlewood-Richardson rules, level-zero
extremal crystals of type A_n^(1), and the limit ring J_lambda with its
cells.
"""

from .symfun import (
    Partition,
    LaurentSchur,
    GProdRep,
    lr_coefficients,
    lr_multiply,
    oracle_multiply,
    rep_multiply,
    truncated_irreps,
)
from .crystals import (
    BaseCrystal,
    ColumnCrystal,
    TensorCrystal,
    build_BW,
    create_crystal,
    get_available_crystals,
)
from .cells import (
    CellTriple,
    JRing,
    JRingElement,
    CellPartition,
    cell_partition,
    d_count,
    d_set,
)

__all__ = [
    'Partition',
    'LaurentSchur',
    'GProdRep',
    'lr_coefficients',
    'lr_multiply',
    'oracle_multiply',
    'rep_multiply',
    'truncated_irreps',
    'BaseCrystal',
    'ColumnCrystal',
    'TensorCrystal',
    'build_BW',
    'create_crystal',
    'get_available_crystals',
    'CellTriple',
    'JRing',
    'JRingElement',
    'CellPartition',
    'cell_partition',
    'd_count',
    'd_set',
]
