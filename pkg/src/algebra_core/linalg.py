"""
Exact linear algebra over Q(q_s).

Dense Gaussian elimination on matrices of RationalFunc entries; sizes are
the dimensions of weight spaces, so no pivoting strategy beyond "first
nonzero" is needed.
"""
import logging
from typing import List, Sequence

from ..workbench_utils.errors import DomainError
from .qseries import RationalFunc

# Set up logging
logger = logging.getLogger(__name__)


def _copy(matrix: Sequence[Sequence]) -> List[List[RationalFunc]]:
    return [[RationalFunc.coerce(x) for x in row] for row in matrix]


def rank(matrix: Sequence[Sequence]) -> int:
    """Rank of a rational-function matrix."""
    if not matrix:
        return 0
    m = _copy(matrix)
    rows, cols = len(m), len(m[0])
    r = 0
    for c in range(cols):
        p = next((k for k in range(r, rows) if not m[k][c].is_zero()), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = RationalFunc.one() / m[r][c]
        for k in range(r + 1, rows):
            if not m[k][c].is_zero():
                factor = m[k][c] * inv
                m[k] = [a - factor * b for a, b in zip(m[k], m[r])]
        r += 1
        if r == rows:
            break
    return r


def solve(matrix: Sequence[Sequence], rhs: Sequence[Sequence]) -> List[List[RationalFunc]]:
    """
    Solve matrix * X = rhs for a square nonsingular matrix.

    Args:
        matrix: Square coefficient matrix
        rhs: Right-hand sides, one column per entry of each row

    Returns:
        Solution rows, shaped like rhs

    Raises:
        DomainError: If the matrix is singular
    """
    size = len(matrix)
    if size == 0:
        return []
    width = len(rhs[0])
    m = [row + list(extra) for row, extra in zip(_copy(matrix), _copy(rhs))]
    for c in range(size):
        p = next((k for k in range(c, size) if not m[k][c].is_zero()), None)
        if p is None:
            raise DomainError("singular system over Q(q_s)")
        m[c], m[p] = m[p], m[c]
        inv = RationalFunc.one() / m[c][c]
        m[c] = [x * inv for x in m[c]]
        for k in range(size):
            if k != c and not m[k][c].is_zero():
                factor = m[k][c]
                m[k] = [a - factor * b for a, b in zip(m[k], m[c])]
    return [row[size:size + width] for row in m]
