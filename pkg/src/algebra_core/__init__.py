"""
Exact algebra core.

Laurent polynomials and rational functions in q_s, affine root data for
the Table Aff types, and the extended affine Weyl group with the
h-sequence of a reduced expression.
"""

from .cache import MemoCache
from .qseries import (
    LaurentPoly,
    RationalFunc,
    bar,
    ord_at_infinity,
    q_integer,
    q_factorial,
    q_binomial,
    inverse_one_minus,
)
from .rootdata import (
    AffineType,
    RootDatum,
    Root,
    Weight,
    ClWeight,
    build_root_datum,
    list_affine_types,
)
from .weyl import (
    ExtendedWeylElement,
    HSequence,
    diagram_automorphisms,
    omega_word,
)

__all__ = [
    'MemoCache',
    'LaurentPoly',
    'RationalFunc',
    'bar',
    'ord_at_infinity',
    'q_integer',
    'q_factorial',
    'q_binomial',
    'inverse_one_minus',
    'AffineType',
    'RootDatum',
    'Root',
    'Weight',
    'ClWeight',
    'build_root_datum',
    'list_affine_types',
    'ExtendedWeylElement',
    'HSequence',
    'diagram_automorphisms',
    'omega_word',
]
