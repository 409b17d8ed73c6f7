"""
Positive half of the quantum affine algebra.

Words in the free algebra modulo the radical of the Drinfeld form, braid
operators, PBW-type elements bound to an h-sequence and the canonical
basis obtained from them.
"""

from .uplus import (
    AlgElement,
    form,
    equal_in_uplus,
    star,
    bar_element,
    divided_power,
    serre_element,
    braid_apply,
    parse_element,
)
from .pbw import (
    PBWIndex,
    PBWBasis,
    real_root_vector,
    frame_root_vector,
    p_tilde,
    schur_S,
    pbw_indices_at_weight,
    pbw_element,
    precedes,
    expand_in_pbw,
    straightening,
    key_identity,
)
from .canonical import (
    CanonicalElement,
    bar_transition_matrix,
    canonical_basis_at_weight,
    is_bar_invariant,
)

__all__ = [
    'AlgElement',
    'form',
    'equal_in_uplus',
    'star',
    'bar_element',
    'divided_power',
    'serre_element',
    'braid_apply',
    'parse_element',
    'PBWIndex',
    'PBWBasis',
    'real_root_vector',
    'frame_root_vector',
    'p_tilde',
    'schur_S',
    'pbw_indices_at_weight',
    'pbw_element',
    'precedes',
    'expand_in_pbw',
    'straightening',
    'key_identity',
    'CanonicalElement',
    'bar_transition_matrix',
    'canonical_basis_at_weight',
    'is_bar_invariant',
]
