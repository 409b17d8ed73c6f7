"""
Canonical basis elements from a PBW basis.

The bar involution is expressed in the PBW basis of a weight space; when
that transition matrix is unitriangular over Laurent polynomials, the
canonical elements b(c, p) are obtained by descending induction on the
order, keeping the off-diagonal coefficients in q_s^{-1} Z[q_s^{-1}].
"""
import logging
from dataclasses import dataclass
from typing import Dict, List

from tqdm import tqdm

from ..algebra_core.qseries import LaurentPoly, RationalFunc
from ..algebra_core.rootdata import Root
from ..algebra_core.weyl import HSequence
from ..workbench_utils.errors import NonIntegralTransitionError, NotComputableError
from ..workbench_utils.logging import log_method_call
from .pbw import PBWBasis, PBWIndex, precedes
from .uplus import AlgElement, bar_element, equal_in_uplus

# Set up logging
logger = logging.getLogger(__name__)


@dataclass
class CanonicalElement:
    """b(c, p) together with its PBW coefficients."""

    index: PBWIndex
    element: AlgElement
    coefficients: Dict[PBWIndex, LaurentPoly]

    def to_json(self) -> Dict[str, object]:
        return {
            "index": self.index.to_json(),
            "label": self.index.label(),
            "pbw": [[c.label(), str(v)] for c, v in self.coefficients.items()],
            "element": self.element.to_json(),
        }


def bar_transition_matrix(basis: PBWBasis) -> List[List[LaurentPoly]]:
    """
    rho with bar(L_c) = sum_c' rho[c][c'] L_c', rows in basis order.

    Raises:
        NonIntegralTransitionError: If an entry is not a Laurent polynomial
    """
    rows: List[List[LaurentPoly]] = []
    for c, element in zip(basis.indices, basis.elements):
        expansion = basis.expand(bar_element(element))
        row = []
        for other in basis.indices:
            value = expansion.get(other, RationalFunc.zero())
            if not value.is_laurent():
                logger.error(f"bar transition entry ({c.label()}, {other.label()}) = {value}")
                raise NonIntegralTransitionError(
                    f"bar transition at {basis.nu} has non-Laurent entry {value}"
                )
            row.append(value.as_laurent())
        rows.append(row)
    return rows


def is_unitriangular(basis: PBWBasis, rho: List[List[LaurentPoly]]) -> bool:
    """Diagonal 1 and rho[c][c'] = 0 unless c <_p c'."""
    for a, c in enumerate(basis.indices):
        for b, other in enumerate(basis.indices):
            value = rho[a][b]
            if a == b:
                if value != 1:
                    return False
            elif not value.is_zero() and not precedes(c, other):
                return False
    return True


def correction_part(sigma: LaurentPoly) -> LaurentPoly:
    """
    The unique f in q_s^{-1} Q[q_s^{-1}] with f - bar(f) = sigma.

    Raises:
        NonIntegralTransitionError: If bar(sigma) != -sigma or sigma has a constant term
    """
    if sigma.bar() != -sigma or sigma.constant_term() != 0:
        raise NonIntegralTransitionError(f"induction residue {sigma} is not anti-bar-invariant")
    return sigma.negative_part()


@log_method_call()
def canonical_basis_at_weight(nu: Root, p: int, h: HSequence, transpose: bool = False,
                              limit: int = 0, show_progress: bool = False) -> Dict[PBWIndex, CanonicalElement]:
    """
    The canonical elements b(c, p) of weight nu.

    Args:
        nu: Weight in Q_+
        p: Frame
        h: The sequence fixing root vectors
        transpose: Use the transposed Schur determinant
        limit: Frame bound (0 for one tau-period)
        show_progress: Draw a progress bar

    Returns:
        Dict mapping each PBW index to its canonical element

    Raises:
        NonIntegralTransitionError: If the bar transition leaves Laurent polynomials
        NotComputableError: If the transition is not unitriangular in this frame
    """
    basis = PBWBasis(nu, p, h, transpose, limit, show_progress)
    rho = bar_transition_matrix(basis)
    if not is_unitriangular(basis, rho):
        raise NotComputableError(f"bar transition at {nu} is not unitriangular in frame {p}")

    size = len(basis)
    # coefficients[a][b]: coefficient of L_b in b_a
    coefficients: List[List[LaurentPoly]] = [[LaurentPoly.zero()] * size for _ in range(size)]
    order = range(size - 1, -1, -1)
    for a in tqdm(order, desc=f"canonical {nu}", disable=not show_progress):
        # bar(L_a) - L_a in the basis {b_c : c after a}, by forward substitution
        sigma: Dict[int, LaurentPoly] = {}
        for b in range(a + 1, size):
            value = rho[a][b]
            for c, s in sigma.items():
                value = value - s * coefficients[c][b]
            if not value.is_zero():
                sigma[b] = value
        coefficients[a][a] = LaurentPoly.one()
        for c, s in sigma.items():
            part = correction_part(s)
            if part.is_zero():
                continue
            for b in range(c, size):
                if not coefficients[c][b].is_zero():
                    coefficients[a][b] = coefficients[a][b] + part * coefficients[c][b]

    result: Dict[PBWIndex, CanonicalElement] = {}
    for a, c in enumerate(basis.indices):
        element = AlgElement.zero()
        support: Dict[PBWIndex, LaurentPoly] = {}
        for b in range(size):
            value = coefficients[a][b]
            if not value.is_zero():
                support[basis.indices[b]] = value
                element = element + basis.elements[b].scale(value)
        result[c] = CanonicalElement(c, element, support)
    logger.info(f"{len(result)} canonical elements at {nu} in frame {p}")
    return result


def is_bar_invariant(x: AlgElement, h: HSequence) -> bool:
    """bar(x) = x in U^+, decided through the form."""
    return equal_in_uplus(bar_element(x), x, h.datum)


def coefficients_are_small(element: CanonicalElement) -> bool:
    """Off-diagonal PBW coefficients lie in q_s^{-1} Z[q_s^{-1}]."""
    return all(
        value.in_q_inverse_z()
        for c, value in element.coefficients.items() if c != element.index
    )
