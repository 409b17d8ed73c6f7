"""
PBW-type bases of U^+ built from the sequence h.

Real root vectors are obtained by braiding simple generators along h,
imaginary ones by the psi~ / P~ recursion, and the PBW-type elements
L(c, p) are ordered products of divided powers of both. Expansions in a
PBW basis are computed by solving the Gram system of the form.
"""
import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from tqdm import tqdm

from ..algebra_core.linalg import rank, solve
from ..algebra_core.qseries import LaurentPoly, RationalFunc, q_integer
from ..algebra_core.rootdata import Root, RootDatum
from ..algebra_core.weyl import HSequence
from ..workbench_utils.config import PBW_SCAN_SLACK
from ..workbench_utils.errors import DomainError, LetterInvalidError, NotComputableError
from ..workbench_utils.logging import log_method_call
from .uplus import (
    AlgElement,
    braid_apply,
    element_divided_power,
    form,
    gram_matrix,
    product,
    words_of_weight,
)

# Set up logging
logger = logging.getLogger(__name__)

Partition = Tuple[int, ...]


# frames and real root vectors

def frame_limit(h: HSequence, limit: int = 0) -> int:
    return limit if limit > 0 else h.N


def check_frame(p: int, h: HSequence, limit: int = 0) -> None:
    """
    Raises:
        DomainError: If |p| exceeds the frame limit
    """
    bound = frame_limit(h, limit)
    if abs(p) > bound:
        raise DomainError(f"frame {p} outside the supported range |p| <= {bound}")


def frame_beta(j: int, p: int, h: HSequence) -> Root:
    """Weight of the j-th root vector in frame p; frame 0 gives beta_j."""
    datum = h.datum
    root = datum.simple_root(h.letter(j))
    if j <= p:
        for m in range(j + 1, p + 1):
            root = datum.reflect(h.letter(m), root)
    else:
        for m in range(j - 1, p, -1):
            root = datum.reflect(h.letter(m), root)
    return root


def _one_dimensional_vector(nu: Root, target: RationalFunc, datum: RootDatum) -> Optional[AlgElement]:
    """The element of norm target spanning a one-dimensional weight space, or None."""
    words = words_of_weight(nu.coords)
    if len(words) > 1:
        _, matrix = gram_matrix(nu.coords, datum)
        if rank(matrix) != 1:
            return None
    for w in words:
        norm = form(AlgElement.word(w), AlgElement.word(w), datum)
        if norm.is_zero():
            continue
        ratio = target / norm
        try:
            scale = RationalFunc(ratio.num.sqrt(), ratio.den.sqrt())
        except DomainError:
            return None
        if _leading_sign(scale) < 0:
            scale = -scale
        return AlgElement.word(w, scale)
    return None


def _leading_sign(f: RationalFunc) -> int:
    lead = f.num.leading_coefficient() * f.den.leading_coefficient()
    return (lead > 0) - (lead < 0)


_ROOT_VECTORS: Dict[Tuple[HSequence, int, int], AlgElement] = {}


def frame_root_vector(j: int, p: int, h: HSequence) -> AlgElement:
    """
    Root vector number j in frame p.

    For j <= p this is T_{i_p}^{-1} ... T_{i_{j+1}}^{-1}(E_{i_j}); for j > p it
    is T_{i_{p+1}} ... T_{i_{j-1}}(E_{i_j}). When a braid step meets its own
    letter the one-dimensional weight-space fallback is tried.

    Raises:
        NotComputableError: If neither route yields the vector
    """
    key = (h, j, p)
    if key in _ROOT_VECTORS:
        return _ROOT_VECTORS[key]
    datum = h.datum
    x = AlgElement.generator(h.letter(j))
    try:
        if j <= p:
            for m in range(j + 1, p + 1):
                x = braid_apply(h.letter(m), x, datum, inverse=True)
        else:
            for m in range(j - 1, p, -1):
                x = braid_apply(h.letter(m), x, datum)
    except LetterInvalidError:
        beta = frame_beta(j, p, h)
        generator = AlgElement.generator(h.letter(j))
        x = _one_dimensional_vector(beta, form(generator, generator, datum), datum)
        if x is None:
            raise NotComputableError(
                f"root vector for {beta} (index {j}) is not computable in frame {p}"
            ) from None
        logger.debug(f"root vector {beta} in frame {p} taken from a one-dimensional weight space")
    _ROOT_VECTORS[key] = x
    return x


def real_root_vector(k: int, h: HSequence) -> AlgElement:
    """E_{beta_k}."""
    return frame_root_vector(k, 0, h)


def root_vector_norm_ok(k: int, h: HSequence) -> bool:
    """(E_{beta_k}, E_{beta_k}) = (E_{i_k}, E_{i_k})."""
    datum = h.datum
    x = real_root_vector(k, h)
    g = AlgElement.generator(h.letter(k))
    return form(x, x, datum) == form(g, g, datum)


def locate_root(root: Root, h: HSequence, window: int) -> int:
    """
    Raises:
        NotComputableError: If root is not beta_k for |k| <= window
    """
    k = h.beta_index(root, window)
    if k is None:
        raise NotComputableError(f"{root} is not reached by h within |k| <= {window}")
    return k


# imaginary root vectors

def _search_window(h: HSequence, degree: int) -> int:
    top = max(h.datum.d_i[i] for i in h.datum.classical_nodes)
    return h.N * (degree * int(top) + 2)


def _d(datum: RootDatum, i: int) -> int:
    value = datum.d_i[i]
    if value.denominator != 1:
        raise DomainError(f"d_{i} = {value} is not integral")
    return int(value)


_PSI: Dict[Tuple[HSequence, int, int], AlgElement] = {}
_PTILDE: Dict[Tuple[HSequence, int, int], AlgElement] = {}


def psi_tilde(i: int, k: int, h: HSequence) -> AlgElement:
    """psi~_{i,k d_i} = E_{k d_i delta - alpha_i} E_{alpha_i} - q_i^{-2} E_{alpha_i} E_{k d_i delta - alpha_i}."""
    if k < 1:
        raise DomainError(f"psi~ needs k >= 1, got {k}")
    datum = h.datum
    if i not in datum.classical_nodes:
        raise DomainError(f"psi~ is indexed by classical nodes, got {i}")
    key = (h, i, k)
    if key not in _PSI:
        d = _d(datum, i)
        window = _search_window(h, k)
        alpha = datum.simple_root(i)
        low = real_root_vector(locate_root(alpha, h, window), h)
        high = real_root_vector(locate_root(datum.delta * (k * d) - alpha, h, window), h)
        twist = LaurentPoly.monomial(-2 * datum.node_exponent(i))
        _PSI[key] = high * low - (low * high).scale(twist)
    return _PSI[key]


def p_tilde(i: int, k: int, h: HSequence) -> AlgElement:
    """
    The integral imaginary root vector P~_{i, k d_i}.

    P~_{i,0} = 1 and
    P~_{i,k d_i} = [k]_i^{-1} sum_{s=1}^{k} q_i^{s-k} psi~_{i,s d_i} P~_{i,(k-s) d_i},
    with [2k]_n and q_n^{2(s-k)} at the short node of A_{2n}^(2).
    """
    if k < 0:
        return AlgElement.zero()
    if k == 0:
        return AlgElement.one()
    key = (h, i, k)
    if key in _PTILDE:
        return _PTILDE[key]
    datum = h.datum
    e = datum.node_exponent(i)
    short_node = datum.affine_type.is_a_even_twisted and i == datum.n
    total = AlgElement.zero()
    for s in range(1, k + 1):
        power = 2 * (s - k) if short_node else (s - k)
        term = psi_tilde(i, s, h) * p_tilde(i, k - s, h)
        total = total + term.scale(LaurentPoly.monomial(e * power))
    norm = q_integer(2 * k if short_node else k, e)
    result = total.scale(RationalFunc(1, norm))
    _PTILDE[key] = result
    logger.debug(f"P~_({i},{k}) has {len(result.terms)} words")
    return result


def transpose_partition(rho: Sequence[int]) -> Partition:
    if not rho:
        return ()
    return tuple(sum(1 for part in rho if part > k) for k in range(rho[0]))


def _determinant(matrix: List[List[AlgElement]]) -> AlgElement:
    """Row-ordered Laplace expansion; entries commute in U^+."""
    size = len(matrix)
    if size == 0:
        return AlgElement.one()
    if size == 1:
        return matrix[0][0]
    total = AlgElement.zero()
    for col in range(size):
        entry = matrix[0][col]
        if entry.is_zero():
            continue
        minor = [row[:col] + row[col + 1:] for row in matrix[1:]]
        term = entry * _determinant(minor)
        total = total + (term if col % 2 == 0 else -term)
    return total


def schur_node(i: int, rho: Sequence[int], h: HSequence, transpose: bool = False) -> AlgElement:
    """S_rho at node i: det(P~_{i,(rho^t_k - k + m) d_i})_{k,m}."""
    shape = tuple(rho) if transpose else transpose_partition(rho)
    t = len(shape)
    matrix = [[p_tilde(i, shape[a] - a + b, h) for b in range(t)] for a in range(t)]
    return _determinant(matrix)


def schur_S(c_zero: Sequence[Sequence[int]], h: HSequence, transpose: bool = False) -> AlgElement:
    """S_{c_0} = prod_{i in I_0} S_{rho^(i)} in node order."""
    datum = h.datum
    if len(c_zero) != datum.n:
        raise DomainError(f"expected {datum.n} partitions, got {len(c_zero)}")
    return product(
        schur_node(i, rho, h, transpose)
        for i, rho in zip(datum.classical_nodes, c_zero) if rho
    )


# PBW indices

@dataclass(frozen=True)
class PBWIndex:
    """
    A triple (c_+, c_0, c_-) read in frame p.

    Attributes:
        real: Sorted pairs (j, c(j)) with c(j) > 0
        c_zero: One partition per classical node
        p: Frame
    """

    real: Tuple[Tuple[int, int], ...]
    c_zero: Tuple[Partition, ...]
    p: int = 0

    def multiplicity(self, j: int) -> int:
        return dict(self.real).get(j, 0)

    def c_plus(self, width: int) -> Tuple[int, ...]:
        """(c(p), c(p-1), ...) padded to width."""
        return tuple(self.multiplicity(self.p - k) for k in range(width))

    def c_minus(self, width: int) -> Tuple[int, ...]:
        """(c(p+1), c(p+2), ...) padded to width."""
        return tuple(self.multiplicity(self.p + 1 + k) for k in range(width))

    @property
    def has_plus(self) -> bool:
        return any(j <= self.p for j, _ in self.real)

    @property
    def has_minus(self) -> bool:
        return any(j > self.p for j, _ in self.real)

    @property
    def span(self) -> int:
        """Width needed to read c_+ and c_- in full."""
        if not self.real:
            return 1
        return max(max(self.p - j + 1, j - self.p) for j, _ in self.real)

    def imaginary_degree(self, datum: RootDatum) -> int:
        return sum(sum(rho) * _d(datum, i) for i, rho in zip(datum.classical_nodes, self.c_zero))

    def weight(self, h: HSequence) -> Root:
        datum = h.datum
        total = datum.delta * self.imaginary_degree(datum)
        for j, m in self.real:
            total = total + frame_beta(j, self.p, h) * m
        return total

    def label(self) -> str:
        plus = " ".join(f"E[{j}]^({m})" for j, m in sorted(self.real, reverse=True) if j <= self.p)
        minus = " ".join(f"E[{j}]^({m})" for j, m in sorted(self.real, reverse=True) if j > self.p)
        zero = "S" + str([list(rho) for rho in self.c_zero]).replace(" ", "")
        return " ".join(part for part in (plus, zero, minus) if part)

    def to_json(self) -> Dict[str, object]:
        return {
            "real": [[j, m] for j, m in self.real],
            "c_zero": [list(rho) for rho in self.c_zero],
            "p": self.p,
        }


def precedes(c: PBWIndex, other: PBWIndex) -> bool:
    """
    c <_p other: c_+ <= other_+ and c_- <= other_- lexicographically, one strictly.

    The imaginary parts are not compared.
    """
    if c.p != other.p:
        raise DomainError("PBW indices from different frames are not comparable")
    width = max(c.span, other.span)
    plus, plus_other = c.c_plus(width), other.c_plus(width)
    minus, minus_other = c.c_minus(width), other.c_minus(width)
    if plus > plus_other or minus > minus_other:
        return False
    return plus < plus_other or minus < minus_other


def linear_extension_key(c: PBWIndex, width: int) -> Tuple:
    return (c.c_plus(width), c.c_minus(width), c.c_zero)


def _partitions(m: int, largest: Optional[int] = None) -> Iterator[Partition]:
    if m == 0:
        yield ()
        return
    largest = m if largest is None else largest
    for first in range(min(m, largest), 0, -1):
        for rest in _partitions(m - first, first):
            yield (first,) + rest


def _imaginary_parts(datum: RootDatum, m: int) -> List[Tuple[Partition, ...]]:
    """Tuples of partitions with sum_i |rho^(i)| d_i = m."""
    nodes = list(datum.classical_nodes)
    out: List[Tuple[Partition, ...]] = []

    def extend(pos: int, left: int, acc: List[Partition]) -> None:
        if pos == len(nodes):
            if left == 0:
                out.append(tuple(acc))
            return
        d = _d(datum, nodes[pos])
        for size in range(0, left // d + 1):
            for rho in _partitions(size):
                extend(pos + 1, left - size * d, acc + [rho])

    extend(0, m, [])
    return out


def _real_candidates(nu: Root, p: int, h: HSequence) -> List[Tuple[int, Root]]:
    """(j, frame root) for every positive real root dominated by nu."""
    datum = h.datum
    degree = nu.coords[0]
    wanted = {r for r in datum.real_roots_up_to(degree) if nu.dominates(r)}
    bound = h.N * (degree + 2 + PBW_SCAN_SLACK)
    found: Dict[Root, int] = {}
    for offset in range(bound + 1):
        for j in (p - offset, p + 1 + offset):
            root = frame_beta(j, p, h)
            if root in wanted and root not in found:
                found[root] = j
        if len(found) == len(wanted):
            break
    missing = wanted - set(found)
    if missing:
        raise NotComputableError(f"roots {sorted(str(r) for r in missing)} not reached in frame {p}")
    return sorted(((j, r) for r, j in found.items()), key=lambda t: t[0])


@log_method_call()
def pbw_indices_at_weight(nu: Root, p: int, h: HSequence) -> List[PBWIndex]:
    """
    Every PBW index of weight nu in frame p.

    Raises:
        DomainError: If nu is not in Q_+
    """
    datum = h.datum
    if any(c < 0 for c in nu.coords):
        raise DomainError(f"{nu} is not a nonnegative combination of simple roots")
    candidates = _real_candidates(nu, p, h)
    max_m = min(c // mark for c, mark in zip(nu.coords, datum.marks))
    results: List[PBWIndex] = []

    def decompose(pos: int, left: Root, acc: List[Tuple[int, int]], c_zero) -> None:
        if left.is_zero():
            results.append(PBWIndex(tuple(sorted(acc)), c_zero, p))
            return
        if pos == len(candidates):
            return
        j, root = candidates[pos]
        decompose(pos + 1, left, acc, c_zero)
        mult = 1
        rest = left - root
        while all(c >= 0 for c in rest.coords):
            decompose(pos + 1, rest, acc + [(j, mult)], c_zero)
            mult += 1
            rest = rest - root

    for m in range(max_m + 1):
        remainder = nu - datum.delta * m
        for c_zero in _imaginary_parts(datum, m):
            decompose(0, remainder, [], c_zero)
    logger.debug(f"{len(results)} PBW indices at {nu} in frame {p}")
    return results


# PBW elements

def _middle_factor(c_zero: Tuple[Partition, ...], p: int, h: HSequence, transpose: bool) -> AlgElement:
    s = schur_S(c_zero, h, transpose)
    if p == 0 or not any(c_zero):
        return s
    datum = h.datum
    try:
        if p < 0:
            for m in range(0, p, -1):
                s = braid_apply(h.letter(m), s, datum)
        else:
            for m in range(1, p + 1):
                s = braid_apply(h.letter(m), s, datum, inverse=True)
    except LetterInvalidError:
        raise NotComputableError(
            f"imaginary factor {[list(r) for r in c_zero]} is not computable in frame {p}"
        ) from None
    return s


def pbw_element(idx: PBWIndex, h: HSequence, transpose: bool = False, limit: int = 0) -> AlgElement:
    """
    L(c, p) = E_{c_{+p}} (braided S_{c_0}) E_{c_{-p}} with divided powers.

    Raises:
        NotComputableError: If some factor is out of reach in frame p
    """
    check_frame(idx.p, h, limit)
    datum = h.datum
    p = idx.p
    plus = [(j, m) for j, m in sorted(idx.real, reverse=True) if j <= p]
    minus = [(j, m) for j, m in sorted(idx.real, reverse=True) if j > p]
    factors = [
        element_divided_power(frame_root_vector(j, p, h), m, datum.node_exponent(h.letter(j)))
        for j, m in plus
    ]
    factors.append(_middle_factor(idx.c_zero, p, h, transpose))
    factors.extend(
        element_divided_power(frame_root_vector(j, p, h), m, datum.node_exponent(h.letter(j)))
        for j, m in minus
    )
    return product(factors)


def homogeneous_weight(x: AlgElement, datum: RootDatum) -> Root:
    """
    Raises:
        DomainError: If x is zero or not homogeneous
    """
    weights = x.weights(datum.n + 1)
    if len(weights) != 1:
        raise DomainError(f"expected a homogeneous nonzero element, found weights {weights}")
    return Root(weights[0])


class PBWBasis:
    """
    The PBW basis {L(c, p)} of one weight space.

    Indices are kept in the order of a linear extension of <_p; the Gram
    matrix is computed once and reused for every expansion.
    """

    def __init__(self, nu: Root, p: int, h: HSequence, transpose: bool = False,
                 limit: int = 0, show_progress: bool = False):
        check_frame(p, h, limit)
        self.nu = nu
        self.p = p
        self.h = h
        self.datum = h.datum
        self.transpose = transpose
        indices = pbw_indices_at_weight(nu, p, h)
        self.width = max((c.span for c in indices), default=1)
        self.indices = sorted(indices, key=lambda c: linear_extension_key(c, self.width))
        iterator = tqdm(self.indices, desc=f"PBW {nu}", disable=not show_progress)
        self.elements = [pbw_element(c, h, transpose, limit) for c in iterator]
        self.position = {c: k for k, c in enumerate(self.indices)}

    def __len__(self) -> int:
        return len(self.indices)

    @cached_property
    def gram(self) -> List[List[RationalFunc]]:
        size = len(self.elements)
        matrix = [[RationalFunc.zero()] * size for _ in range(size)]
        for a in range(size):
            for b in range(a, size):
                value = form(self.elements[a], self.elements[b], self.datum)
                matrix[a][b] = matrix[b][a] = value
        return matrix

    def expand(self, x: AlgElement) -> Dict[PBWIndex, RationalFunc]:
        """
        Coefficients of x in this basis, zeros omitted.

        Raises:
            DomainError: If the Gram system is singular
        """
        if x.is_zero():
            return {}
        rhs = [[form(x, e, self.datum)] for e in self.elements]
        try:
            solution = solve(self.gram, rhs)
        except DomainError as e:
            logger.error(f"Gram system at {self.nu} is singular; PBW enumeration is incomplete")
            raise DomainError(f"singular Gram matrix of PBW elements at {self.nu}") from e
        return {c: row[0] for c, row in zip(self.indices, solution) if not row[0].is_zero()}

    def almost_orthonormal(self) -> bool:
        """(L_c, L_c') - delta_cc' vanishes at q_s = infinity for all pairs."""
        for a, row in enumerate(self.gram):
            for b, value in enumerate(row):
                diff = value - 1 if a == b else value
                if diff.ord_at_infinity() < 1:
                    return False
        return True

    def element(self, c: PBWIndex) -> AlgElement:
        return self.elements[self.position[c]]


def expand_in_pbw(x: AlgElement, p: int, h: HSequence, transpose: bool = False) -> Dict[PBWIndex, RationalFunc]:
    """Coefficients of a homogeneous x in the frame-p PBW basis."""
    if x.is_zero():
        return {}
    nu = homogeneous_weight(x, h.datum)
    return PBWBasis(nu, p, h, transpose).expand(x)


def is_integral_in_pbw(x: AlgElement, p: int, h: HSequence) -> bool:
    """True iff every PBW coefficient of x is a Laurent polynomial over Z."""
    for c in expand_in_pbw(x, p, h).values():
        if not c.is_laurent() or not c.as_laurent().has_integer_coefficients():
            return False
    return True


# straightening and key identity checks

@dataclass
class StraighteningReport:
    """Expansion of an out-of-order product of two real root vectors."""

    ordered: PBWIndex
    coefficient: RationalFunc
    others: Dict[PBWIndex, RationalFunc] = field(default_factory=dict)
    between: bool = True


def straightening(j1: int, j2: int, h: HSequence) -> StraighteningReport:
    """
    Expand E_{beta_b} E_{beta_a} for beta_a < beta_b on the same side of the order.

    The product in order is E_{beta_a} E_{beta_b}; every other PBW index in
    the expansion is expected to use only roots strictly between the two.
    """
    if (j1 <= 0) != (j2 <= 0) or j1 == j2:
        raise DomainError("straightening needs two distinct indices on the same side")
    a, b = sorted((j1, j2), key=lambda j: h.order_key(j))
    x = real_root_vector(b, h) * real_root_vector(a, h)
    nu = h.beta(a) + h.beta(b)
    basis = PBWBasis(nu, 0, h)
    expansion = basis.expand(x)
    ordered = PBWIndex(tuple(sorted({a: 1, b: 1}.items())), tuple(() for _ in h.datum.classical_nodes), 0)
    coefficient = expansion.pop(ordered, RationalFunc.zero())
    low, high = h.order_key(a), h.order_key(b)
    between = all(
        not any(c.c_zero) and all(low < h.order_key(j) < high for j, _ in c.real)
        for c in expansion
    )
    return StraighteningReport(ordered, coefficient, expansion, between)


@dataclass
class KeyIdentityReport:
    """P~_{i,k d_i} minus its leading product, expanded in the frame-0 basis."""

    residual: Dict[PBWIndex, RationalFunc]
    coefficients_small: bool
    both_sides: bool
    lower_imaginary: bool

    @property
    def holds(self) -> bool:
        return self.coefficients_small and self.both_sides and self.lower_imaginary


def key_identity(i: int, k: int, h: HSequence) -> KeyIdentityReport:
    """
    Check P~_{i,k d_i} = E_{d_i delta - alpha_i}^{(k)} E_i^{(k)} + q_s^{-1} x.

    At the short node of A_{2n}^(2) the leading term is
    E_{delta - 2 alpha_n}^{(k)} E_n^{(2k)}. x must be a Z[q_s^{-1}] combination
    of PBW elements having both real parts nonzero and only imaginary
    factors of degree below k.
    """
    datum = h.datum
    d = _d(datum, i)
    short_node = datum.affine_type.is_a_even_twisted and i == datum.n
    window = _search_window(h, k)
    alpha = datum.simple_root(i)
    upper = datum.delta - alpha * 2 if short_node else datum.delta * d - alpha
    e_i = datum.node_exponent(i)
    high = real_root_vector(locate_root(upper, h, window), h)
    high_exponent = datum.epair(upper.coords, upper.coords) // 2
    leading = element_divided_power(high, k, high_exponent) * element_divided_power(
        AlgElement.generator(i), 2 * k if short_node else k, e_i
    )
    residual = expand_in_pbw(p_tilde(i, k, h) - leading, 0, h)
    small = all(c.is_laurent() and c.as_laurent().in_q_inverse_z() for c in residual.values())
    sides = all(c.has_plus and c.has_minus for c in residual)
    lower = all(sum(map(sum, c.c_zero)) < k for c in residual)
    report = KeyIdentityReport(residual, small, sides, lower)
    logger.info(f"key identity for P~_({i},{k}): {'holds' if report.holds else 'fails'}")
    return report

