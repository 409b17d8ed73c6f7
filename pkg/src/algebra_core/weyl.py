"""
Affine and extended affine Weyl groups.

Elements are stored by their integer matrix on the root lattice, which is a
faithful representation of the extended group; the translation part, the
finite part and the diagram automorphism are read off that matrix. The
module also builds the reduced expression of omega~_n ... omega~_1, the
doubly infinite sequence h = (i_k) and the roots beta_k.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np
import sympy

from ..workbench_utils.config import INVERSION_DELTA_BOUND
from ..workbench_utils.errors import DomainError
from ..workbench_utils.logging import log_method_call
from .rootdata import ClWeight, Root, RootDatum, Weight, _solve

# Set up logging
logger = logging.getLogger(__name__)


def _exact_inverse(m: np.ndarray) -> np.ndarray:
    """
    Inverse of a unimodular integer matrix.

    Raises:
        DomainError: If the matrix is singular or its inverse is not integral
    """
    try:
        inv = sympy.Matrix(m.tolist()).inv()
    except ValueError as e:
        raise DomainError("matrix is singular") from e
    if any(not x.is_integer for x in inv):
        raise DomainError("matrix is not an element of the Weyl group")
    return np.array([[int(x) for x in row] for row in inv.tolist()], dtype=np.int64)


@dataclass(frozen=True)
class Decomposition:
    """w = t(xi) wbar with xi over the omega~ basis; tau is the length-zero residue."""

    xi: Tuple[int, ...]
    finite_word: Tuple[int, ...]
    tau: Tuple[int, ...]


class ExtendedWeylElement:
    """
    Element of the extended affine Weyl group W~ = P~ x| W_cl.

    Attributes:
        datum: Root datum the element acts on
        matrix: Integer matrix whose column j is w(alpha_j)
    """

    __slots__ = ('datum', 'matrix', '_inverse', '_key')

    def __init__(self, datum: RootDatum, matrix: np.ndarray):
        self.datum = datum
        self.matrix = np.asarray(matrix, dtype=np.int64)
        self.matrix.setflags(write=False)
        self._inverse: Optional[np.ndarray] = None
        self._key = self.matrix.tobytes()

    # constructors

    @classmethod
    def identity(cls, datum: RootDatum) -> "ExtendedWeylElement":
        return cls(datum, np.eye(datum.n + 1, dtype=np.int64))

    @classmethod
    def simple_reflection(cls, datum: RootDatum, i: int) -> "ExtendedWeylElement":
        m = np.eye(datum.n + 1, dtype=np.int64)
        m[i, :] -= np.array(datum.cartan[i], dtype=np.int64)
        return cls(datum, m)

    @classmethod
    def diagram_automorphism(cls, datum: RootDatum, perm: Sequence[int]) -> "ExtendedWeylElement":
        """
        The automorphism alpha_j -> alpha_perm[j].

        Raises:
            DomainError: If perm does not preserve the Cartan matrix
        """
        for i in datum.nodes:
            for j in datum.nodes:
                if datum.cartan[perm[i]][perm[j]] != datum.cartan[i][j]:
                    raise DomainError(f"{list(perm)} is not a diagram automorphism of {datum.affine_type}")
        m = np.zeros((datum.n + 1, datum.n + 1), dtype=np.int64)
        for j in datum.nodes:
            m[perm[j], j] = 1
        return cls(datum, m)

    @classmethod
    def translation(cls, datum: RootDatum, xi: ClWeight) -> "ExtendedWeylElement":
        """
        t(xi): alpha -> alpha - (alpha, xi) delta on the root lattice.

        Raises:
            DomainError: If xi pairs non-integrally with a simple root
        """
        m = np.eye(datum.n + 1, dtype=np.int64)
        for j in datum.nodes:
            shift = datum.cl_pair(datum.cl_simple(j), xi)
            if shift.denominator != 1:
                raise DomainError(f"translation by {xi} is not in the extended affine Weyl group")
            m[:, j] -= int(shift) * np.array(datum.marks, dtype=np.int64)
        return cls(datum, m)

    @classmethod
    def translation_omega(cls, datum: RootDatum, coords: Sequence[int]) -> "ExtendedWeylElement":
        """t(sum_i coords[i-1] omega~_i)."""
        xi = datum.cl_zero()
        for i, c in zip(datum.classical_nodes, coords):
            if c:
                xi = xi + datum.tilde_omega(i) * c
        return cls.translation(datum, xi)

    @classmethod
    def from_word(cls, datum: RootDatum, word: Sequence[int],
                  tau: Optional[Sequence[int]] = None) -> "ExtendedWeylElement":
        """s_{word[0]} ... s_{word[-1]} tau."""
        w = cls.identity(datum)
        for i in word:
            w = w * cls.simple_reflection(datum, i)
        if tau is not None:
            w = w * cls.diagram_automorphism(datum, tau)
        return w

    # group structure

    def __mul__(self, other: "ExtendedWeylElement") -> "ExtendedWeylElement":
        return ExtendedWeylElement(self.datum, self.matrix @ other.matrix)

    def inverse(self) -> "ExtendedWeylElement":
        if self._inverse is None:
            self._inverse = _exact_inverse(self.matrix)
        return ExtendedWeylElement(self.datum, self._inverse)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExtendedWeylElement):
            return NotImplemented
        return self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        word, tau = self.reduced_word()
        return f"ExtendedWeylElement(word={list(word)}, tau={list(tau)})"

    # actions

    def act(self, x: Union[Root, Weight]) -> Union[Root, Weight]:
        """Apply the element to a root or a weight; delta is fixed."""
        if isinstance(x, Root):
            return Root(tuple(int(c) for c in self.matrix @ np.array(x.coords, dtype=np.int64)))
        if isinstance(x, Weight):
            return self._act_weight(x)
        raise TypeError(f"cannot act on {type(x).__name__}")

    def _act_weight(self, w: Weight) -> Weight:
        datum = self.datum
        x, y = datum._root_coordinates(w)
        image = [sum((int(self.matrix[r, j]) * x[j] for j in datum.nodes), Fraction(0)) for r in datum.nodes]
        if y:
            # w(Lambda_0) = t(xi)(Lambda_0) = Lambda_0 + a_0^vee xi - (|xi|^2 a_0^vee / 2) delta
            xi = self._xi_root_coords()
            a0v = datum.comarks[0]
            norm = self._finite_pair(xi, xi)
            for j in datum.classical_nodes:
                image[j] += y * a0v * xi[j - 1]
            for j in datum.nodes:
                image[j] -= y * a0v * norm / 2 * datum.marks[j]
        lam = []
        for i in datum.nodes:
            v = sum((datum.cartan[i][j] * image[j] for j in datum.nodes), Fraction(0))
            if i == 0:
                v += y
            lam.append(int(v) if v.denominator == 1 else v)
        return Weight(tuple(lam), image[0])

    def act_cl(self, mu: ClWeight) -> ClWeight:
        """Action on level-zero classical weights through the finite part."""
        coords = self.datum_finite_coords(mu)
        f = self.finite_matrix()
        image = [sum((int(f[r, c]) * coords[c] for c in range(len(coords))), Fraction(0))
                 for r in range(len(coords))]
        return self._finite_to_cl(image)

    # decomposition

    def finite_matrix(self) -> np.ndarray:
        """Finite part wbar as an integer matrix on alpha_1..alpha_n."""
        datum = self.datum
        cols = []
        for j in datum.classical_nodes:
            col = Root(tuple(int(c) for c in self.matrix[:, j]))
            cols.append(datum.finite_part(col))
        return np.array(cols, dtype=np.int64).T.reshape(datum.n, datum.n)

    def _finite_pair(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
        g = self.datum.gram
        return sum((a * g[i + 1][j + 1] * b for i, a in enumerate(x) if a
                    for j, b in enumerate(y) if b), Fraction(0))

    def _xi_root_coords(self) -> List[Fraction]:
        """xi in rational coordinates over alpha_1..alpha_n."""
        datum = self.datum
        f = self.finite_matrix()
        rows = []
        for col_idx, j in enumerate(datum.classical_nodes):
            col = Root(tuple(int(c) for c in self.matrix[:, j]))
            k = datum.delta_degree(col)
            fcol = [int(v) for v in f[:, col_idx]]
            # (wbar alpha_j, xi) = -k_j
            coeffs = [sum((Fraction(fcol[a]) * datum.gram[a + 1][b + 1] for a in range(datum.n)), Fraction(0))
                      for b in range(datum.n)]
            rows.append(coeffs + [Fraction(-k)])
        return _solve(rows)

    def datum_finite_coords(self, mu: ClWeight) -> List[Fraction]:
        """Rational coordinates of a classical weight over cl(alpha_1..alpha_n)."""
        datum = self.datum
        rows = []
        for i in datum.classical_nodes:
            rows.append([Fraction(datum.cartan[i][j]) for j in datum.classical_nodes]
                        + [datum.cl_hvalue(mu, i)])
        return _solve(rows)

    def _finite_to_cl(self, coords: Sequence[Fraction]) -> ClWeight:
        datum = self.datum
        values = [sum((datum.cartan[i][j] * coords[j - 1] for j in datum.classical_nodes), Fraction(0))
                  for i in datum.classical_nodes]
        return datum.cl_from_hvalues(values)

    def translation_part(self) -> ClWeight:
        return self._finite_to_cl(self._xi_root_coords())

    def translation_decompose(self) -> Decomposition:
        """
        Canonical form w = t(xi) wbar, with tau the length-zero residue.

        Returns:
            Decomposition: xi over the omega~ basis, a reduced word of wbar, tau
        """
        datum = self.datum
        xi = self.translation_part()
        xi_coords = []
        for j in datum.classical_nodes:
            c = datum.cl_pair(datum.cl_simple(j), xi) / datum.d_i[j]
            if c.denominator != 1:
                raise DomainError(f"translation part {xi} is not in P~")
            xi_coords.append(int(c))
        wbar = self.finite_element()
        finite_word, _ = wbar.reduced_word()
        _, tau = self.reduced_word()
        return Decomposition(tuple(xi_coords), tuple(finite_word), tuple(tau))

    def finite_element(self) -> "ExtendedWeylElement":
        """wbar = t(-xi) w as an element."""
        return ExtendedWeylElement.translation(self.datum, -self.translation_part()) * self

    @classmethod
    def recompose(cls, datum: RootDatum, xi: Sequence[int], finite_word: Sequence[int]) -> "ExtendedWeylElement":
        return cls.translation_omega(datum, xi) * cls.from_word(datum, finite_word)

    # length

    def reduced_word(self) -> Tuple[List[int], Tuple[int, ...]]:
        """
        Greedy left descent: w = s_{i_1} ... s_{i_k} tau.

        The smallest admissible index is stripped at each step.
        """
        datum = self.datum
        inv = self._inverse if self._inverse is not None else _exact_inverse(self.matrix)
        self._inverse = inv
        current_inv = inv.copy()
        word: List[int] = []
        while True:
            descent = None
            for i in datum.nodes:
                col = current_inv[:, i]
                if np.all(col <= 0) and np.any(col < 0):
                    descent = i
                    break
            if descent is None:
                break
            word.append(descent)
            # (s_i w)^{-1} = w^{-1} s_i
            current_inv = current_inv @ ExtendedWeylElement.simple_reflection(datum, descent).matrix
        # remaining element maps simple roots to simple roots
        residue = _exact_inverse(current_inv)
        tau = []
        for j in datum.nodes:
            col = residue[:, j]
            hits = [k for k in datum.nodes if col[k] == 1]
            if len(hits) != 1 or int(col.sum()) != 1:
                raise DomainError("greedy descent did not terminate at a diagram automorphism")
            tau.append(hits[0])
        return word, tuple(tau)

    def length(self) -> int:
        return len(self.reduced_word()[0])

    def inversion_count(self, delta_bound: int = INVERSION_DELTA_BOUND) -> int:
        """#{alpha > 0 real : w(alpha) < 0} over roots of delta-degree <= delta_bound."""
        count = 0
        for root in self.datum.real_roots_up_to(delta_bound):
            if self.act(root).is_negative():
                count += 1
        return count


@dataclass(frozen=True)
class HSequence:
    """
    The doubly infinite sequence h = (i_k) with i_{k+N} = tau(i_k).

    Attributes:
        datum: Root datum
        base: i_1 .. i_N
        tau: Diagram automorphism of omega~_n ... omega~_1
    """

    datum: RootDatum
    base: Tuple[int, ...]
    tau: Tuple[int, ...]

    @property
    def N(self) -> int:
        return len(self.base)

    def _tau_power(self, j: int, times: int) -> int:
        if times >= 0:
            for _ in range(times):
                j = self.tau[j]
            return j
        inverse = {v: k for k, v in enumerate(self.tau)}
        for _ in range(-times):
            j = inverse[j]
        return j

    def letter(self, k: int) -> int:
        """i_k for any integer k."""
        q, r = divmod(k - 1, self.N)
        return self._tau_power(self.base[r], q)

    def window(self, m: int, p: int) -> List[int]:
        """i_m, ..., i_p."""
        return [self.letter(k) for k in range(m, p + 1)]

    def beta(self, k: int) -> Root:
        return _beta(self, k)

    def kind(self, k: int) -> str:
        return 'R>' if k <= 0 else 'R<'

    def order_key(self, k: int) -> Tuple[int, int]:
        """Position of beta_k in the order beta_0 < beta_-1 < ... < imaginary < ... < beta_2 < beta_1."""
        return (0, -k) if k <= 0 else (2, -k)

    def beta_index(self, root: Root, window: int) -> Optional[int]:
        """The k with beta_k = root, searching |k| <= window."""
        for k in range(-window, window + 1):
            if self.beta(k) == root:
                return k
        return None

    def __hash__(self) -> int:
        return hash((str(self.datum.affine_type), self.base, self.tau))


@lru_cache(maxsize=4096)
def _beta(h: HSequence, k: int) -> Root:
    datum = h.datum
    if k <= 0:
        root = datum.simple_root(h.letter(k))
        for m in range(k + 1, 1):
            root = datum.reflect(h.letter(m), root)
    else:
        root = datum.simple_root(h.letter(k))
        for m in range(k - 1, 0, -1):
            root = datum.reflect(h.letter(m), root)
    return root


def diagram_automorphisms(datum: RootDatum) -> List[Tuple[int, ...]]:
    """Length-zero elements of W~ (the group T), as node permutations."""
    found = set()
    for i in datum.classical_nodes:
        _, tau = ExtendedWeylElement.translation(datum, datum.tilde_omega(i)).reduced_word()
        found.add(tau)
    found.add(tuple(datum.nodes))
    # close under composition
    changed = True
    while changed:
        changed = False
        for a in list(found):
            for b in list(found):
                c = tuple(a[b[j]] for j in datum.nodes)
                if c not in found:
                    found.add(c)
                    changed = True
    return sorted(found)


@log_method_call()
def omega_word(datum: RootDatum) -> HSequence:
    """
    Reduced expression of omega~_n ... omega~_1 = s_{i_1} ... s_{i_N} tau.

    Each omega~_i tau_i^{-1} is descended greedily and the pieces are
    concatenated from i = n down to 1, relabelled by the accumulated
    diagram automorphism, so omega~_n appears first.

    Raises:
        DomainError: If the concatenated word is not reduced
    """
    letters: List[int] = []
    sigma = tuple(datum.nodes)
    for i in reversed(datum.classical_nodes):
        element = ExtendedWeylElement.translation(datum, datum.tilde_omega(i))
        word, tau_i = element.reduced_word()
        letters.extend(sigma[j] for j in word)
        sigma = tuple(sigma[tau_i[j]] for j in datum.nodes)

    total = ExtendedWeylElement.translation_omega(datum, [1] * datum.n)
    check = ExtendedWeylElement.from_word(datum, letters, sigma)
    if check != total:
        raise DomainError("omega word does not reproduce the translation")
    if ExtendedWeylElement.from_word(datum, letters).length() != len(letters):
        raise DomainError("omega word is not reduced")
    logger.info(f"{datum.affine_type}: omega word {letters} with tau {list(sigma)}")
    return HSequence(datum, tuple(letters), sigma)
