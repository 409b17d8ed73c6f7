"""
The limit ring J_lambda and its cells.

J_lambda has basis triples (b, s, b') with b, b' in B_W(lambda) and s an
irreducible representation of G_lambda = prod_i GL_{lambda_i}; products are
t_(b1,s,b2) t_(b2',s',b3) = delta_{b2,b2'} sum_s'' c^{s''}_{s s'} t_(b1,s'',b3).
Cells are computed from the nonzero structure constants on a truncated
basis and compared with the closed form.
"""
import logging
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from math import comb
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx
from tqdm import tqdm

from ..algebra_core.rootdata import ClWeight, RootDatum
from ..workbench_utils.config import DEFAULT_TRUNC_BOXES, DEFAULT_TRUNC_DET
from ..workbench_utils.errors import DomainError, InconclusiveError
from ..workbench_utils.logging import ComputationLogger, log_method_call
from .crystals import TensorCrystal, TensorElement, build_BW, require_type_a
from .symfun import GProdRep, rep_multiply, truncated_irreps

# Set up logging
logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class CellTriple:
    """A basis element t_(b, s, b') of J_lambda."""

    b: TensorElement
    s: GProdRep
    b_prime: TensorElement

    def __str__(self) -> str:
        return f"({self.b}; {self.s}; {self.b_prime})"


@lru_cache(maxsize=65536)
def _structure(s: GProdRep, t: GProdRep) -> Tuple[Tuple[GProdRep, int], ...]:
    return tuple(rep_multiply(s, t).items())


class JRingElement:
    """Finite integer combination of cell triples."""

    __slots__ = ('terms', 'lam')

    def __init__(self, terms: Dict[CellTriple, int], lam: Tuple[int, ...]):
        self.terms = {t: c for t, c in terms.items() if c}
        self.lam = lam

    @classmethod
    def basis(cls, triple: CellTriple, lam: Tuple[int, ...]) -> "JRingElement":
        return cls({triple: 1}, lam)

    def _check(self, other: "JRingElement") -> None:
        if self.lam != other.lam:
            raise DomainError(f"elements of J_{list(self.lam)} and J_{list(other.lam)} cannot be combined")

    def __add__(self, other: "JRingElement") -> "JRingElement":
        self._check(other)
        out = dict(self.terms)
        for t, c in other.terms.items():
            out[t] = out.get(t, 0) + c
        return JRingElement(out, self.lam)

    def __mul__(self, other) -> "JRingElement":
        if isinstance(other, int):
            return JRingElement({t: c * other for t, c in self.terms.items()}, self.lam)
        return j_multiply(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, JRingElement):
            return NotImplemented
        return self.lam == other.lam and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.lam, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> List[CellTriple]:
        return sorted(self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*{t}" for t, c in sorted(self.terms.items()))


def j_multiply(x: JRingElement, y: JRingElement) -> JRingElement:
    """
    Bilinear extension of the triple product.

    Raises:
        DomainError: If x and y live in different rings
    """
    x._check(y)
    by_left: Dict[TensorElement, List[Tuple[CellTriple, int]]] = defaultdict(list)
    for t, c in y.terms.items():
        by_left[t.b].append((t, c))
    out: Dict[CellTriple, int] = defaultdict(int)
    for t1, c1 in x.terms.items():
        for t2, c2 in by_left.get(t1.b_prime, ()):
            for s, mult in _structure(t1.s, t2.s):
                out[CellTriple(t1.b, s, t2.b_prime)] += c1 * c2 * mult
    return JRingElement(dict(out), x.lam)


class JRing:
    """
    J_lambda for type A_n^(1) with a truncated basis.

    Args:
        datum: Root datum of type A_n^(1)
        lam: Dominant weight (lambda_1, ..., lambda_n)
        max_boxes: Polynomial boxes allowed in Irr G_lambda
        max_det: Largest |determinant power| allowed in Irr G_lambda
    """

    def __init__(self, datum: RootDatum, lam: Sequence[int],
                 max_boxes: int = DEFAULT_TRUNC_BOXES, max_det: int = DEFAULT_TRUNC_DET):
        require_type_a(datum)
        self.datum = datum
        self.crystal: TensorCrystal = build_BW(datum, lam)
        self.lam = self.crystal.lam
        self.max_boxes = max_boxes
        self.max_det = max_det
        self.irreps = truncated_irreps(self.lam, max_boxes, max_det)
        self._irrep_set = set(self.irreps)

    @property
    def ranks(self) -> Tuple[int, ...]:
        return self.lam

    def truncated_basis(self) -> List[CellTriple]:
        elems = self.crystal.elements()
        return [CellTriple(b, s, bp) for b in elems for s in self.irreps for bp in elems]

    def in_truncation(self, t: CellTriple) -> bool:
        return t.s in self._irrep_set

    def element(self, triple: CellTriple) -> JRingElement:
        return JRingElement.basis(triple, self.lam)

    def identity(self) -> JRingElement:
        """The generalized unit sum_b t_(b, 1, b)."""
        trivial = GProdRep.trivial(self.lam)
        return JRingElement({CellTriple(b, trivial, b): 1 for b in self.crystal.elements()}, self.lam)

    # distinguished involutions

    def d_set(self) -> List[CellTriple]:
        trivial = GProdRep.trivial(self.lam)
        return [CellTriple(b, trivial, b) for b in self.crystal.elements()]

    def d_count(self) -> int:
        return len(self.d_set())

    # a-function

    def dominant_weight(self) -> ClWeight:
        return self.crystal.dominant_weight()

    def a_function(self, triple: CellTriple) -> Fraction:
        """
        a = ((lambda, lambda) - (mu, mu)) / 2 with mu the weight of b'.

        This is -(wt, 2 lambda + wt) / 2 for the relative weight wt = mu - lambda.
        """
        lam = self.dominant_weight()
        rel = self.crystal.weight(triple.b_prime) - lam
        return -self.datum.cl_pair(rel, lam * 2 + rel) / 2

    # module V(lambda)_0

    def v0_action(self, x: JRingElement, v: Dict[Tuple[TensorElement, GProdRep], int]
                  ) -> Dict[Tuple[TensorElement, GProdRep], int]:
        """(d1, d2, s) . (d', s') = delta_{d2, d'} sum_s'' c^{s''}_{s s'} (d1, s'')."""
        if x.lam != self.lam:
            raise DomainError(f"element of J_{list(x.lam)} acting on V(lambda)_0 for {list(self.lam)}")
        out: Dict[Tuple[TensorElement, GProdRep], int] = defaultdict(int)
        for t, c in x.terms.items():
            for (d, s), k in v.items():
                if d != t.b_prime:
                    continue
                for s2, mult in _structure(t.s, s):
                    out[(t.b, s2)] += c * k * mult
        return {key: value for key, value in sorted(out.items()) if value}

    # bicrystal structure

    def _act_pair(self, i: int, b: TensorElement, s: GProdRep, raising: bool
                  ) -> Optional[Tuple[TensorElement, GProdRep]]:
        crystal = self.crystal
        e_pos, f_pos, _, _ = crystal.signature(i, b)
        pos = e_pos if raising else f_pos
        new_b = crystal.e(i, b) if raising else crystal.f(i, b)
        if new_b is None:
            return None
        if i != 0:
            return new_b, s
        level = crystal.levels[pos]
        change = 1 if raising else -1
        comps = list(s.components)
        slot = level - 1
        if self.lam[slot] == 1:
            comps[slot] = comps[slot].twist(change)
            ComputationLogger.log_bicrystal_drift(i, 'e' if raising else 'f', change)
        else:
            logger.debug(f"{'e' if raising else 'f'}_0 at a GL_{self.lam[slot]} factor: drift {change:+d} recorded, s kept")
        return new_b, GProdRep(tuple(comps))

    def bicrystal_ops(self, triple: CellTriple, i: int, which: str) -> Optional[CellTriple]:
        """
        e_i / f_i act on (b, s); e#_i / f#_i act on (b', s^#) and dualize back.

        Args:
            triple: Cell triple
            i: Node
            which: One of 'e', 'f', 'e#', 'f#'
        """
        if which not in ('e', 'f', 'e#', 'f#'):
            raise DomainError(f"unknown bicrystal operator '{which}'")
        raising = which.startswith('e')
        if which.endswith('#'):
            result = self._act_pair(i, triple.b_prime, triple.s.dual(), raising)
            if result is None:
                return None
            b_prime, s_dual = result
            return CellTriple(triple.b, s_dual.dual(), b_prime)
        result = self._act_pair(i, triple.b, triple.s, raising)
        if result is None:
            return None
        b, s = result
        return CellTriple(b, s, triple.b_prime)

    def bicrystal_weight(self, triple: CellTriple) -> Tuple[ClWeight, ClWeight]:
        """(wt of (b, s), wt of the dual pair (b', s^#)) on the classical level."""
        return self.crystal.weight(triple.b), -self.crystal.weight(triple.b_prime)

    # structure constants and cells

    def structure_constants(self, show_progress: bool = False
                            ) -> List[Tuple[CellTriple, CellTriple, CellTriple, int]]:
        """Nonzero (x, y, z, c) with c = coefficient of z in x y, x, y in the truncated basis."""
        basis = self.truncated_basis()
        by_left: Dict[TensorElement, List[CellTriple]] = defaultdict(list)
        for t in basis:
            by_left[t.b].append(t)
        rows = []
        for x in tqdm(basis, desc="J structure constants", disable=not show_progress):
            for y in by_left[x.b_prime]:
                for s, c in _structure(x.s, y.s):
                    rows.append((x, y, CellTriple(x.b, s, y.b_prime), c))
        return rows

    def _preorder_graph(self, side: str) -> nx.DiGraph:
        """Edge y -> x when t_x occurs in a product generated by t_y on the given side."""
        basis = self.truncated_basis()
        g = nx.DiGraph()
        g.add_nodes_from(basis)
        by_left: Dict[TensorElement, List[CellTriple]] = defaultdict(list)
        by_right: Dict[TensorElement, List[CellTriple]] = defaultdict(list)
        for t in basis:
            by_left[t.b].append(t)
            by_right[t.b_prime].append(t)
        for y in basis:
            if side in ('left', 'two_sided'):
                for z in by_right[y.b]:
                    for s, _ in _structure(z.s, y.s):
                        x = CellTriple(z.b, s, y.b_prime)
                        if self.in_truncation(x):
                            g.add_edge(y, x)
            if side in ('right', 'two_sided'):
                for z in by_left[y.b_prime]:
                    for s, _ in _structure(y.s, z.s):
                        x = CellTriple(y.b, s, z.b_prime)
                        if self.in_truncation(x):
                            g.add_edge(y, x)
        return g

    def closed_form_cells(self) -> Dict[str, List[List[CellTriple]]]:
        """One two-sided cell; left cells fix b'; right cells fix b."""
        basis = self.truncated_basis()
        left: Dict[TensorElement, List[CellTriple]] = defaultdict(list)
        right: Dict[TensorElement, List[CellTriple]] = defaultdict(list)
        for t in basis:
            left[t.b_prime].append(t)
            right[t.b].append(t)
        return {
            "left": sorted(sorted(c) for c in left.values()),
            "right": sorted(sorted(c) for c in right.values()),
            "two_sided": [sorted(basis)],
        }


@dataclass
class CellPartition:
    """Left, right and two-sided cells of the truncated basis."""

    left: List[List[CellTriple]]
    right: List[List[CellTriple]]
    two_sided: List[List[CellTriple]]
    status: str

    @property
    def conclusive(self) -> bool:
        return self.status == 'conclusive'

    def to_json(self) -> Dict[str, object]:
        def render(cells):
            return [[str(t) for t in cell] for cell in cells]
        return {
            "status": self.status,
            "left": render(self.left),
            "right": render(self.right),
            "two_sided": render(self.two_sided),
            "counts": {"left": len(self.left), "right": len(self.right), "two_sided": len(self.two_sided)},
        }


def _refines(fine: List[List[CellTriple]], coarse: List[List[CellTriple]]) -> bool:
    owner = {t: k for k, cell in enumerate(coarse) for t in cell}
    return all(len({owner[t] for t in cell}) == 1 for cell in fine)


@log_method_call()
def cell_partition(ring: JRing) -> CellPartition:
    """
    Cells from the strongly connected components of the preorders.

    Returns the closed form when the truncated computation reproduces it;
    a strictly finer computed partition means the truncation could not
    witness the connections, and is reported as inconclusive.

    Raises:
        DomainError: If the computed partition contradicts the closed form
    """
    computed = {}
    for side in ('left', 'right', 'two_sided'):
        graph = ring._preorder_graph(side)
        computed[side] = sorted(sorted(c) for c in nx.strongly_connected_components(graph))
    expected = ring.closed_form_cells()
    status = 'conclusive'
    for side in computed:
        if computed[side] == expected[side]:
            continue
        if _refines(computed[side], expected[side]):
            status = 'inconclusive'
        else:
            raise DomainError(f"{side} cells contradict the closed form")
    ComputationLogger.log_cell_summary(ring.lam, len(computed['left']), len(computed['right']),
                                       len(computed['two_sided']), status)
    return CellPartition(computed['left'], computed['right'], computed['two_sided'], status)


def require_conclusive(partition: CellPartition) -> CellPartition:
    """
    Raises:
        InconclusiveError: If the truncation was too small
    """
    if not partition.conclusive:
        raise InconclusiveError("truncation too small to witness the cell structure; enlarge it")
    return partition


def d_count_formula(n: int, lam: Sequence[int]) -> int:
    """prod_i C(n+1, i)^{lambda_i}."""
    total = 1
    for i, k in enumerate(lam, start=1):
        total *= comb(n + 1, i) ** k
    return total


def d_set(datum: RootDatum, lam: Sequence[int]) -> List[CellTriple]:
    return JRing(datum, lam, 0, 0).d_set()


def d_count(datum: RootDatum, lam: Sequence[int]) -> int:
    """|D| counted from the crystal, checked against the product formula."""
    crystal = build_BW(datum, lam)
    count = len(crystal)
    expected = d_count_formula(datum.n, crystal.lam)
    if count != expected:
        raise DomainError(f"crystal count {count} disagrees with the formula {expected}")
    return count


# property checkers

def check_associativity(ring: JRing, triples: Iterable[CellTriple]) -> bool:
    items = list(triples)
    for x in items:
        ex = ring.element(x)
        for y in items:
            if y.b != x.b_prime:
                continue
            xy = ex * ring.element(y)
            for z in items:
                ez = ring.element(z)
                if (xy * ez) != (ex * (ring.element(y) * ez)):
                    return False
    return True


def check_unit_law(ring: JRing, triples: Iterable[CellTriple]) -> bool:
    """t_d1 t_beta t_d2 = delta_{d1,(b,1,b)} delta_{d2,(b',1,b')} t_beta."""
    ds = ring.d_set()
    for t in triples:
        et = ring.element(t)
        for d1 in ds:
            for d2 in ds:
                value = ring.element(d1) * et * ring.element(d2)
                expected = et if (d1.b == t.b and d2.b == t.b_prime) else JRingElement({}, ring.lam)
                if value != expected:
                    return False
    return True


def check_bicrystal_commutation(ring: JRing, triples: Iterable[CellTriple]) -> bool:
    """e_i, f_i commute with e#_j, f#_j on every triple, undefined results included."""
    nodes = ring.datum.nodes
    for t in triples:
        for i in nodes:
            for j in nodes:
                for left in ('e', 'f'):
                    for right in ('e#', 'f#'):
                        one = ring.bicrystal_ops(t, i, left)
                        one = None if one is None else ring.bicrystal_ops(one, j, right)
                        two = ring.bicrystal_ops(t, j, right)
                        two = None if two is None else ring.bicrystal_ops(two, i, left)
                        if one != two:
                            logger.debug(f"{left}_{i} and {right}_{j} disagree on {t}")
                            return False
    return True


def check_identity(ring: JRing, triples: Iterable[CellTriple]) -> bool:
    one = ring.identity()
    return all(one * ring.element(t) == ring.element(t) == ring.element(t) * one for t in triples)


def check_a_function(ring: JRing) -> bool:
    """a >= 0 on every truncated triple and constant in the weight of b'."""
    values: Dict[ClWeight, Fraction] = {}
    for t in ring.truncated_basis():
        a = ring.a_function(t)
        if a < 0:
            return False
        mu = ring.crystal.weight(t.b_prime)
        if values.setdefault(mu, a) != a:
            return False
    return True


def jring_rows(ring: JRing, show_progress: bool = False) -> List[List[str]]:
    """CSV rows x, y, z, c of the truncated structure constants."""
    rows = [["x", "y", "z", "c"]]
    for x, y, z, c in ring.structure_constants(show_progress):
        rows.append([str(x), str(y), str(z), str(c)])
    return rows
