"""
Partitions, Schur functions and the representation rings of GL_m.

Irreducible rational representations of GL_m are indexed by weakly
decreasing integer vectors (Laurent shapes). Products are computed with
the Littlewood-Richardson rule after factoring out determinant powers, and
an independent monomial-expansion oracle cross-checks small cases.
"""
import logging
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as cartesian
from typing import Dict, Iterator, List, Sequence, Tuple

import networkx as nx

from ..workbench_utils.config import ORACLE_MAX_BOXES
from ..workbench_utils.errors import DomainError, SizeGuardError
from ..workbench_utils.logging import log_method_call

# Set up logging
logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class Partition:
    """Weakly decreasing positive parts."""

    parts: Tuple[int, ...] = ()

    @classmethod
    def of(cls, values: Sequence[int]) -> "Partition":
        parts = tuple(int(v) for v in values if v)
        if any(v < 0 for v in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise DomainError(f"{list(values)} is not a partition")
        return cls(parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def transpose(self) -> "Partition":
        if not self.parts:
            return Partition()
        return Partition(tuple(sum(1 for p in self.parts if p > k) for k in range(self.parts[0])))

    def padded(self, m: int) -> Tuple[int, ...]:
        if len(self.parts) > m:
            raise DomainError(f"{self} has more than {m} rows")
        return self.parts + (0,) * (m - len(self.parts))

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


def partitions_of(k: int, max_rows: int = -1) -> Iterator[Partition]:
    """Partitions of k with at most max_rows rows (unbounded when negative)."""

    def extend(left: int, largest: int, rows: int) -> Iterator[Tuple[int, ...]]:
        if left == 0:
            yield ()
            return
        if rows == 0:
            return
        for first in range(min(left, largest), 0, -1):
            for rest in extend(left - first, first, rows - 1):
                yield (first,) + rest

    yield from (Partition(p) for p in extend(k, k, max_rows if max_rows >= 0 else k))


@dataclass(frozen=True, order=True)
class LaurentSchur:
    """
    Irreducible rational GL_m representation with highest weight shape.

    Attributes:
        m: Rank of GL_m
        shape: Weakly decreasing integer vector of length m
    """

    m: int
    shape: Tuple[int, ...]

    def __post_init__(self):
        if self.m < 0 or len(self.shape) != self.m:
            raise DomainError(f"shape {self.shape} does not have length {self.m}")
        if any(a < b for a, b in zip(self.shape, self.shape[1:])):
            raise DomainError(f"shape {self.shape} is not weakly decreasing")

    @classmethod
    def of(cls, m: int, values: Sequence[int]) -> "LaurentSchur":
        values = tuple(int(v) for v in values)
        if len(values) > m:
            raise DomainError(f"shape {values} is longer than {m}")
        return cls(m, values + (0,) * (m - len(values)))

    @classmethod
    def trivial(cls, m: int) -> "LaurentSchur":
        return cls(m, (0,) * m)

    @classmethod
    def determinant(cls, m: int, power: int = 1) -> "LaurentSchur":
        return cls(m, (power,) * m)

    @property
    def det_power(self) -> int:
        return self.shape[-1] if self.m else 0

    def polynomial_part(self) -> Partition:
        """The partition left after factoring out det^det_power."""
        k = self.det_power
        return Partition(tuple(v - k for v in self.shape if v != k))

    def is_trivial(self) -> bool:
        return not any(self.shape)

    def boxes(self) -> int:
        return self.polynomial_part().size

    def twist(self, k: int) -> "LaurentSchur":
        return LaurentSchur(self.m, tuple(v + k for v in self.shape))

    def dual(self) -> "LaurentSchur":
        """s^#(z) = s(z^{-1}): reverse and negate."""
        return LaurentSchur(self.m, tuple(-v for v in reversed(self.shape)))

    def dimension(self) -> int:
        """Weyl dimension formula."""
        value = Fraction(1)
        for i in range(self.m):
            for j in range(i + 1, self.m):
                value *= Fraction(self.shape[i] - self.shape[j] + j - i, j - i)
        return int(value)

    def __str__(self) -> str:
        return "s(" + ",".join(map(str, self.shape)) + ")"


def elementary(m: int, k: int) -> LaurentSchur:
    """e_k as the shape (1^k)."""
    if not 0 <= k <= m:
        raise DomainError(f"e_{k} is not defined for GL_{m}")
    return LaurentSchur.of(m, (1,) * k)


def complete(m: int, k: int) -> LaurentSchur:
    """h_k as the shape (k)."""
    if k < 0:
        raise DomainError("negative degree")
    return LaurentSchur.of(m, (k,) if m else ())


# Littlewood-Richardson rule

def _horizontal_strips(shape: Tuple[int, ...], k: int) -> Iterator[Tuple[int, ...]]:
    """Row-count vectors of horizontal k-strips addable to shape."""
    m = len(shape)

    def extend(row: int, left: int) -> Iterator[Tuple[int, ...]]:
        if row == m:
            if left == 0:
                yield ()
            return
        cap = left if row == 0 else min(left, shape[row - 1] - shape[row])
        for add in range(cap, -1, -1):
            for rest in extend(row + 1, left - add):
                yield (add,) + rest

    yield from extend(0, k)


def lr_coefficients(alpha: Partition, beta: Partition, m: int) -> Counter:
    """
    c^gamma_{alpha beta} for partitions gamma with at most m rows.

    beta's rows are added as horizontal strips labelled 1, 2, ...; the
    reading word (rows top to bottom, right to left) must be a lattice word.
    """
    start = alpha.padded(m)
    result: Counter = Counter()

    def place(label: int, shape: Tuple[int, ...], previous: Tuple[int, ...]) -> None:
        if label == len(beta.parts):
            result[Partition.of(shape)] += 1
            return
        for counts in _horizontal_strips(shape, beta.parts[label]):
            if label > 0:
                above = 0
                ok = True
                for row in range(m):
                    # label+1 entries in rows <= row never exceed label entries in rows < row
                    if sum(counts[:row + 1]) > above:
                        ok = False
                        break
                    above += previous[row]
                if not ok:
                    continue
            place(label + 1, tuple(s + c for s, c in zip(shape, counts)), counts)

    place(0, start, (0,) * m)
    return result


def _check_same_rank(a: LaurentSchur, b: LaurentSchur) -> None:
    if a.m != b.m:
        raise DomainError(f"cannot multiply GL_{a.m} and GL_{b.m} representations")


def lr_multiply(a: LaurentSchur, b: LaurentSchur) -> Dict[LaurentSchur, int]:
    """
    Tensor product decomposition of a and b.

    Raises:
        DomainError: If a and b belong to different GL_m
    """
    _check_same_rank(a, b)
    m = a.m
    if m == 0:
        return {LaurentSchur.trivial(0): 1}
    power = a.det_power + b.det_power
    coefficients = lr_coefficients(a.polynomial_part(), b.polynomial_part(), m)
    return {
        LaurentSchur(m, tuple(v + power for v in gamma.padded(m))): c
        for gamma, c in sorted(coefficients.items())
    }


def pieri_vertical(a: LaurentSchur, k: int) -> Dict[LaurentSchur, int]:
    """
    Multiplication by e_k: add a vertical k-strip.

    Raises:
        DomainError: If k > m or k < 0
    """
    if not 0 <= k <= a.m:
        raise DomainError(f"vertical strip of size {k} does not fit GL_{a.m}")
    result: Dict[LaurentSchur, int] = {}
    for rows in _choose(a.m, k):
        shape = list(a.shape)
        for r in rows:
            shape[r] += 1
        if all(x >= y for x, y in zip(shape, shape[1:])):
            result[LaurentSchur(a.m, tuple(shape))] = 1
    return dict(sorted(result.items()))


def _choose(m: int, k: int) -> Iterator[Tuple[int, ...]]:
    if k == 0:
        yield ()
        return
    for first in range(m):
        for rest in _choose(m - first - 1, k - 1):
            yield (first,) + tuple(first + 1 + r for r in rest)


def dual(a: LaurentSchur) -> LaurentSchur:
    return a.dual()


# monomial oracle

def semistandard_tableaux(shape: Partition, m: int) -> Iterator[List[List[int]]]:
    """Semistandard fillings of shape with entries 1..m, filled row by row."""
    cells = [(r, c) for r, length in enumerate(shape.parts) for c in range(length)]
    tableau = [[0] * length for length in shape.parts]

    def backtrack(pos: int) -> Iterator[List[List[int]]]:
        if pos == len(cells):
            yield [row[:] for row in tableau]
            return
        row, col = cells[pos]
        low = tableau[row][col - 1] if col > 0 else 1
        if row > 0:
            low = max(low, tableau[row - 1][col] + 1)
        for value in range(low, m + 1):
            tableau[row][col] = value
            yield from backtrack(pos + 1)
        tableau[row][col] = 0

    yield from backtrack(0)


def schur_monomials(shape: Partition, m: int) -> Counter:
    """s_shape(x_1..x_m) as exponent vector -> coefficient."""
    out: Counter = Counter()
    for t in semistandard_tableaux(shape, m):
        content = [0] * m
        for row in t:
            for v in row:
                content[v - 1] += 1
        out[tuple(content)] += 1
    return out


@log_method_call()
def oracle_multiply(a: LaurentSchur, b: LaurentSchur,
                    max_boxes: int = ORACLE_MAX_BOXES) -> Dict[LaurentSchur, int]:
    """
    Product by monomial expansion and peeling of dominant shapes.

    Raises:
        DomainError: If a and b belong to different GL_m
        SizeGuardError: If the polynomial parts exceed max_boxes together
    """
    _check_same_rank(a, b)
    m = a.m
    if m == 0:
        return {LaurentSchur.trivial(0): 1}
    alpha, beta = a.polynomial_part(), b.polynomial_part()
    if alpha.size + beta.size > max_boxes:
        raise SizeGuardError(f"oracle limited to {max_boxes} boxes, got {alpha.size + beta.size}")
    left, right = schur_monomials(alpha, m), schur_monomials(beta, m)
    poly: Counter = Counter()
    for e1, c1 in left.items():
        for e2, c2 in right.items():
            poly[tuple(x + y for x, y in zip(e1, e2))] += c1 * c2
    power = a.det_power + b.det_power
    result: Dict[LaurentSchur, int] = {}
    while True:
        poly = Counter({e: c for e, c in poly.items() if c})
        if not poly:
            break
        top = max(poly)
        c = poly[top]
        if c < 0 or any(x < y for x, y in zip(top, top[1:])):
            raise DomainError(f"monomial expansion is not Schur-positive at {top}")
        result[LaurentSchur(m, tuple(v + power for v in top))] = c
        for e, k in schur_monomials(Partition.of(top), m).items():
            poly[e] -= c * k
    return dict(sorted(result.items()))


# representations of G_lambda = prod_i GL_{lambda_i}

@dataclass(frozen=True, order=True)
class GProdRep:
    """An irreducible representation of prod_i GL_{lambda_i}, one factor per node."""

    components: Tuple[LaurentSchur, ...]

    @classmethod
    def trivial(cls, lam: Sequence[int]) -> "GProdRep":
        return cls(tuple(LaurentSchur.trivial(m) for m in lam))

    @property
    def ranks(self) -> Tuple[int, ...]:
        return tuple(c.m for c in self.components)

    def dual(self) -> "GProdRep":
        return GProdRep(tuple(c.dual() for c in self.components))

    def is_trivial(self) -> bool:
        return all(c.is_trivial() for c in self.components)

    def boxes(self) -> int:
        return sum(c.boxes() for c in self.components)

    def max_det(self) -> int:
        return max((abs(c.det_power) for c in self.components), default=0)

    def dimension(self) -> int:
        value = 1
        for c in self.components:
            value *= c.dimension()
        return value

    def __str__(self) -> str:
        return "x".join(str(c) for c in self.components) or "1"

    def to_json(self) -> List[List[int]]:
        return [list(c.shape) for c in self.components]


def rep_multiply(a: GProdRep, b: GProdRep) -> Dict[GProdRep, int]:
    """Componentwise Littlewood-Richardson product in R(G_lambda)."""
    if a.ranks != b.ranks:
        raise DomainError(f"representations of different groups {a.ranks} and {b.ranks}")
    factors = [list(lr_multiply(x, y).items()) for x, y in zip(a.components, b.components)]
    result: Dict[GProdRep, int] = {}
    for combo in cartesian(*factors):
        rep = GProdRep(tuple(s for s, _ in combo))
        mult = 1
        for _, c in combo:
            mult *= c
        result[rep] = result.get(rep, 0) + mult
    return dict(sorted(result.items()))


def truncated_irreps(lam: Sequence[int], max_boxes: int, max_det: int) -> List[GProdRep]:
    """
    Irr G_lambda cut off at max_boxes polynomial boxes in total and |det power| <= max_det.

    Each factor is det^k times a partition with fewer than lambda_i rows.
    """
    per_node: List[List[Tuple[int, LaurentSchur]]] = []
    for m in lam:
        options: List[Tuple[int, LaurentSchur]] = []
        if m == 0:
            options.append((0, LaurentSchur.trivial(0)))
        else:
            for size in range(max_boxes + 1):
                for alpha in partitions_of(size, m - 1):
                    for k in range(-max_det, max_det + 1):
                        options.append((size, LaurentSchur(m, tuple(v + k for v in alpha.padded(m)))))
        per_node.append(options)
    out = []
    for combo in cartesian(*per_node):
        if sum(size for size, _ in combo) <= max_boxes:
            out.append(GProdRep(tuple(s for _, s in combo)))
    return sorted(out)


def in_truncation(rep: GProdRep, max_boxes: int, max_det: int) -> bool:
    return rep.boxes() <= max_boxes and rep.max_det() <= max_det


def pieri_generators(lam: Sequence[int]) -> List[GProdRep]:
    """e_1 and its dual at each nonzero factor."""
    gens = []
    for pos, m in enumerate(lam):
        if m == 0:
            continue
        comps = [LaurentSchur.trivial(k) for k in lam]
        comps[pos] = elementary(m, 1)
        gens.append(GProdRep(tuple(comps)))
        gens.append(GProdRep(tuple(comps)).dual())
    return gens


def pieri_connected(lam: Sequence[int], max_boxes: int, max_det: int) -> bool:
    """
    True iff the truncated Irr G_lambda is connected by multiplication with e_1 and e_1^#.
    """
    reps = truncated_irreps(lam, max_boxes, max_det)
    graph = nx.Graph()
    graph.add_nodes_from(reps)
    members = set(reps)
    for rep in reps:
        for g in pieri_generators(lam):
            for target in rep_multiply(rep, g):
                if target in members:
                    graph.add_edge(rep, target)
    connected = nx.is_connected(graph) if reps else True
    logger.debug(f"Irr G_{list(lam)} truncated to {len(reps)} shapes: connected={connected}")
    return connected


def parse_shape(text: str) -> Tuple[int, ...]:
    """Comma-separated integers, e.g. "2,1,0"."""
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(v) for v in text.split(","))
    except ValueError as e:
        raise DomainError(f"cannot parse shape '{text}'") from e
