"""
Level-zero fundamental crystals of type A_n^(1) and their tensor products.

B(W(varpi_i)) is realized on i-element subsets of {1, ..., n+1} (columns);
the classical operators move one entry, and e_0 / f_0 are conjugates of
e_1 / f_1 by promotion. Tensor products follow the signature rule with
f_i acting on b1 in b1 (x) b2 exactly when phi_i(b1) > epsilon_i(b2).
"""
import abc
import logging
import time
from collections import Counter, deque
from dataclasses import dataclass
from itertools import combinations, product as cartesian
from math import comb
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from ..algebra_core.rootdata import ClWeight, RootDatum, Weight
from ..workbench_utils.config import EXTREMAL_BFS_FACTOR
from ..workbench_utils.errors import DomainError, ExtremalSearchOverflow, UnsupportedTypeError
from ..workbench_utils.logging import log_enumeration_stats, log_method_call

# Set up logging
logger = logging.getLogger(__name__)


def require_type_a(datum: RootDatum) -> None:
    """
    Raises:
        UnsupportedTypeError: Unless the datum is of type A_n^(1)
    """
    t = datum.affine_type
    if t.family != 'A' or t.r != 1:
        raise UnsupportedTypeError(f"crystals are implemented for A_n^(1) only, got {t}")


@dataclass(frozen=True, order=True)
class ColumnElement:
    """Strictly increasing entries of one column."""

    entries: Tuple[int, ...]

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.entries)) + "}"


@dataclass(frozen=True, order=True)
class TensorElement:
    """Ordered factors b1 (x) b2 (x) ... of a tensor product of columns."""

    factors: Tuple[ColumnElement, ...]

    def __str__(self) -> str:
        return "(x)".join(str(f) for f in self.factors)


@dataclass(frozen=True, order=True)
class AffineElement:
    """A tensor element with one z-exponent per factor."""

    base: TensorElement
    z: Tuple[int, ...]

    def __str__(self) -> str:
        return "(x)".join(f"{f}z^{k}" for f, k in zip(self.base.factors, self.z))


class BaseCrystal(abc.ABC):
    """
    Abstract base class for finite regular crystals over I = {0, ..., n}.

    Subclasses provide the elements, the weight map and the operators;
    everything else (strings, Weyl group action, extremality, graphs and
    exports) is derived here.
    """

    def __init__(self, datum: RootDatum, extremal_factor: int = EXTREMAL_BFS_FACTOR):
        require_type_a(datum)
        self.datum = datum
        self.n = datum.n
        self.extremal_factor = extremal_factor

    @abc.abstractmethod
    def elements(self) -> List:
        """All elements in a fixed order."""

    @abc.abstractmethod
    def weight(self, x) -> ClWeight:
        """Classical weight of x."""

    @abc.abstractmethod
    def e(self, i: int, x):
        """e_i x, or None."""

    @abc.abstractmethod
    def f(self, i: int, x):
        """f_i x, or None."""

    @classmethod
    def get_name(cls) -> str:
        return cls.__name__

    @classmethod
    def get_description(cls) -> str:
        return "Base crystal"

    # strings

    def _check_node(self, i: int) -> None:
        if i not in self.datum.nodes:
            raise DomainError(f"node {i} outside I = {list(self.datum.nodes)}")

    def epsilon(self, i: int, x) -> int:
        count = 0
        y = self.e(i, x)
        while y is not None:
            count += 1
            y = self.e(i, y)
        return count

    def phi(self, i: int, x) -> int:
        count = 0
        y = self.f(i, x)
        while y is not None:
            count += 1
            y = self.f(i, y)
        return count

    def hvalue(self, i: int, x) -> int:
        return int(self.datum.cl_hvalue(self.weight(x), i))

    def __len__(self) -> int:
        return len(self.elements())

    # Weyl group action and extremality

    def reflect(self, i: int, x):
        """S_i x = f_i^k x for k = <h_i, wt x> >= 0, else e_i^{-k} x."""
        k = self.hvalue(i, x)
        y = x
        step = self.f if k >= 0 else self.e
        for _ in range(abs(k)):
            y = step(i, y)
        return y

    def weyl_action(self, word: Sequence[int], x):
        """S_{w_1} ... S_{w_k} x, applying the rightmost letter first."""
        for i in reversed(list(word)):
            self._check_node(i)
            x = self.reflect(i, x)
        return x

    def _locally_extremal(self, x) -> bool:
        for i in self.datum.nodes:
            k = self.hvalue(i, x)
            if k >= 0 and self.e(i, x) is not None:
                return False
            if k <= 0 and self.f(i, x) is not None:
                return False
        return True

    def is_extremal(self, x, factor: Optional[int] = None) -> bool:
        """
        Decide extremality by searching the orbit of x under the S_i.

        The search is capped at factor states per element of the W_cl orbit
        of wt(x); factor defaults to the crystal's extremal_factor.

        Raises:
            ExtremalSearchOverflow: If more than factor * |W_cl wt(x)| states are visited
        """
        factor = self.extremal_factor if factor is None else factor
        cap = factor * len(self.datum.cl_orbit(self.weight(x)))
        seen = {x}
        queue = deque([x])
        while queue:
            y = queue.popleft()
            if not self._locally_extremal(y):
                return False
            for i in self.datum.nodes:
                z = self.reflect(i, y)
                if z not in seen:
                    seen.add(z)
                    if len(seen) > cap:
                        raise ExtremalSearchOverflow(f"extremal search from {x} exceeded {cap} states")
                    queue.append(z)
        return True

    # global structure

    def graph(self) -> nx.MultiDiGraph:
        """Crystal graph with an edge x -> f_i x labelled i."""
        g = nx.MultiDiGraph()
        for x in self.elements():
            g.add_node(x)
            for i in self.datum.nodes:
                y = self.f(i, x)
                if y is not None:
                    g.add_edge(x, y, label=i)
        return g

    def connected_components(self) -> List[List]:
        comps = [sorted(c) for c in nx.weakly_connected_components(self.graph())]
        return sorted(comps)

    def is_connected(self) -> bool:
        return len(self.connected_components()) == 1

    def highest_weight_elements(self) -> List:
        """Elements killed by every classical e_i."""
        return [x for x in self.elements()
                if all(self.e(i, x) is None for i in self.datum.classical_nodes)]

    def classical_decomposition(self) -> List[ClWeight]:
        return sorted((self.weight(x) for x in self.highest_weight_elements()), key=lambda w: w.coords)

    def character(self) -> Counter:
        return Counter(self.weight(x) for x in self.elements())

    def character_is_symmetric(self) -> bool:
        """The weight multiset is W_cl-invariant."""
        char = self.character()
        for i in self.datum.classical_nodes:
            for w, m in char.items():
                if char.get(self.datum.cl_reflect(i, w), 0) != m:
                    return False
        return True

    def check_axioms(self) -> List[str]:
        """Violations of e/f inversion and phi - epsilon = <h_i, wt>; empty when all hold."""
        problems = []
        for x in self.elements():
            for i in self.datum.nodes:
                y = self.f(i, x)
                if y is not None and self.e(i, y) != x:
                    problems.append(f"e_{i} f_{i} {x} != {x}")
                y = self.e(i, x)
                if y is not None and self.f(i, y) != x:
                    problems.append(f"f_{i} e_{i} {x} != {x}")
                if self.phi(i, x) - self.epsilon(i, x) != self.hvalue(i, x):
                    problems.append(f"phi_{i} - epsilon_{i} != <h_{i}, wt> at {x}")
        return problems

    # exports

    def to_dot(self) -> str:
        lines = ["digraph crystal {"]
        names = {x: f"n{k}" for k, x in enumerate(self.elements())}
        for x, name in names.items():
            lines.append(f'  {name} [label="{x}"];')
        for x in self.elements():
            for i in self.datum.nodes:
                y = self.f(i, x)
                if y is not None:
                    lines.append(f'  {names[x]} -> {names[y]} [label="{i}"];')
        lines.append("}")
        return "\n".join(lines)

    def to_json(self) -> Dict[str, object]:
        return {
            "name": self.get_name(),
            "type": str(self.datum.affine_type),
            "size": len(self.elements()),
            "elements": [
                {"element": str(x), "weight": [str(c) for c in self.weight(x).coords]}
                for x in self.elements()
            ],
        }


class ColumnCrystal(BaseCrystal):
    """B(W(varpi_r)) for A_n^(1): r-element subsets of {1, ..., n+1}."""

    def __init__(self, datum: RootDatum, r: int):
        super().__init__(datum)
        if not 1 <= r <= self.n:
            raise DomainError(f"column length {r} outside 1..{self.n}")
        self.r = r
        self._elements = [ColumnElement(c) for c in combinations(range(1, self.n + 2), r)]

    @classmethod
    def get_name(cls) -> str:
        return "column"

    @classmethod
    def get_description(cls) -> str:
        return "Level-zero fundamental crystal realized on columns, f_0 by promotion"

    def elements(self) -> List[ColumnElement]:
        return list(self._elements)

    def highest(self) -> ColumnElement:
        return ColumnElement(tuple(range(1, self.r + 1)))

    def promote(self, x: ColumnElement, steps: int = 1) -> ColumnElement:
        """Entrywise +steps modulo n+1, reseated."""
        size = self.n + 1
        return ColumnElement(tuple(sorted((v - 1 + steps) % size + 1 for v in x.entries)))

    def weight(self, x: ColumnElement) -> ClWeight:
        s = set(x.entries)
        return self.datum.cl_from_hvalues([(j in s) - (j + 1 in s) for j in self.datum.classical_nodes])

    def _move(self, x: ColumnElement, src: int, dst: int) -> Optional[ColumnElement]:
        s = set(x.entries)
        if src in s and dst not in s:
            s.remove(src)
            s.add(dst)
            return ColumnElement(tuple(sorted(s)))
        return None

    def f(self, i: int, x: ColumnElement) -> Optional[ColumnElement]:
        self._check_node(i)
        if i == 0:
            y = self.f(1, self.promote(x))
            return None if y is None else self.promote(y, -1)
        return self._move(x, i, i + 1)

    def e(self, i: int, x: ColumnElement) -> Optional[ColumnElement]:
        self._check_node(i)
        if i == 0:
            y = self.e(1, self.promote(x))
            return None if y is None else self.promote(y, -1)
        return self._move(x, i + 1, i)

    def epsilon(self, i: int, x: ColumnElement) -> int:
        return 0 if self.e(i, x) is None else 1

    def phi(self, i: int, x: ColumnElement) -> int:
        return 0 if self.f(i, x) is None else 1


class TensorCrystal(BaseCrystal):
    """
    B_W(lambda) = (x)_i B(W(varpi_i))^{(x) lambda_i}, factors ordered by i.

    Args:
        datum: Root datum of type A_n^(1)
        lam: (lambda_1, ..., lambda_n)
        extremal_factor: State cap per orbit element for is_extremal
    """

    def __init__(self, datum: RootDatum, lam: Sequence[int], extremal_factor: int = EXTREMAL_BFS_FACTOR):
        super().__init__(datum, extremal_factor)
        lam = tuple(int(v) for v in lam)
        if len(lam) != self.n or any(v < 0 for v in lam):
            raise DomainError(f"lambda {list(lam)} is not a dominant weight of rank {self.n}")
        self.lam = lam
        self.columns = {r: ColumnCrystal(datum, r) for r in datum.classical_nodes if lam[r - 1]}
        self.levels: Tuple[int, ...] = tuple(r for r in datum.classical_nodes for _ in range(lam[r - 1]))
        start = time.time()
        self._elements = [
            TensorElement(tuple(combo))
            for combo in cartesian(*(self.columns[r].elements() for r in self.levels))
        ]
        log_enumeration_stats({'what': f"elements of B_W({list(lam)})",
                               'count': len(self._elements), 'time': time.time() - start})

    @classmethod
    def get_name(cls) -> str:
        return "tensor"

    @classmethod
    def get_description(cls) -> str:
        return "Tensor product of level-zero fundamental crystals, signature rule"

    def elements(self) -> List[TensorElement]:
        return list(self._elements)

    def expected_size(self) -> int:
        size = 1
        for r, k in zip(self.datum.classical_nodes, self.lam):
            size *= comb(self.n + 1, r) ** k
        return size

    def highest(self) -> TensorElement:
        return TensorElement(tuple(self.columns[r].highest() for r in self.levels))

    def dominant_weight(self) -> ClWeight:
        return ClWeight.of(self.lam)

    def weight(self, x: TensorElement) -> ClWeight:
        total = self.datum.cl_zero()
        for r, b in zip(self.levels, x.factors):
            total = total + self.columns[r].weight(b)
        return total

    def signature(self, i: int, x: TensorElement) -> Tuple[Optional[int], Optional[int], int, int]:
        """
        Positions for e_i and f_i after bracket cancellation.

        Each factor contributes epsilon minuses then phi pluses; a plus
        followed by a minus cancels.

        Returns:
            (e position, f position, epsilon, phi)
        """
        pluses: List[int] = []
        minuses: List[int] = []
        for pos, (r, b) in enumerate(zip(self.levels, x.factors)):
            col = self.columns[r]
            for _ in range(col.epsilon(i, b)):
                if pluses:
                    pluses.pop()
                else:
                    minuses.append(pos)
            pluses.extend([pos] * col.phi(i, b))
        e_pos = minuses[-1] if minuses else None
        f_pos = pluses[0] if pluses else None
        return e_pos, f_pos, len(minuses), len(pluses)

    def _apply(self, i: int, x: TensorElement, pos: Optional[int], raising: bool) -> Optional[TensorElement]:
        if pos is None:
            return None
        col = self.columns[self.levels[pos]]
        b = col.e(i, x.factors[pos]) if raising else col.f(i, x.factors[pos])
        return TensorElement(x.factors[:pos] + (b,) + x.factors[pos + 1:])

    def e(self, i: int, x: TensorElement) -> Optional[TensorElement]:
        self._check_node(i)
        return self._apply(i, x, self.signature(i, x)[0], True)

    def f(self, i: int, x: TensorElement) -> Optional[TensorElement]:
        self._check_node(i)
        return self._apply(i, x, self.signature(i, x)[1], False)

    def epsilon(self, i: int, x: TensorElement) -> int:
        return self.signature(i, x)[2]

    def phi(self, i: int, x: TensorElement) -> int:
        return self.signature(i, x)[3]

    def simple_crystal_check(self) -> Dict[str, object]:
        """
        Report for B(W(varpi_i)) (lambda a unit vector).

        Type A fundamental weights are minuscule, so the convex hull of
        W_cl cl(varpi_i) meets cl(varpi_i) + Q_cl exactly in the orbit.
        """
        if sum(self.lam) != 1:
            raise DomainError("simple crystal check needs lambda = varpi_i")
        top = self.dominant_weight()
        orbit = set(self.datum.cl_orbit(top))
        elements = self.elements()
        weights = [self.weight(x) for x in elements]
        extremal = [x for x in elements if self.is_extremal(x)]
        report = {
            "size": len(elements),
            "expected_size": self.expected_size(),
            "top_multiplicity": sum(1 for w in weights if w == top),
            "extremal_weights_in_orbit": all(self.weight(x) in orbit for x in extremal),
            "support_is_orbit": set(weights) == orbit,
            "all_extremal": len(extremal) == len(elements),
        }
        report["simple"] = (report["top_multiplicity"] == 1 and report["extremal_weights_in_orbit"]
                            and report["support_is_orbit"] and report["size"] == report["expected_size"])
        return report

    # affinization

    def affine_weight(self, x: AffineElement) -> Weight:
        """s(cl wt) plus the total z-degree along delta."""
        return self.datum.section(self.weight(x.base)) + self.datum.delta_weight() * sum(x.z)

    def affine_f(self, i: int, x: AffineElement) -> Optional[AffineElement]:
        """f_i on B_aff; f_0 lowers the exponent of the acted factor by one."""
        self._check_node(i)
        pos = self.signature(i, x.base)[1]
        base = self._apply(i, x.base, pos, False)
        if base is None:
            return None
        z = list(x.z)
        if i == 0:
            z[pos] -= 1
        return AffineElement(base, tuple(z))

    def affine_e(self, i: int, x: AffineElement) -> Optional[AffineElement]:
        """e_i on B_aff; e_0 raises the exponent of the acted factor by one."""
        self._check_node(i)
        pos = self.signature(i, x.base)[0]
        base = self._apply(i, x.base, pos, True)
        if base is None:
            return None
        z = list(x.z)
        if i == 0:
            z[pos] += 1
        return AffineElement(base, tuple(z))

    def affinize(self, x: TensorElement, z: Optional[Iterable[int]] = None) -> AffineElement:
        z = tuple(z) if z is not None else (0,) * len(x.factors)
        if len(z) != len(x.factors):
            raise DomainError("one exponent per factor is required")
        return AffineElement(x, z)


_CRYSTALS = {
    'column': ColumnCrystal,
    'tensor': TensorCrystal,
}


def get_available_crystals() -> List[type]:
    return list(_CRYSTALS.values())


def create_crystal(name: str, **kwargs) -> BaseCrystal:
    """
    Create a crystal by name.

    Args:
        name: 'column' or 'tensor'
        **kwargs: Constructor arguments

    Raises:
        DomainError: If the name is not recognized
    """
    key = name.lower()
    if key not in _CRYSTALS:
        raise DomainError(f"unknown crystal '{name}', expected one of {sorted(_CRYSTALS)}")
    return _CRYSTALS[key](**kwargs)


@log_method_call()
def build_BW(datum: RootDatum, lam: Sequence[int], extremal_factor: int = EXTREMAL_BFS_FACTOR) -> TensorCrystal:
    """
    Materialize B_W(lambda).

    Raises:
        UnsupportedTypeError: Outside type A_n^(1)
    """
    crystal = TensorCrystal(datum, lam, extremal_factor)
    if len(crystal) != crystal.expected_size():
        raise DomainError(f"B_W({list(lam)}) has {len(crystal)} elements, expected {crystal.expected_size()}")
    return crystal


def parse_lambda(text: str, n: int) -> Tuple[int, ...]:
    """Comma list such as "1,1"; padded with zeros to length n."""
    try:
        values = [int(v) for v in text.split(",")] if text.strip() else []
    except ValueError as e:
        raise DomainError(f"cannot parse lambda '{text}'") from e
    if len(values) > n or any(v < 0 for v in values):
        raise DomainError(f"lambda '{text}' is not dominant of rank {n}")
    return tuple(values) + (0,) * (n - len(values))
