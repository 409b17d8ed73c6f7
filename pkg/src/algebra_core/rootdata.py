"""
Affine root data.

Numerical data of every affine Dynkin diagram of Table Aff (with the
reversed numbering for A_{2n}^{(2)} so that (alpha_0, alpha_0) = 4),
weights and roots, the invariant form, the cl projection onto level-zero
classical weights and the classification of positive roots.
"""
import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import sympy

from ..workbench_utils.errors import DomainError

# Set up logging
logger = logging.getLogger(__name__)

TYPE_PATTERN = re.compile(r'^([A-G])(\d+)~([123])$')


@dataclass(frozen=True)
class AffineType:
    """An entry of Table Aff r, spelled X<N>~<r>."""

    family: str
    N: int
    r: int

    @classmethod
    def parse(cls, text: str) -> "AffineType":
        m = TYPE_PATTERN.match(text.strip())
        if not m:
            raise DomainError(f"cannot parse affine type '{text}' (expected e.g. A2~1)")
        t = cls(m.group(1), int(m.group(2)), int(m.group(3)))
        t.validate()
        return t

    def validate(self) -> None:
        f, N, r = self.family, self.N, self.r
        ok = False
        if r == 1:
            ok = ((f == 'A' and N >= 1) or (f == 'B' and N >= 3) or (f == 'C' and N >= 2)
                  or (f == 'D' and N >= 4) or (f == 'E' and N in (6, 7, 8))
                  or (f == 'F' and N == 4) or (f == 'G' and N == 2))
        elif r == 2:
            ok = ((f == 'A' and N >= 2 and N % 2 == 0) or (f == 'A' and N >= 5 and N % 2 == 1)
                  or (f == 'D' and N >= 3) or (f == 'E' and N == 6))
        elif r == 3:
            ok = f == 'D' and N == 4
        if not ok:
            raise DomainError(f"{self} is not an entry of Table Aff {r}")

    @property
    def rank(self) -> int:
        """Number of classical nodes I_0."""
        f, N, r = self.family, self.N, self.r
        if r == 1:
            return N
        if f == 'A':
            return N // 2 if N % 2 == 0 else (N + 1) // 2
        if f == 'D' and r == 2:
            return N - 1
        if f == 'E':
            return 4
        return 2

    @property
    def is_untwisted(self) -> bool:
        return self.r == 1

    @property
    def is_a_even_twisted(self) -> bool:
        """A_{2n}^{(2)}, the only type with roots of squared length 4."""
        return self.family == 'A' and self.r == 2 and self.N % 2 == 0

    def __str__(self) -> str:
        return f"{self.family}{self.N}~{self.r}"


def list_affine_types(max_rank: int) -> List[AffineType]:
    """All Table Aff types with 1 <= rank <= max_rank."""
    found = []
    candidates = []
    for N in range(1, 2 * max_rank + 2):
        for family in 'ABCDEFG':
            for r in (1, 2, 3):
                candidates.append(AffineType(family, N, r))
    for t in candidates:
        try:
            t.validate()
        except DomainError:
            continue
        if t.rank <= max_rank:
            found.append(t)
    return found


def _diagram(t: AffineType) -> Tuple[List[Fraction], List[Tuple[int, int]]]:
    """Relative squared lengths of simple roots and the diagram edges."""
    f, N, r = t.family, t.N, t.r
    n = t.rank
    one, two, three, four = Fraction(1), Fraction(2), Fraction(3), Fraction(4)
    chain = [(k, k + 1) for k in range(n)]
    if r == 1:
        if f == 'A':
            return [one] * (n + 1), [(k, k + 1) for k in range(n)] + [(n, 0)]
        if f == 'B':
            lengths = [two] * n + [one]
            return lengths, [(0, 2)] + [(k, k + 1) for k in range(1, n)]
        if f == 'C':
            lengths = [two] + [one] * (n - 1) + [two]
            return lengths, chain
        if f == 'D':
            edges = [(0, 2)] + [(k, k + 1) for k in range(1, n - 2)] + [(n - 2, n - 1), (n - 2, n)]
            return [one] * (n + 1), edges
        if f == 'E':
            if N == 6:
                edges = [(1, 3), (3, 4), (4, 5), (5, 6), (2, 4), (0, 2)]
            elif N == 7:
                edges = [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (2, 4), (0, 1)]
            else:
                edges = [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4), (0, 8)]
            return [one] * (n + 1), edges
        if f == 'F':
            return [two, two, two, one, one], [(0, 1), (1, 2), (2, 3), (3, 4)]
        if f == 'G':
            return [three, one, three], [(0, 2), (1, 2)]
    if r == 2:
        if f == 'A' and N % 2 == 0:
            if n == 1:
                return [four, one], [(0, 1)]
            return [four] + [two] * (n - 1) + [one], chain
        if f == 'A':
            lengths = [one] * n + [two]
            return lengths, [(0, 2), (1, 2)] + [(k, k + 1) for k in range(2, n)]
        if f == 'D':
            return [one] + [two] * (n - 1) + [one], chain
        if f == 'E':
            return [one, one, one, two, two], chain
    if r == 3:
        return [one, one, three], [(0, 1), (1, 2)]
    raise DomainError(f"no diagram for {t}")


def _rational_matrix(rows: Sequence[Sequence]) -> sympy.Matrix:
    return sympy.Matrix([[_to_rational(x) for x in row] for row in rows])


def _to_rational(x) -> sympy.Rational:
    f = Fraction(x)
    return sympy.Rational(f.numerator, f.denominator)


def _to_fraction(x) -> Fraction:
    x = sympy.Rational(x)
    return Fraction(int(x.p), int(x.q))


def _nullspace(rows: Sequence[Sequence[Fraction]]) -> List[List[Fraction]]:
    """Basis of the right kernel of a rational matrix."""
    return [[_to_fraction(x) for x in v] for v in _rational_matrix(rows).nullspace()]


def _primitive_positive(v: Sequence[Fraction]) -> Tuple[int, ...]:
    den = 1
    for x in v:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    ints = [x // g for x in ints]
    if ints[0] < 0:
        ints = [-x for x in ints]
    return tuple(ints)


def determinant(matrix: Sequence[Sequence]) -> Fraction:
    """Exact determinant of a rational matrix."""
    if not matrix:
        return Fraction(1)
    return _to_fraction(_rational_matrix(matrix).det())


@dataclass(frozen=True)
class Root:
    """Element of the root lattice Q as integer coordinates over simple roots."""

    coords: Tuple[int, ...]

    def __add__(self, other: "Root") -> "Root":
        return Root(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Root") -> "Root":
        return Root(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Root":
        return Root(tuple(-a for a in self.coords))

    def __mul__(self, k: int) -> "Root":
        return Root(tuple(k * a for a in self.coords))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_positive(self) -> bool:
        return not self.is_zero() and all(a >= 0 for a in self.coords)

    def is_negative(self) -> bool:
        return not self.is_zero() and all(a <= 0 for a in self.coords)

    def height(self) -> int:
        return sum(self.coords)

    def dominates(self, other: "Root") -> bool:
        """self - other lies in Q_+."""
        return all(a >= b for a, b in zip(self.coords, other.coords))

    def __str__(self) -> str:
        terms = [f"{c}*a{i}" if c != 1 else f"a{i}" for i, c in enumerate(self.coords) if c]
        return " + ".join(terms) if terms else "0"


@dataclass(frozen=True)
class Weight:
    """Element of P given by <h_i, lambda> for i in I and the delta-coordinate <d, lambda>."""

    lam: Tuple[int, ...]
    delta: Fraction = Fraction(0)

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a + b for a, b in zip(self.lam, other.lam)), self.delta + other.delta)

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a - b for a, b in zip(self.lam, other.lam)), self.delta - other.delta)

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.lam), -self.delta)

    def __mul__(self, k: int) -> "Weight":
        return Weight(tuple(k * a for a in self.lam), k * self.delta)

    __rmul__ = __mul__


@dataclass(frozen=True)
class ClWeight:
    """
    Level-zero classical weight as coordinates over cl(varpi_i), i in I_0.

    Coordinates are rational: cl(alpha_n) is a half-integral combination of
    the cl(varpi_i) for A_{2n}^{(2)}.
    """

    coords: Tuple[Fraction, ...]

    @classmethod
    def of(cls, values: Sequence) -> "ClWeight":
        return cls(tuple(Fraction(v) for v in values))

    def __add__(self, other: "ClWeight") -> "ClWeight":
        return ClWeight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "ClWeight") -> "ClWeight":
        return ClWeight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "ClWeight":
        return ClWeight(tuple(-a for a in self.coords))

    def __mul__(self, k) -> "ClWeight":
        k = Fraction(k)
        return ClWeight(tuple(k * a for a in self.coords))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class ClassifiedRoot:
    """A positive root with its R_>, R_0, R_< tag; imaginary entries carry a node."""

    root: Root
    kind: str
    node: Optional[int] = None


class RootDatum:
    """
    All Table Aff numerical data of one affine type.

    Attributes:
        affine_type: The Table Aff entry
        n: Number of classical nodes
        cartan: Generalized Cartan matrix a_ij = <h_i, alpha_j>
        marks: Coefficients of delta on the simple roots
        comarks: Coefficients of c on the simple coroots
        gram: (alpha_i, alpha_j) = a_i^vee / a_i * a_ij
        d: Smallest positive integer with d*(alpha_i, alpha_i)/2 integral
    """

    def __init__(self, affine_type: AffineType):
        affine_type.validate()
        self.affine_type = affine_type
        self.n = affine_type.rank
        self.nodes = tuple(range(self.n + 1))
        self.classical_nodes = tuple(range(1, self.n + 1))

        if str(affine_type) == 'A1~1':
            self.cartan = ((2, -2), (-2, 2))
        else:
            lengths, edges = _diagram(affine_type)
            pair = {}
            for i, j in edges:
                pair[(i, j)] = pair[(j, i)] = -max(lengths[i], lengths[j]) / 2
            self.cartan = tuple(
                tuple(2 if i == j else int(2 * pair.get((i, j), 0) / lengths[i]) for j in self.nodes)
                for i in self.nodes
            )

        right = _nullspace(self.cartan)
        left = _nullspace([list(col) for col in zip(*self.cartan)])
        if len(right) != 1 or len(left) != 1:
            raise DomainError(f"{affine_type}: Cartan matrix is not of affine type")
        self.marks = _primitive_positive(right[0])
        self.comarks = _primitive_positive(left[0])
        if self.marks[0] != 1 or min(self.marks) <= 0 or min(self.comarks) <= 0:
            raise DomainError(f"{affine_type}: unexpected marks {self.marks}")

        self.gram = tuple(
            tuple(Fraction(self.comarks[i], self.marks[i]) * self.cartan[i][j] for j in self.nodes)
            for i in self.nodes
        )
        half_norms = [self.gram[i][i] / 2 for i in self.nodes]
        d = 1
        while any((d * h).denominator != 1 for h in half_norms):
            d += 1
        self.d = d
        # q_i = q_s^{e_i}
        self.exponents = tuple(int(d * h) for h in half_norms)
        # d * (alpha_i, alpha_j), the integer form on the q_s grid
        self.e_gram = tuple(tuple(int(d * g) for g in row) for row in self.gram)
        self.d_i = tuple(max(Fraction(1), h) for h in half_norms)
        self.coxeter = sum(self.marks)
        self.dual_coxeter = sum(self.comarks)

        # varpi_i = k_i Lambda_i - (k_i a_i^vee / a_0^vee) Lambda_0
        a0v = self.comarks[0]
        self.varpi_scale = tuple(
            Fraction(self.comarks[i], a0v).denominator for i in self.nodes
        )
        logger.debug(f"Built root datum {affine_type}: marks={self.marks}, comarks={self.comarks}, d={d}")

    # basic data

    def __repr__(self) -> str:
        return f"RootDatum({self.affine_type})"

    def node_exponent(self, i: int) -> int:
        """e_i with q_i = q_s^{e_i}."""
        return self.exponents[i]

    def simple_root(self, i: int) -> Root:
        return Root(tuple(1 if j == i else 0 for j in self.nodes))

    @cached_property
    def delta(self) -> Root:
        return Root(self.marks)

    def pair(self, x: Root, y: Root) -> Fraction:
        """Invariant form on the root lattice."""
        return sum((a * self.gram[i][j] * b for i, a in enumerate(x.coords) if a
                    for j, b in enumerate(y.coords) if b), Fraction(0))

    def epair(self, x: Sequence[int], y: Sequence[int]) -> int:
        """d * (x, y) for root-lattice coordinate vectors."""
        return sum(a * self.e_gram[i][j] * b for i, a in enumerate(x) if a
                   for j, b in enumerate(y) if b)

    def hpair(self, i: int, x: Root) -> int:
        """<h_i, x> for x in the root lattice."""
        return sum(self.cartan[i][j] * c for j, c in enumerate(x.coords))

    def reflect(self, i: int, x: Root) -> Root:
        k = self.hpair(i, x)
        if k == 0:
            return x
        coords = list(x.coords)
        coords[i] -= k
        return Root(tuple(coords))

    def gram_is_positive_definite(self) -> bool:
        """Leading principal minors of the gram matrix on I_0 are positive."""
        sub = [[self.gram[i][j] for j in self.classical_nodes] for i in self.classical_nodes]
        return all(determinant([row[:k] for row in sub[:k]]) > 0 for k in range(1, self.n + 1))

    # roots

    def delta_degree(self, x: Root) -> int:
        return x.coords[0] // self.marks[0]

    def finite_part(self, x: Root) -> Tuple[int, ...]:
        """Coordinates over I_0 of x - m*delta with m the delta-degree."""
        m = self.delta_degree(x)
        return tuple(x.coords[i] - m * self.marks[i] for i in self.classical_nodes)

    def is_imaginary(self, x: Root) -> bool:
        return not x.is_zero() and not any(self.finite_part(x)) and x.coords[0] % self.marks[0] == 0

    def is_real_root(self, x: Root) -> bool:
        """
        Decide x in the real root system by reflection descent.

        Raises:
            DomainError: If x is zero
        """
        if x.is_zero():
            raise DomainError("zero is not a root")
        if x.is_negative():
            x = -x
        elif not x.is_positive():
            return False
        while True:
            if x.height() == 1:
                return True
            i = next((k for k in self.nodes if self.hpair(k, x) > 0), None)
            if i is None:
                return False
            x = self.reflect(i, x)
            if not x.is_positive():
                return False

    def root_norm(self, x: Root) -> Fraction:
        return self.pair(x, x)

    def d_alpha(self, x: Root) -> Fraction:
        """
        max(1, (alpha, alpha)/2) for a real root.

        Raises:
            DomainError: If x is not a real root
        """
        if x.is_zero() or not self.is_real_root(x):
            raise DomainError(f"d_alpha needs a real root, got {x}")
        return max(Fraction(1), self.pair(x, x) / 2)

    def classify(self, x: Root) -> str:
        """'R>' if cl(x) is a positive classical root, 'R<' if negative, 'R0' if imaginary."""
        fin = self.finite_part(x)
        if not any(fin):
            return 'R0'
        if all(c >= 0 for c in fin):
            return 'R>'
        if all(c <= 0 for c in fin):
            return 'R<'
        raise DomainError(f"{x} has a finite part of mixed sign")

    def enumerate_positive_roots(self, delta_cutoff: int) -> List[ClassifiedRoot]:
        """
        Positive roots with delta-coefficient at most delta_cutoff.

        Real roots are tagged R> or R<; imaginary roots appear as (m*delta, i)
        for every i in I_0 with d_i dividing m.
        """
        if delta_cutoff < 0:
            raise DomainError("delta cutoff must be nonnegative")
        seen = set()
        frontier = [self.simple_root(i) for i in self.nodes]
        for x in frontier:
            seen.add(x)
        while frontier:
            nxt = []
            for x in frontier:
                for i in self.nodes:
                    y = self.reflect(i, x)
                    if y.is_positive() and y.coords[0] <= delta_cutoff and y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt

        entries = [ClassifiedRoot(x, self.classify(x)) for x in seen]
        for m in range(1, delta_cutoff + 1):
            for i in self.classical_nodes:
                if (Fraction(m) / self.d_i[i]).denominator == 1:
                    entries.append(ClassifiedRoot(self.delta * m, 'R0', i))
        entries.sort(key=lambda e: (e.root.coords[0], e.root.height(), e.root.coords, e.node or 0))
        logger.debug(f"{self.affine_type}: {len(entries)} positive roots up to delta-degree {delta_cutoff}")
        return entries

    def real_roots_up_to(self, delta_cutoff: int) -> List[Root]:
        return [e.root for e in self.enumerate_positive_roots(delta_cutoff) if e.kind != 'R0']

    # weights

    def fundamental_weight(self, i: int) -> Weight:
        """Lambda_i."""
        return Weight(tuple(1 if j == i else 0 for j in self.nodes), Fraction(0))

    def delta_weight(self) -> Weight:
        return Weight(tuple(0 for _ in self.nodes), Fraction(self.marks[0]))

    def root_weight(self, x: Root) -> Weight:
        return Weight(tuple(self.hpair(k, x) for k in self.nodes), Fraction(x.coords[0]))

    def level(self, w: Weight) -> int:
        return sum(a * b for a, b in zip(self.comarks, w.lam))

    def weight_pair(self, w: Weight, v: Weight) -> Fraction:
        """
        Invariant form on P.

        Writes w = sum x_j alpha_j + y Lambda_0 and uses
        (alpha_j, v) = <h_j, v> (alpha_j, alpha_j)/2 and (Lambda_0, v) = a_0^vee <d, v>.
        """
        x, y = self._root_coordinates(w)
        total = sum((x[j] * v.lam[j] * self.gram[j][j] / 2 for j in self.nodes), Fraction(0))
        return total + y * self.comarks[0] * v.delta

    def _root_coordinates(self, w: Weight) -> Tuple[List[Fraction], Fraction]:
        y = Fraction(self.level(w), self.comarks[0])
        x0 = w.delta
        # finite Cartan system on I_0
        rows = []
        for i in self.classical_nodes:
            rhs = w.lam[i] - self.cartan[i][0] * x0
            rows.append([Fraction(self.cartan[i][j]) for j in self.classical_nodes] + [rhs])
        sol = _solve(rows)
        return [x0] + sol, y

    def level_zero_fundamental(self, i: int) -> Weight:
        """varpi_i; for A_{2n}^{(2)} the last one is 2 Lambda_n - Lambda_0."""
        if i not in self.classical_nodes:
            raise DomainError(f"varpi_{i} is only defined for classical nodes")
        k = self.varpi_scale[i]
        lam = [0] * (self.n + 1)
        lam[i] = k
        lam[0] = -int(Fraction(k * self.comarks[i], self.comarks[0]))
        return Weight(tuple(lam), Fraction(0))

    # classical weights

    def cl_project(self, w: Weight) -> ClWeight:
        """cl kills delta and the level direction."""
        return ClWeight(tuple(Fraction(w.lam[i], self.varpi_scale[i]) for i in self.classical_nodes))

    def cl_root(self, x: Root) -> ClWeight:
        return ClWeight(tuple(Fraction(self.hpair(i, x), self.varpi_scale[i]) for i in self.classical_nodes))

    def cl_simple(self, i: int) -> ClWeight:
        return self.cl_root(self.simple_root(i))

    def cl_varpi(self, i: int) -> ClWeight:
        return ClWeight(tuple(Fraction(1 if j == i else 0) for j in self.classical_nodes))

    def cl_zero(self) -> ClWeight:
        return ClWeight(tuple(Fraction(0) for _ in self.classical_nodes))

    def cl_hvalue(self, mu: ClWeight, i: int) -> Fraction:
        """<h_i, mu> for a level-zero classical weight, i in I."""
        if i == 0:
            total = sum(self.comarks[j] * self.varpi_scale[j] * mu.coords[j - 1] for j in self.classical_nodes)
            return -Fraction(total) / self.comarks[0]
        return mu.coords[i - 1] * self.varpi_scale[i]

    def cl_from_hvalues(self, values: Sequence) -> ClWeight:
        """Build a classical weight from <h_i, mu> for i in I_0."""
        return ClWeight(tuple(Fraction(v) / self.varpi_scale[i] for i, v in zip(self.classical_nodes, values)))

    @cached_property
    def cl_gram(self) -> Tuple[Tuple[Fraction, ...], ...]:
        """(cl varpi_i, cl varpi_j) induced from the form on P."""
        varpis = [self.level_zero_fundamental(i) for i in self.classical_nodes]
        return tuple(tuple(self.weight_pair(a, b) for b in varpis) for a in varpis)

    def cl_pair(self, a: ClWeight, b: ClWeight) -> Fraction:
        g = self.cl_gram
        return sum((x * g[i][j] * y for i, x in enumerate(a.coords) if x
                    for j, y in enumerate(b.coords) if y), Fraction(0))

    def cl_reflect(self, i: int, mu: ClWeight) -> ClWeight:
        k = self.cl_hvalue(mu, i)
        return mu - self.cl_simple(i) * k if k else mu

    def cl_orbit(self, mu: ClWeight) -> List[ClWeight]:
        """W_cl-orbit of a classical weight."""
        seen = {mu}
        frontier = [mu]
        while frontier:
            nxt = []
            for v in frontier:
                for i in self.classical_nodes:
                    w = self.cl_reflect(i, v)
                    if w not in seen:
                        seen.add(w)
                        nxt.append(w)
            frontier = nxt
        return sorted(seen, key=lambda v: v.coords)

    def tilde_alpha(self, x: Root) -> ClWeight:
        """
        The smallest-length translation direction attached to a real root.

        Raises:
            DomainError: If x is not a real root
        """
        if x.is_zero() or not self.is_real_root(x):
            raise DomainError(f"tilde_alpha needs a real root, got {x}")
        norm = self.pair(x, x)
        cl = self.cl_root(x)
        if self.affine_type.is_untwisted:
            return cl * (self.d_alpha(x) * 2 / norm)
        if self.affine_type.is_a_even_twisted and norm == 4:
            return cl * Fraction(1, 2)
        return cl

    def tilde_omega(self, i: int) -> ClWeight:
        """omega~_i with (cl alpha_j, omega~_i) = delta_ij d_i."""
        values = [Fraction(2) * self.d_i[i] / self.gram[i][i] if j == i else 0 for j in self.classical_nodes]
        return self.cl_from_hvalues(values)

    # section s: P_cl -> P

    def _default_section(self, mu: ClWeight) -> Weight:
        total = Weight(tuple(0 for _ in self.nodes), Fraction(0))
        for i, c in zip(self.classical_nodes, mu.coords):
            if c:
                if c.denominator != 1:
                    raise DomainError(f"{mu} is not in the cl(varpi) lattice")
                total = total + self.level_zero_fundamental(i) * int(c)
        return total

    def section(self, mu: ClWeight, lift: Optional[Callable[[ClWeight], Weight]] = None) -> Weight:
        """
        Lift a classical weight to P through a section s: P_cl -> P.

        Args:
            mu: Classical weight
            lift: Custom section; defaults to s(cl varpi_i) = varpi_i
        """
        w = (lift or self._default_section)(mu)
        if self.cl_project(w) != mu or self.level(w) != 0:
            raise DomainError("section does not lift its argument")
        return w

    # serialization

    def to_dict(self) -> Dict[str, object]:
        """Row-major exact rationals as strings."""
        return {
            'type': str(self.affine_type),
            'rank': self.n,
            'cartan': [[str(a) for a in row] for row in self.cartan],
            'marks': [str(a) for a in self.marks],
            'comarks': [str(a) for a in self.comarks],
            'gram': [[str(a) for a in row] for row in self.gram],
            'd': str(self.d),
            'd_i': [str(a) for a in self.d_i],
            'coxeter': str(self.coxeter),
            'dual_coxeter': str(self.dual_coxeter),
        }


def _solve(rows: List[List[Fraction]]) -> List[Fraction]:
    """
    Solve a square system given as augmented rows.

    Raises:
        DomainError: If the system is singular
    """
    m = _rational_matrix(rows)
    try:
        sol = m[:, :-1].LUsolve(m[:, -1])
    except ValueError as e:
        raise DomainError("singular rational system") from e
    return [_to_fraction(x) for x in sol]


_DATA_CACHE: Dict[str, RootDatum] = {}


def build_root_datum(t) -> RootDatum:
    """
    Build (or fetch) the root datum of an affine type.

    Args:
        t: AffineType or its spelling, e.g. 'A2~2'

    Returns:
        RootDatum: Shared immutable datum

    Raises:
        DomainError: If the type is not a Table Aff entry
    """
    if isinstance(t, str):
        t = AffineType.parse(t)
    key = str(t)
    if key not in _DATA_CACHE:
        _DATA_CACHE[key] = RootDatum(t)
    return _DATA_CACHE[key]
