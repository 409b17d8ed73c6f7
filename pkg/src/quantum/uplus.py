"""
Symbolic engine for the positive half U_q^+.

Elements live in the free algebra on generators E_i (i in I) with
coefficients in Q(q_s). The twisted derivations r_i and _ir define the
unique symmetric bilinear form with (E_i, E_j) = delta_ij / (1 - q_i^{-2});
its radical is the defining ideal of U^+, so equality in U^+ is decided by
pairing against every word of the same weight.

Exponent convention: the twist factors q^{(x, y)} are taken with
q = q_s^d, i.e. q_s raised to d*(x, y), which keeps every exponent on the
integer grid for all types.
"""
import logging
import re
from collections import defaultdict
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from ..algebra_core.cache import MemoCache
from ..algebra_core.qseries import LaurentPoly, RationalFunc, inverse_one_minus, q_factorial
from ..algebra_core.rootdata import Root, RootDatum
from ..workbench_utils.errors import DomainError, LetterInvalidError
from ..workbench_utils.logging import log_method_call

# Set up logging
logger = logging.getLogger(__name__)

Word = Tuple[int, ...]
Scalar = Union[int, Fraction, LaurentPoly, RationalFunc]


class AlgElement:
    """
    Finite linear combination of words with RationalFunc coefficients.

    Zero coefficients are never stored; the empty word is the unit.
    """

    __slots__ = ('_terms',)

    def __init__(self, terms: Optional[Mapping[Word, Scalar]] = None):
        clean: Dict[Word, RationalFunc] = {}
        if terms:
            for w, c in terms.items():
                c = RationalFunc.coerce(c)
                if not c.is_zero():
                    clean[tuple(w)] = c
        self._terms = clean

    @classmethod
    def _raw(cls, clean: Dict[Word, RationalFunc]) -> "AlgElement":
        obj = cls.__new__(cls)
        obj._terms = clean
        return obj

    @classmethod
    def zero(cls) -> "AlgElement":
        return cls._raw({})

    @classmethod
    def one(cls) -> "AlgElement":
        return cls._raw({(): RationalFunc.one()})

    @classmethod
    def generator(cls, i: int) -> "AlgElement":
        return cls._raw({(i,): RationalFunc.one()})

    @classmethod
    def word(cls, letters: Sequence[int], coefficient: Scalar = 1) -> "AlgElement":
        return cls({tuple(letters): coefficient})

    # inspection

    @property
    def terms(self) -> Dict[Word, RationalFunc]:
        return dict(self._terms)

    def items(self) -> List[Tuple[Word, RationalFunc]]:
        return sorted(self._terms.items())

    def coefficient(self, w: Sequence[int]) -> RationalFunc:
        return self._terms.get(tuple(w), RationalFunc.zero())

    def is_zero(self) -> bool:
        return not self._terms

    def contains_letter(self, i: int) -> bool:
        return any(i in w for w in self._terms)

    def weights(self, n_nodes: int) -> List[Tuple[int, ...]]:
        return sorted({word_weight(w, n_nodes) for w in self._terms})

    def components(self, n_nodes: int) -> Dict[Tuple[int, ...], "AlgElement"]:
        """Homogeneous components keyed by weight coordinates."""
        parts: Dict[Tuple[int, ...], Dict[Word, RationalFunc]] = defaultdict(dict)
        for w, c in self._terms.items():
            parts[word_weight(w, n_nodes)][w] = c
        return {nu: AlgElement._raw(t) for nu, t in parts.items()}

    # arithmetic

    def __add__(self, other: "AlgElement") -> "AlgElement":
        out = dict(self._terms)
        for w, c in other._terms.items():
            s = out[w] + c if w in out else c
            if s.is_zero():
                out.pop(w, None)
            else:
                out[w] = s
        return AlgElement._raw(out)

    def __neg__(self) -> "AlgElement":
        return AlgElement._raw({w: -c for w, c in self._terms.items()})

    def __sub__(self, other: "AlgElement") -> "AlgElement":
        return self + (-other)

    def scale(self, c: Scalar) -> "AlgElement":
        c = RationalFunc.coerce(c)
        if c.is_zero():
            return AlgElement.zero()
        return AlgElement._raw({w: v * c for w, v in self._terms.items()})

    def __mul__(self, other) -> "AlgElement":
        if not isinstance(other, AlgElement):
            return self.scale(other)
        return multiply(self, other)

    def __rmul__(self, other) -> "AlgElement":
        return self.scale(other)

    def __pow__(self, k: int) -> "AlgElement":
        result = AlgElement.one()
        for _ in range(k):
            result = result * self
        return result

    def relabel(self, perm: Sequence[int]) -> "AlgElement":
        """Apply a diagram automorphism letterwise."""
        return AlgElement._raw({tuple(perm[a] for a in w): c for w, c in self._terms.items()})

    def __eq__(self, other) -> bool:
        """Syntactic equality in the free algebra; see equal_in_uplus for U^+."""
        if not isinstance(other, AlgElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for w, c in self.items():
            mono = "*".join(f"E{a}" for a in w) if w else "1"
            parts.append(f"({c})*{mono}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"AlgElement({self})"

    def to_json(self) -> List[List[str]]:
        """List of (letter-string, coefficient-string) pairs."""
        return [[" ".join(str(a) for a in w), str(c)] for w, c in self.items()]


def word_weight(w: Sequence[int], n_nodes: int) -> Tuple[int, ...]:
    counts = [0] * n_nodes
    for a in w:
        counts[a] += 1
    return tuple(counts)


def words_of_weight(nu: Sequence[int]) -> List[Word]:
    """All words with letter multiplicities nu, in lexicographic order."""
    nu = list(nu)
    total = sum(nu)
    out: List[Word] = []

    def extend(prefix: List[int], remaining: List[int]) -> None:
        if len(prefix) == total:
            out.append(tuple(prefix))
            return
        for a, left in enumerate(remaining):
            if left:
                remaining[a] -= 1
                prefix.append(a)
                extend(prefix, remaining)
                prefix.pop()
                remaining[a] += 1

    extend([], nu)
    return out


def multiply(x: AlgElement, y: AlgElement) -> AlgElement:
    """Concatenation product, extended bilinearly."""
    out: Dict[Word, RationalFunc] = {}
    for w1, c1 in x._terms.items():
        for w2, c2 in y._terms.items():
            w = w1 + w2
            c = c1 * c2
            out[w] = out[w] + c if w in out else c
    return AlgElement({w: c for w, c in out.items()})


def product(factors: Iterable[AlgElement]) -> AlgElement:
    result = AlgElement.one()
    for f in factors:
        result = multiply(result, f)
    return result


def star(x: AlgElement) -> AlgElement:
    """Anti-automorphism fixing every E_i: reverses every word."""
    return AlgElement._raw({tuple(reversed(w)): c for w, c in x._terms.items()})


def bar_element(x: AlgElement) -> AlgElement:
    """Bar involution: conjugates coefficients, fixes words."""
    return AlgElement._raw({w: c.bar() for w, c in x._terms.items()})


def divided_power(i: int, p: int, datum: RootDatum) -> AlgElement:
    """E_i^{(p)} = E_i^p / [p]_{q_i}!."""
    if p < 0:
        raise DomainError(f"negative divided power {p}")
    return AlgElement.word((i,) * p, RationalFunc(1, q_factorial(p, datum.node_exponent(i))))


def element_divided_power(x: AlgElement, p: int, e: int) -> AlgElement:
    """x^p / [p]! with [p] taken at q_s^e."""
    if p == 0:
        return AlgElement.one()
    return (x ** p).scale(RationalFunc(1, q_factorial(p, e)))


# twisted derivations

def _twist(datum: RootDatum, letters: Iterable[int], i: int) -> int:
    return sum(datum.e_gram[a][i] for a in letters)


def r_i(x: AlgElement, i: int, datum: RootDatum) -> AlgElement:
    """Remove a letter i, twisted by the weight of the letters after it."""
    out: Dict[Word, RationalFunc] = {}
    for w, c in x._terms.items():
        exponent = 0
        for k in range(len(w) - 1, -1, -1):
            if w[k] == i:
                rest = w[:k] + w[k + 1:]
                term = c * LaurentPoly.monomial(exponent)
                out[rest] = out[rest] + term if rest in out else term
            exponent += datum.e_gram[w[k]][i]
    return AlgElement(out)


def ir(x: AlgElement, i: int, datum: RootDatum) -> AlgElement:
    """Remove a letter i, twisted by the weight of the letters before it."""
    out: Dict[Word, RationalFunc] = {}
    for w, c in x._terms.items():
        exponent = 0
        for k, a in enumerate(w):
            if a == i:
                rest = w[:k] + w[k + 1:]
                term = c * LaurentPoly.monomial(exponent)
                out[rest] = out[rest] + term if rest in out else term
            exponent += datum.e_gram[a][i]
    return AlgElement(out)


# the bilinear form

_PAIRING_MEMO: MemoCache = MemoCache(name="form")
_NORMALIZER: Dict[Tuple[str, Tuple[int, ...]], RationalFunc] = {}


def _pairing_poly(datum: RootDatum, w: Word, x: Word) -> LaurentPoly:
    """
    Laurent part of (w, x) for words of equal weight.

    (w, x) = K(nu) * P(w, x) with K(nu) = prod_i (1 - q_i^{-2})^{-nu_i} and
    P(a y, x) = sum_{k : x_k = a} q_s^{d (wt x_<k, alpha_a)} P(y, x minus k).
    """
    if not w:
        return LaurentPoly.one()
    key = (str(datum.affine_type), w, x)
    cached = _PAIRING_MEMO.get(key)
    if cached is not None:
        return cached
    a, rest = w[0], w[1:]
    total = LaurentPoly.zero()
    exponent = 0
    row = datum.e_gram
    for k, letter in enumerate(x):
        if letter == a:
            total = total + _pairing_poly(datum, rest, x[:k] + x[k + 1:]).shift(exponent)
        exponent += row[letter][a]
    _PAIRING_MEMO.set(key, total)
    return total


def weight_normalizer(datum: RootDatum, nu: Sequence[int]) -> RationalFunc:
    """K(nu) = prod_i (1 - q_i^{-2})^{-nu_i}."""
    key = (str(datum.affine_type), tuple(nu))
    if key not in _NORMALIZER:
        value = RationalFunc.one()
        for i, m in enumerate(nu):
            if m:
                value = value * inverse_one_minus(2 * datum.node_exponent(i)) ** m
        _NORMALIZER[key] = value
    return _NORMALIZER[key]


def word_form(w: Sequence[int], x: Sequence[int], datum: RootDatum) -> RationalFunc:
    """Form value on a pair of words."""
    w, x = tuple(w), tuple(x)
    if sorted(w) != sorted(x):
        return RationalFunc.zero()
    nu = word_weight(w, datum.n + 1)
    return weight_normalizer(datum, nu) * _pairing_poly(datum, w, x)


def form(x: AlgElement, y: AlgElement, datum: RootDatum) -> RationalFunc:
    """
    The symmetric bilinear form on U^+.

    Args:
        x: First element
        y: Second element
        datum: Root datum fixing q_i and the twists

    Returns:
        RationalFunc: (x, y); zero across distinct weights
    """
    n_nodes = datum.n + 1
    y_parts = y.components(n_nodes)
    total = RationalFunc.zero()
    for nu, x_part in x.components(n_nodes).items():
        y_part = y_parts.get(nu)
        if y_part is None:
            continue
        partial = RationalFunc.zero()
        for w1, c1 in x_part._terms.items():
            for w2, c2 in y_part._terms.items():
                p = _pairing_poly(datum, w1, w2)
                if p:
                    partial = partial + c1 * c2 * p
        total = total + partial * weight_normalizer(datum, nu)
    return total


def form_against_words(x: AlgElement, words: Sequence[Word], datum: RootDatum) -> List[RationalFunc]:
    """The vector ((x, w))_w for a list of words of one weight."""
    return [form(x, AlgElement.word(w), datum) for w in words]


def equal_in_uplus(x: AlgElement, y: AlgElement, datum: RootDatum) -> bool:
    """x = y in U^+ iff x - y pairs to zero with every word of its weights."""
    diff = x - y
    for nu, part in diff.components(datum.n + 1).items():
        for w in words_of_weight(nu):
            acc = RationalFunc.zero()
            for v, c in part._terms.items():
                p = _pairing_poly(datum, v, w)
                if p:
                    acc = acc + c * p
            if not acc.is_zero():
                return False
    return True


def is_zero_in_uplus(x: AlgElement, datum: RootDatum) -> bool:
    return equal_in_uplus(x, AlgElement.zero(), datum)


@log_method_call()
def gram_matrix(nu: Sequence[int], datum: RootDatum) -> Tuple[List[Word], List[List[RationalFunc]]]:
    """Words of weight nu and their pairwise form values."""
    words = words_of_weight(nu)
    matrix = [[word_form(a, b, datum) for b in words] for a in words]
    return words, matrix


def form_cache_stats() -> Tuple[int, int]:
    return _PAIRING_MEMO.hits, _PAIRING_MEMO.misses


def configure_form_cache(max_size: int) -> None:
    """Bound the memo table of the form recursion."""
    if max_size < 1:
        raise DomainError(f"form cache size must be positive, got {max_size}")
    _PAIRING_MEMO.resize(max_size)
    logger.debug(f"form cache bounded at {max_size} entries")


# relations and braid operators

def serre_element(i: int, j: int, datum: RootDatum) -> AlgElement:
    """sum_p (-1)^p E_i^{(p)} E_j E_i^{(b - p)} with b = 1 - a_ij."""
    if i == j:
        raise DomainError("Serre relations need i != j")
    b = 1 - datum.cartan[i][j]
    total = AlgElement.zero()
    for p in range(b + 1):
        term = divided_power(i, p, datum) * AlgElement.generator(j) * divided_power(i, b - p, datum)
        total = total + (term if p % 2 == 0 else -term)
    return total


_BRAID_CACHE: Dict[Tuple[str, int, int, bool], AlgElement] = {}


def braid_on_generator(i: int, j: int, datum: RootDatum, inverse: bool = False) -> AlgElement:
    """
    T_i(E_j) = sum_{r+s=-a_ij} (-1)^r q_i^{-r} E_i^{(s)} E_j E_i^{(r)}.

    With inverse=True returns T_i^{-1}(E_j), the star-conjugate
    sum (-1)^r q_i^{-r} E_i^{(r)} E_j E_i^{(s)}.

    Raises:
        LetterInvalidError: If j == i (T_i(E_i) is not in U^+)
    """
    if i == j:
        raise LetterInvalidError(f"T_{i}(E_{i}) does not lie in U^+")
    key = (str(datum.affine_type), i, j, inverse)
    if key in _BRAID_CACHE:
        return _BRAID_CACHE[key]
    a = -datum.cartan[i][j]
    e = datum.node_exponent(i)
    total = AlgElement.zero()
    for r in range(a + 1):
        s = a - r
        sign = -1 if r % 2 else 1
        left, right = (divided_power(i, s, datum), divided_power(i, r, datum))
        if inverse:
            left, right = right, left
        term = left * AlgElement.generator(j) * right
        total = total + term.scale(LaurentPoly.monomial(-e * r, sign))
    _BRAID_CACHE[key] = total
    return total


def braid_apply(i: int, x: AlgElement, datum: RootDatum, inverse: bool = False) -> AlgElement:
    """
    Extend T_i (or T_i^{-1}) multiplicatively over the letters of x.

    Raises:
        LetterInvalidError: If some word of x contains the letter i
    """
    if x.contains_letter(i):
        raise LetterInvalidError(f"T_{i} applied to an element containing E_{i}")
    images = {j: braid_on_generator(i, j, datum, inverse) for j in datum.nodes if j != i}
    total = AlgElement.zero()
    for w, c in x._terms.items():
        total = total + product(images[a] for a in w).scale(c)
    return total


# text form

_TOKEN = re.compile(r'E(\d+)')


def _split_top_level(text: str) -> List[str]:
    terms, depth, start = [], 0, 0
    for k, ch in enumerate(text):
        if ch == '(':
            depth += 1
        elif ch == ')':
            depth -= 1
        elif ch in '+-' and depth == 0 and k > start and text[k - 1] not in '^*/(':
            terms.append(text[start:k])
            start = k
    terms.append(text[start:])
    return [t for t in terms if t]


def parse_element(text: str, datum: RootDatum) -> AlgElement:
    """
    Parse expressions such as "E0*E1 - (q^-2)*E1*E0" or "1/2*E1*E1".

    Raises:
        DomainError: On malformed input or letters outside I
    """
    s = text.replace(" ", "")
    if not s:
        raise DomainError("empty element text")
    total = AlgElement.zero()
    for term in _split_top_level(s):
        sign = 1
        if term[0] in '+-':
            sign = -1 if term[0] == '-' else 1
            term = term[1:]
        letters: List[int] = []
        coefficient = RationalFunc.one()
        depth, start, factors = 0, 0, []
        for k, ch in enumerate(term):
            if ch == '(':
                depth += 1
            elif ch == ')':
                depth -= 1
            elif ch == '*' and depth == 0:
                factors.append(term[start:k])
                start = k + 1
        factors.append(term[start:])
        for factor in factors:
            m = _TOKEN.fullmatch(factor)
            if m:
                a = int(m.group(1))
                if a not in datum.nodes:
                    raise DomainError(f"letter E{a} outside the node set of {datum.affine_type}")
                letters.append(a)
            elif factor == '1':
                continue
            else:
                inner = factor[1:-1] if factor.startswith('(') and factor.endswith(')') else factor
                try:
                    coefficient = coefficient * RationalFunc.parse(inner)
                except DomainError as e:
                    raise DomainError(f"cannot parse factor '{factor}' in '{text}'") from e
        total = total + AlgElement.word(letters, coefficient * sign)
    return total


def root_of_weight(nu: Sequence[int]) -> Root:
    return Root(tuple(nu))
