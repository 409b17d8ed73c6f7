"""
Exact arithmetic in Q(q_s).

Laurent polynomials and reduced rational functions in the single variable
q_s, q-integers and Gaussian binomials on the q_s grid, and the
order-at-infinity predicates used to state "regular at q_s = infinity".
All exponents are exponents of q_s; q = q_s^d and q_i = q_s^{e_i}.
"""
import logging
import math
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Tuple, Union

from ..workbench_utils.errors import DomainError

# Set up logging
logger = logging.getLogger(__name__)

Number = Union[int, Fraction]


def _norm(c) -> Number:
    """Coerce a coefficient to int when integral, Fraction otherwise."""
    if isinstance(c, bool):
        return int(c)
    if isinstance(c, int):
        return c
    if not isinstance(c, Fraction):
        c = Fraction(c)
    return int(c.numerator) if c.denominator == 1 else c


class LaurentPoly:
    """
    Immutable Laurent polynomial in q_s with rational coefficients.

    The zero polynomial has no terms; zero coefficients are never stored.
    """

    __slots__ = ('_c', '_hash')

    def __init__(self, coeffs: Optional[Mapping[int, Number]] = None):
        clean: Dict[int, Number] = {}
        if coeffs:
            for e, c in coeffs.items():
                c = _norm(c)
                if c != 0:
                    clean[int(e)] = c
        self._c = clean
        self._hash = None

    # construction helpers

    @classmethod
    def _raw(cls, clean: Dict[int, Number]) -> "LaurentPoly":
        obj = cls.__new__(cls)
        obj._c = clean
        obj._hash = None
        return obj

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls._raw({})

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls._raw({0: 1})

    @classmethod
    def constant(cls, c: Number) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, exponent: int, coefficient: Number = 1) -> "LaurentPoly":
        return cls({exponent: coefficient})

    @classmethod
    def coerce(cls, value) -> "LaurentPoly":
        if isinstance(value, LaurentPoly):
            return value
        if isinstance(value, (int, Fraction)):
            return cls.constant(value)
        raise TypeError(f"cannot coerce {type(value).__name__} to LaurentPoly")

    # inspection

    @property
    def coeffs(self) -> Dict[int, Number]:
        return dict(self._c)

    def items(self) -> List[Tuple[int, Number]]:
        """Terms as (exponent, coefficient), highest exponent first."""
        return sorted(self._c.items(), reverse=True)

    def coefficient(self, exponent: int) -> Number:
        return self._c.get(exponent, 0)

    def is_zero(self) -> bool:
        return not self._c

    def is_constant(self) -> bool:
        return not self._c or set(self._c) == {0}

    def is_monomial(self) -> bool:
        return len(self._c) == 1

    def degree(self) -> Optional[int]:
        """Highest exponent, None for zero."""
        return max(self._c) if self._c else None

    def valuation(self) -> Optional[int]:
        """Lowest exponent, None for zero."""
        return min(self._c) if self._c else None

    def leading_coefficient(self) -> Number:
        return self._c[max(self._c)] if self._c else 0

    def constant_term(self) -> Number:
        return self._c.get(0, 0)

    def has_integer_coefficients(self) -> bool:
        return all(isinstance(c, int) for c in self._c.values())

    # arithmetic

    def __bool__(self) -> bool:
        return bool(self._c)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw({e: -c for e, c in self._c.items()})

    def __add__(self, other) -> "LaurentPoly":
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._c)
        for e, c in other._c.items():
            s = out.get(e, 0) + c
            if s == 0:
                out.pop(e, None)
            else:
                out[e] = _norm(s)
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __sub__(self, other) -> "LaurentPoly":
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return LaurentPoly.zero()
            return LaurentPoly._raw({e: _norm(c * other) for e, c in self._c.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out: Dict[int, Number] = {}
        for e1, c1 in self._c.items():
            for e2, c2 in other._c.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly({e: c for e, c in out.items()})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            if not self.is_monomial():
                raise DomainError("negative powers are only defined for monomials")
            (e, c), = self._c.items()
            return LaurentPoly({e * k: Fraction(c) ** k})
        result = LaurentPoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c: Number) -> "LaurentPoly":
        return self * _norm(c)

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by q_s^k."""
        return LaurentPoly._raw({e + k: c for e, c in self._c.items()})

    def bar(self) -> "LaurentPoly":
        """Substitute q_s -> q_s^{-1}."""
        return LaurentPoly._raw({-e: c for e, c in self._c.items()})

    def is_bar_invariant(self) -> bool:
        return self == self.bar()

    def negative_part(self) -> "LaurentPoly":
        """Terms with strictly negative exponent."""
        return LaurentPoly._raw({e: c for e, c in self._c.items() if e < 0})

    def in_q_inverse_z(self) -> bool:
        """True iff the polynomial lies in q_s^{-1} Z[q_s^{-1}]."""
        return all(e < 0 and isinstance(c, int) for e, c in self._c.items())

    def sqrt(self) -> "LaurentPoly":
        """
        Square root of a perfect square with positive leading coefficient.

        Raises:
            DomainError: If the polynomial is not a perfect square
        """
        if self.is_zero():
            return self
        top = self.degree()
        bottom = self.valuation()
        if (top - bottom) % 2 or top % 2:
            raise DomainError(f"{self} is not a perfect square")
        lead = Fraction(self.leading_coefficient())
        root_lead = _rational_sqrt(lead)
        # long square root from the top exponent downward
        half_top = top // 2
        root: Dict[int, Number] = {half_top: root_lead}
        remainder = self - LaurentPoly(root) * LaurentPoly(root)
        for e in range(half_top - 1, bottom // 2 - 1, -1):
            c = Fraction(remainder.coefficient(e + half_top)) / (2 * root_lead)
            if c:
                root[e] = c
                term = LaurentPoly({e: c})
                remainder = remainder - term * (LaurentPoly(root) * 2 - term)
        if not remainder.is_zero():
            raise DomainError(f"{self} is not a perfect square")
        return LaurentPoly(root)

    # comparison and hashing

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == ({0: _norm(other)} if other != 0 else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    # text

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts: List[str] = []
        for e, c in self.items():
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                power = "q" if e == 1 else f"q^{e}"
                body = power if mag == 1 else f"{mag}*{power}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly('{self}')"

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        """
        Parse the rendering grammar "a*q^n + b*q + c".

        Raises:
            DomainError: On malformed input
        """
        s = text.replace(" ", "")
        if not s:
            raise DomainError("empty polynomial text")
        terms: List[str] = []
        start = 0
        for idx in range(1, len(s)):
            if s[idx] in "+-" and s[idx - 1] not in "^*/":
                terms.append(s[start:idx])
                start = idx
        terms.append(s[start:])

        out: Dict[int, Number] = {}
        for term in terms:
            sign = 1
            if term[0] in "+-":
                sign = -1 if term[0] == "-" else 1
                term = term[1:]
            try:
                if "q" in term:
                    coef_part, _, power_part = term.partition("q")
                    coef_part = coef_part.rstrip("*")
                    coef = Fraction(coef_part) if coef_part else Fraction(1)
                    if power_part:
                        if not power_part.startswith("^"):
                            raise ValueError(power_part)
                        exp = int(power_part[1:])
                    else:
                        exp = 1
                else:
                    coef, exp = Fraction(term), 0
            except (ValueError, ZeroDivisionError) as e:
                raise DomainError(f"cannot parse polynomial term '{term}' in '{text}'") from e
            out[exp] = out.get(exp, 0) + sign * coef
        return cls(out)


Q = LaurentPoly.monomial(1)


def _rational_sqrt(x: Fraction) -> Fraction:
    if x < 0:
        raise DomainError(f"negative leading coefficient {x} has no rational square root")
    n, d = math.isqrt(x.numerator), math.isqrt(x.denominator)
    if n * n != x.numerator or d * d != x.denominator:
        raise DomainError(f"{x} is not a rational square")
    return Fraction(n, d)


# ordinary polynomials as coefficient lists, lowest degree first

def _trim(p: List[Fraction]) -> List[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _to_list(f: LaurentPoly) -> List[Fraction]:
    """Coefficient list of a Laurent polynomial with valuation >= 0."""
    top = f.degree()
    return [Fraction(f.coefficient(e)) for e in range(top + 1)] if top is not None else []


def _from_list(p: Iterable[Fraction], shift: int = 0) -> LaurentPoly:
    return LaurentPoly({e + shift: c for e, c in enumerate(p) if c})


def _divmod(a: List[Fraction], b: List[Fraction]) -> Tuple[List[Fraction], List[Fraction]]:
    a = list(a)
    if len(a) < len(b):
        return [], _trim(a)
    quotient = [Fraction(0)] * (len(a) - len(b) + 1)
    lead = b[-1]
    for k in range(len(a) - len(b), -1, -1):
        c = a[k + len(b) - 1] / lead
        quotient[k] = c
        if c:
            for j, bc in enumerate(b):
                a[k + j] -= c * bc
    return _trim(quotient), _trim(a[:len(b) - 1])


def _gcd(a: List[Fraction], b: List[Fraction]) -> List[Fraction]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        _, r = _divmod(a, b)
        a, b = b, r
    if not a:
        return [Fraction(1)]
    lead = a[-1]
    return [c / lead for c in a]


class RationalFunc:
    """
    Reduced rational function num/den in q_s.

    Canonical form: the denominator has lowest exponent 0 and leading
    coefficient 1, numerator and denominator are coprime.
    """

    __slots__ = ('num', 'den', '_hash')

    def __init__(self, num=0, den=1):
        num = LaurentPoly.coerce(num)
        den = LaurentPoly.coerce(den)
        if den.is_zero():
            raise DomainError("zero denominator")
        self.num, self.den = self._reduce(num, den)
        self._hash = None

    @staticmethod
    def _reduce(num: LaurentPoly, den: LaurentPoly) -> Tuple[LaurentPoly, LaurentPoly]:
        if num.is_zero():
            return LaurentPoly.zero(), LaurentPoly.one()
        if den == 1:
            return num, den
        v = den.valuation()
        den = den.shift(-v)
        num = num.shift(-v)
        if den.is_constant():
            return num * (Fraction(1) / Fraction(den.constant_term())), LaurentPoly.one()
        u = num.valuation()
        n_list = _to_list(num.shift(-u))
        d_list = _to_list(den)
        g = _gcd(n_list, d_list)
        if len(g) > 1:
            n_list, _ = _divmod(n_list, g)
            d_list, _ = _divmod(d_list, g)
        lead = d_list[-1]
        n_list = [c / lead for c in n_list]
        d_list = [c / lead for c in d_list]
        return _from_list(n_list, u), _from_list(d_list)

    @classmethod
    def _raw(cls, num: LaurentPoly, den: LaurentPoly) -> "RationalFunc":
        obj = cls.__new__(cls)
        obj.num, obj.den, obj._hash = num, den, None
        return obj

    @classmethod
    def coerce(cls, value) -> "RationalFunc":
        if isinstance(value, RationalFunc):
            return value
        if isinstance(value, LaurentPoly):
            return cls._raw(value, LaurentPoly.one())
        if isinstance(value, (int, Fraction)):
            return cls._raw(LaurentPoly.constant(value), LaurentPoly.one())
        raise TypeError(f"cannot coerce {type(value).__name__} to RationalFunc")

    @classmethod
    def zero(cls) -> "RationalFunc":
        return cls._raw(LaurentPoly.zero(), LaurentPoly.one())

    @classmethod
    def one(cls) -> "RationalFunc":
        return cls._raw(LaurentPoly.one(), LaurentPoly.one())

    # predicates

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_laurent(self) -> bool:
        return self.den == 1

    def as_laurent(self) -> LaurentPoly:
        if not self.is_laurent():
            raise DomainError(f"{self} is not a Laurent polynomial")
        return self.num

    def ord_at_infinity(self):
        """deg(den) - deg(num); plus infinity for zero."""
        if self.num.is_zero():
            return math.inf
        return self.den.degree() - self.num.degree()

    def in_a_infinity(self) -> bool:
        """Regular at q_s = infinity."""
        return self.ord_at_infinity() >= 0

    def in_q_inverse_a_infinity(self) -> bool:
        """Lies in q_s^{-1} A_infinity."""
        return self.ord_at_infinity() >= 1

    def value_at_infinity(self) -> Number:
        """Value at q_s = infinity for elements of A_infinity."""
        order = self.ord_at_infinity()
        if order < 0:
            raise DomainError(f"{self} is not regular at infinity")
        if order > 0:
            return 0
        return _norm(Fraction(self.num.leading_coefficient()) / Fraction(self.den.leading_coefficient()))

    # arithmetic

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def __neg__(self) -> "RationalFunc":
        return RationalFunc._raw(-self.num, self.den)

    def __add__(self, other) -> "RationalFunc":
        try:
            other = RationalFunc.coerce(other)
        except TypeError:
            return NotImplemented
        if self.den == other.den:
            return RationalFunc(self.num + other.num, self.den)
        return RationalFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other) -> "RationalFunc":
        try:
            other = RationalFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RationalFunc":
        return RationalFunc.coerce(other) - self

    def __mul__(self, other) -> "RationalFunc":
        try:
            other = RationalFunc.coerce(other)
        except TypeError:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return RationalFunc.zero()
        if self.is_laurent() and other.is_laurent():
            return RationalFunc._raw(self.num * other.num, self.den)
        return RationalFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFunc":
        other = RationalFunc.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "RationalFunc":
        return RationalFunc.coerce(other) / self

    def __pow__(self, k: int) -> "RationalFunc":
        if k < 0:
            return RationalFunc.one() / (self ** -k)
        return RationalFunc(self.num ** k, self.den ** k)

    def bar(self) -> "RationalFunc":
        """Substitute q_s -> q_s^{-1}."""
        return RationalFunc(self.num.bar(), self.den.bar())

    # comparison and hashing

    def __eq__(self, other) -> bool:
        try:
            other = RationalFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __str__(self) -> str:
        if self.den == 1:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"RationalFunc('{self}')"

    @classmethod
    def parse(cls, text: str) -> "RationalFunc":
        """Parse "(num)/(den)" or a bare Laurent polynomial."""
        s = text.strip()
        if s.startswith("(") and ")/(" in s and s.endswith(")"):
            num_text, den_text = s[1:-1].split(")/(", 1)
            return cls(LaurentPoly.parse(num_text), LaurentPoly.parse(den_text))
        return cls.coerce(LaurentPoly.parse(s))


def ord_at_infinity(f) -> Union[int, float]:
    """Order of vanishing at q_s = infinity; math.inf for zero."""
    return RationalFunc.coerce(f).ord_at_infinity()


def bar(f):
    """Bar involution q_s -> q_s^{-1} on LaurentPoly or RationalFunc."""
    if isinstance(f, (int, Fraction)):
        return RationalFunc.coerce(f)
    return f.bar()


def q_integer(n: int, e: int = 1) -> LaurentPoly:
    """[n] evaluated at q_s^e."""
    if n < 0:
        return -q_integer(-n, e)
    return LaurentPoly({e * (n - 1 - 2 * k): 1 for k in range(n)})


def q_factorial(n: int, e: int = 1) -> LaurentPoly:
    """[n]! evaluated at q_s^e."""
    if n < 0:
        raise DomainError(f"q-factorial of negative integer {n}")
    result = LaurentPoly.one()
    for k in range(2, n + 1):
        result = result * q_integer(k, e)
    return result


def q_binomial_poly(n: int, r: int, e: int = 1) -> LaurentPoly:
    """Gaussian binomial [n choose r] evaluated at q_s^e."""
    if r < 0 or n < 0:
        raise DomainError(f"q-binomial needs nonnegative arguments, got ({n}, {r})")
    if n < r:
        raise DomainError(f"q-binomial needs n >= r, got ({n}, {r})")
    # Pascal rows in q_i: [n,r] = q_i^{-r}[n-1,r] + q_i^{n-r}[n-1,r-1]
    row = [LaurentPoly.one()]
    for m in range(1, n + 1):
        nxt = [LaurentPoly.one()]
        for k in range(1, m):
            nxt.append(row[k].shift(-e * k) + row[k - 1].shift(e * (m - k)))
        nxt.append(LaurentPoly.one())
        row = nxt
    return row[r]


def q_binomial(n: int, r: int, i: int, datum) -> LaurentPoly:
    """
    Gaussian binomial at q_i for node i of an affine root datum.

    Args:
        n: Upper argument
        r: Lower argument, at most n
        i: Node index
        datum: RootDatum supplying q_i = q_s^{e_i}

    Returns:
        LaurentPoly: The symmetric polynomial [n choose r]_{q_i}
    """
    return q_binomial_poly(n, r, datum.node_exponent(i))


def inverse_one_minus(e: int) -> RationalFunc:
    """1 / (1 - q_s^{-e})."""
    return RationalFunc(LaurentPoly.monomial(e), LaurentPoly({e: 1, 0: -1}))
