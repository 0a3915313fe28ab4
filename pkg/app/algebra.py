# app/algebra.py

"""
Exact algebra: integer binomials, univariate rational polynomials in the
stability parameter n, and the sparse integer polynomial ring in h_1, h_2, ...

Nothing here touches floating point; rationals are fractions.Fraction.
Determinants and interpolation over the rationals go through sympy and are
converted back to Fraction at the boundary.
"""

import logging
from fractions import Fraction
from math import comb, factorial
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

import sympy
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from app.exceptions import DomainError

logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction]


def binomial(a: int, b: int) -> int:
    """C(a, b) with the falling-factorial convention for any integer a; 0 when b < 0."""
    if b < 0:
        return 0
    if a >= 0:
        return comb(a, b)
    numerator = 1
    for i in range(b):
        numerator *= a - i
    return numerator // factorial(b)


class RatPoly:
    """Polynomial in n with Fraction coefficients, stored in ascending degree."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        values = [Fraction(c) for c in coeffs]
        while values and values[-1] == 0:
            values.pop()
        self._coeffs: Tuple[Fraction, ...] = tuple(values)

    @classmethod
    def constant(cls, c: Scalar) -> "RatPoly":
        return cls((c,))

    @classmethod
    def variable(cls) -> "RatPoly":
        return cls((0, 1))

    @property
    def coefficients(self) -> Tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial."""
        return len(self._coeffs) - 1

    @property
    def leading_coefficient(self) -> Fraction:
        return self._coeffs[-1] if self._coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __call__(self, n: Scalar) -> Fraction:
        value = Fraction(0)
        for c in reversed(self._coeffs):
            value = value * n + c
        return value

    def _coerce(self, other) -> "RatPoly":
        if isinstance(other, RatPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return RatPoly.constant(other)
        return NotImplemented

    def __add__(self, other) -> "RatPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        width = max(len(self._coeffs), len(other._coeffs))
        a = self._coeffs + (Fraction(0),) * (width - len(self._coeffs))
        b = other._coeffs + (Fraction(0),) * (width - len(other._coeffs))
        return RatPoly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self) -> "RatPoly":
        return RatPoly(-c for c in self._coeffs)

    def __sub__(self, other) -> "RatPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "RatPoly":
        return (-self) + other

    def __mul__(self, other) -> "RatPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self._coeffs or not other._coeffs:
            return RatPoly()
        out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, x in enumerate(self._coeffs):
            if x == 0:
                continue
            for j, y in enumerate(other._coeffs):
                out[i + j] += x * y
        return RatPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"RatPoly({[str(c) for c in self._coeffs]})"

    def __str__(self) -> str:
        terms = [(e, c) for e, c in enumerate(self._coeffs) if c != 0]
        if not terms:
            return "0"
        pieces: List[str] = []
        for e, c in reversed(terms):
            magnitude = abs(c)
            if e == 0:
                body = str(magnitude)
            else:
                power = "n" if e == 1 else f"n^{e}"
                body = power if magnitude == 1 else f"{magnitude}*{power}"
            if not pieces:
                pieces.append(f"-{body}" if c < 0 else body)
            else:
                pieces.append(f"- {body}" if c < 0 else f"+ {body}")
        return " ".join(pieces)


def binomial_poly(offset: int, b: int, scale: int = 1) -> RatPoly:
    """C((n + offset) / scale, b) as a polynomial in n."""
    if b < 0:
        return RatPoly()
    if scale < 1:
        raise DomainError(f"scale must be positive, got {scale}")
    poly = RatPoly.constant(1)
    for i in range(b):
        # (n + offset)/scale - i
        poly = poly * RatPoly((Fraction(offset, scale) - i, Fraction(1, scale)))
    return poly * Fraction(1, factorial(b))


_N = sympy.Symbol("n")


def _from_sympy(value) -> Fraction:
    rational = sympy.Rational(value)
    return Fraction(int(rational.p), int(rational.q))


def _to_sympy(value: Scalar) -> sympy.Rational:
    value = Fraction(value)
    return sympy.Rational(value.numerator, value.denominator)


def ratpoly_interpolate(points: Sequence[Tuple[int, Scalar]]) -> RatPoly:
    """Interpolating polynomial through the points, degree < len(points)."""
    if not points:
        raise DomainError("interpolation needs at least one point")
    xs = [x for x, _ in points]
    if len(set(xs)) != len(xs):
        raise DomainError(f"duplicate abscissae in {xs}")
    data = [(sympy.Integer(x), _to_sympy(y)) for x, y in points]
    expr = sympy.interpolate(data, _N) if len(data) > 1 else data[0][1]
    coeffs = sympy.Poly(expr, _N, domain=QQ).all_coeffs()
    return RatPoly(_from_sympy(c) for c in reversed(coeffs))


Exponents = Tuple[int, ...]


def _trim(exps: Sequence[int]) -> Exponents:
    exps = list(exps)
    while exps and exps[-1] == 0:
        exps.pop()
    return tuple(exps)


def _graded_lex_key(exps: Exponents) -> Tuple[int, Exponents]:
    return (-sum(exps), tuple(-e for e in exps))


class HPoly:
    """
    Sparse integer polynomial in the commuting generators h_1, h_2, ...

    Terms map an exponent vector (e_1, e_2, ...) with no trailing zeros to a
    non-zero integer coefficient. The empty map is 0 and {(): 1} is 1.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Dict[Sequence[int], int]] = None):
        clean: Dict[Exponents, int] = {}
        for exps, coeff in (terms or {}).items():
            key = _trim(exps)
            if any(e < 0 for e in key):
                raise DomainError(f"negative exponent in {exps}")
            clean[key] = clean.get(key, 0) + int(coeff)
        self._terms: Dict[Exponents, int] = {k: v for k, v in clean.items() if v != 0}
        self._hash = None

    @classmethod
    def zero(cls) -> "HPoly":
        return cls()

    @classmethod
    def one(cls) -> "HPoly":
        return cls({(): 1})

    @classmethod
    def constant(cls, c: int) -> "HPoly":
        return cls({(): c})

    @property
    def terms(self) -> Dict[Exponents, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def sorted_terms(self) -> List[Tuple[Exponents, int]]:
        """Terms in graded-lex order: higher total degree first, then larger exponents of h_1, h_2, ..."""
        return sorted(self._terms.items(), key=lambda item: _graded_lex_key(item[0]))

    def __add__(self, other) -> "HPoly":
        if isinstance(other, int):
            other = HPoly.constant(other)
        if not isinstance(other, HPoly):
            return NotImplemented
        out = dict(self._terms)
        for exps, coeff in other._terms.items():
            out[exps] = out.get(exps, 0) + coeff
        return HPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "HPoly":
        return HPoly({exps: -c for exps, c in self._terms.items()})

    def __sub__(self, other) -> "HPoly":
        if isinstance(other, int):
            other = HPoly.constant(other)
        if not isinstance(other, HPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "HPoly":
        if isinstance(other, int):
            return HPoly({exps: c * other for exps, c in self._terms.items()})
        if not isinstance(other, HPoly):
            return NotImplemented
        out: Dict[Exponents, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                width = max(len(e1), len(e2))
                exps = tuple(
                    (e1[i] if i < len(e1) else 0) + (e2[i] if i < len(e2) else 0) for i in range(width)
                )
                out[exps] = out.get(exps, 0) + c1 * c2
        return HPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = HPoly.constant(other)
        if not isinstance(other, HPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"HPoly({self})"

    def __str__(self) -> str:
        return render_terms(self.sorted_terms())


def render_monomial(exps: Exponents) -> str:
    factors = []
    for r, e in enumerate(exps, start=1):
        if e == 1:
            factors.append(f"h{r}")
        elif e > 1:
            factors.append(f"h{r}^{e}")
    return "*".join(factors)


def render_terms(terms: Sequence[Tuple[Exponents, int]]) -> str:
    """``c * h1^e1*h2^e2`` terms joined by signs; unit coefficients and exponents elided."""
    if not terms:
        return "0"
    pieces: List[str] = []
    for exps, coeff in terms:
        monomial = render_monomial(exps)
        magnitude = abs(coeff)
        if not monomial:
            body = str(magnitude)
        elif magnitude == 1:
            body = monomial
        else:
            body = f"{magnitude} * {monomial}"
        if not pieces:
            pieces.append(f"-{body}" if coeff < 0 else body)
        else:
            pieces.append(f"- {body}" if coeff < 0 else f"+ {body}")
    return " ".join(pieces)


def hpoly_generator(r: int) -> HPoly:
    """h_r, with h_0 = 1 and h_r = 0 for r < 0."""
    if r < 0:
        return HPoly.zero()
    if r == 0:
        return HPoly.one()
    return HPoly({(0,) * (r - 1) + (1,): 1})


def hpoly_det(matrix: Sequence[Sequence[HPoly]]) -> HPoly:
    """
    Exact determinant over the h-ring by Laplace expansion along the top row.

    Minors are memoized on the set of surviving columns, so a d x d matrix
    costs O(d * 2^d) ring operations instead of d!.
    """
    d = len(matrix)
    if any(len(row) != d for row in matrix):
        raise DomainError(f"determinant needs a square matrix, got {d} rows of lengths {[len(r) for r in matrix]}")
    memo: Dict[Tuple[int, ...], HPoly] = {}

    def _minor(cols: Tuple[int, ...]) -> HPoly:
        row = d - len(cols)
        if not cols:
            return HPoly.one()
        if cols in memo:
            return memo[cols]
        total = HPoly.zero()
        for pos, c in enumerate(cols):
            entry = matrix[row][c]
            if entry.is_zero():
                continue
            term = entry * _minor(cols[:pos] + cols[pos + 1:])
            total = total - term if pos % 2 else total + term
        memo[cols] = total
        return total

    return _minor(tuple(range(d)))


def rational_det(matrix: Sequence[Sequence[Scalar]]) -> Fraction:
    """Exact determinant of a square matrix over QQ."""
    d = len(matrix)
    if any(len(row) != d for row in matrix):
        raise DomainError(f"determinant needs a square matrix, got {d} rows of lengths {[len(r) for r in matrix]}")
    if d == 0:
        return Fraction(1)
    rows = [[QQ.from_sympy(_to_sympy(x)) for x in row] for row in matrix]
    return _from_sympy(QQ.to_sympy(DomainMatrix(rows, (d, d), QQ).det()))


def iter_coefficients(poly: RatPoly) -> Iterator[str]:
    """Ascending coefficients rendered as ``p/q`` (or an integer) strings."""
    for c in poly.coefficients:
        yield str(c)
