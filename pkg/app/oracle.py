# app/oracle.py

"""
Reference implementations used only to check the production code.

Nothing here imports the character or Jacobi-Trudi services: tableau
counting is a plain corner-removal recursion and character values come from
coefficient extraction in a Vandermonde-times-power-sum product.
"""

import logging
from functools import lru_cache
from itertools import permutations
from typing import Dict, Optional, Sequence, Tuple

from app.combinatorics import CycleType, Partition, SkewShape
from app.exceptions import DomainError, GuardError

logger = logging.getLogger(__name__)

MAX_SYT_CELLS = 25
MAX_FROBENIUS_SIZE = 8


class MonomialPoly:
    """Sparse polynomial in a fixed number of variables x_1..x_N with integer coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Optional[Dict[Tuple[int, ...], int]] = None):
        self.nvars = nvars
        self.terms: Dict[Tuple[int, ...], int] = {}
        for exps, coeff in (terms or {}).items():
            if len(exps) != nvars:
                raise DomainError(f"exponent vector {exps} does not have {nvars} entries")
            if coeff:
                self.terms[tuple(exps)] = self.terms.get(tuple(exps), 0) + coeff
        self.terms = {e: c for e, c in self.terms.items() if c}

    @classmethod
    def one(cls, nvars: int) -> "MonomialPoly":
        return cls(nvars, {(0,) * nvars: 1})

    @classmethod
    def power_sum(cls, nvars: int, i: int) -> "MonomialPoly":
        """p_i = x_1^i + ... + x_N^i."""
        return cls(nvars, {tuple(i if v == w else 0 for v in range(nvars)): 1 for w in range(nvars)})

    @classmethod
    def alternant(cls, nvars: int) -> "MonomialPoly":
        """a_delta = sum over sigma of sign(sigma) x^{sigma(delta)}, delta = (N-1, ..., 0)."""
        delta = tuple(range(nvars - 1, -1, -1))
        terms = {}
        for perm in permutations(range(nvars)):
            terms[tuple(delta[p] for p in perm)] = _sign(perm)
        return cls(nvars, terms)

    def __mul__(self, other: "MonomialPoly") -> "MonomialPoly":
        out: Dict[Tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                out[key] = out.get(key, 0) + c1 * c2
        return MonomialPoly(self.nvars, out)

    def coefficient(self, exps: Sequence[int]) -> int:
        return self.terms.get(tuple(exps), 0)

    def product_coefficient(self, other: "MonomialPoly", exps: Sequence[int]) -> int:
        """Coefficient of x^exps in self * other without forming the whole product."""
        total = 0
        for e1, c1 in self.terms.items():
            rest = tuple(t - a for t, a in zip(exps, e1))
            if min(rest, default=0) >= 0:
                total += c1 * other.coefficient(rest)
        return total


def _sign(perm: Sequence[int]) -> int:
    inversions = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


@lru_cache(maxsize=None)
def _count_corners(outer: Tuple[int, ...], inner: Tuple[int, ...]) -> int:
    if sum(outer) == sum(inner):
        return 1
    total = 0
    for i, row in enumerate(outer):
        below = outer[i + 1] if i + 1 < len(outer) else 0
        floor = inner[i] if i < len(inner) else 0
        # the last cell of row i is a corner of the skew shape
        if row > floor and row > below:
            total += _count_corners(outer[:i] + (row - 1,) + outer[i + 1:], inner)
    return total


def count_syt(shape: SkewShape) -> int:
    """Number of standard Young tableaux of a skew shape, by removing the largest entry in every possible corner."""
    if shape.size > MAX_SYT_CELLS:
        raise GuardError(f"count_syt is limited to {MAX_SYT_CELLS} cells, shape {shape} has {shape.size}")
    return _count_corners(shape.outer.parts, shape.inner.parts)


def frobenius_char_value(lam: Partition, alpha: CycleType) -> int:
    """chi^lambda(alpha) as the coefficient of x^(lambda + delta) in a_delta * p_alpha."""
    n = lam.size
    if alpha.size != n:
        raise DomainError(f"class {alpha} is not a class of S_{n}")
    if n > MAX_FROBENIUS_SIZE:
        raise GuardError(f"frobenius_char_value is limited to n <= {MAX_FROBENIUS_SIZE}, got {n}")
    nvars = lam.length
    if nvars == 0:
        return 1
    power_sums = MonomialPoly.one(nvars)
    for cycle in alpha.parts():
        power_sums = power_sums * MonomialPoly.power_sum(nvars, cycle)
    target = tuple(lam.parts[i] + nvars - 1 - i for i in range(nvars))
    return MonomialPoly.alternant(nvars).product_coefficient(power_sums, target)
