# app/combinatorics.py

"""
Partitions, skew shapes and cycle types.

All three types are immutable and hashable so they can key memo tables.
Cells are addressed 1-based as (row i, column j); the tuples stored inside
are plain 0-based Python sequences.
"""

import logging
import re
from dataclasses import dataclass
from math import comb, factorial
from typing import Iterator, List, Optional, Sequence, Tuple

from app.exceptions import DomainError, ParseError

logger = logging.getLogger(__name__)

_MULTIPLICATIVE = re.compile(r"^\s*(\d+)\s*\^\s*(\d+)\s*$")


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing tuple of positive integers; () is the partition of 0."""

    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p <= 0 for p in parts):
            raise DomainError(f"partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise DomainError(f"partition parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``3,2,1``; ``0`` (or an empty string) is the empty partition."""
        tokens = [tok.strip() for tok in str(text).split(",") if tok.strip()]
        try:
            values = [int(tok) for tok in tokens]
        except ValueError:
            raise ParseError(f"not a partition: {text!r}")
        if values == [0]:
            values = []
        try:
            return cls(tuple(values))
        except DomainError as e:
            raise ParseError(f"not a partition: {text!r} ({e})")

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def first(self) -> int:
        """lambda_1, or 0 for the empty partition."""
        return self.parts[0] if self.parts else 0

    def part(self, i: int) -> int:
        """1-based part lookup, 0 beyond the length."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def contains(self, other: "Partition") -> bool:
        if other.length > self.length:
            return False
        return all(other.part(i) <= self.part(i) for i in range(1, other.length + 1))

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts) if self.parts else "0"


def conjugate(lam: Partition) -> Partition:
    """Transpose of the Young diagram."""
    if not lam.parts:
        return Partition()
    return Partition(tuple(sum(1 for p in lam.parts if p >= j) for j in range(1, lam.first + 1)))


def hook_lengths(lam: Partition) -> Tuple[Tuple[int, ...], ...]:
    """Hook length of every cell, row by row: lambda_i - j + lambda'_j - i + 1."""
    conj = conjugate(lam)
    return tuple(
        tuple(lam.part(i) - j + conj.part(j) - i + 1 for j in range(1, lam.part(i) + 1))
        for i in range(1, lam.length + 1)
    )


def first_row_extend(lam: Partition, n: int) -> Partition:
    """The partition (n, lambda_1, ..., lambda_t) of n + |lambda|."""
    if n < 1 or n < lam.first:
        raise DomainError(f"cannot prepend row {n} to {lam}: need n >= {max(lam.first, 1)}")
    return Partition((n,) + lam.parts)


def column_strip(j: int) -> Partition:
    """The single column (1^j)."""
    if j < 0:
        raise DomainError(f"column length must be non-negative, got {j}")
    return Partition((1,) * j)


def partitions_of(k: int, max_part: Optional[int] = None) -> Iterator[Partition]:
    """All partitions of k in reverse-lexicographic order."""
    if k < 0:
        return
    if max_part is None:
        max_part = k

    def _gen(remaining: int, bound: int) -> Iterator[Tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, bound), 0, -1):
            for rest in _gen(remaining - first, first):
                yield (first,) + rest

    for parts in _gen(k, max_part):
        yield Partition(parts)


@dataclass(frozen=True)
class SkewShape:
    """outer/inner with inner contained in outer."""

    outer: Partition
    inner: Partition = Partition()

    def __post_init__(self):
        if not self.outer.contains(self.inner):
            raise DomainError(f"skew shape {self.outer}/{self.inner}: inner is not contained in outer")

    @classmethod
    def straight(cls, lam: Partition) -> "SkewShape":
        return cls(lam, Partition())

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    @property
    def is_empty(self) -> bool:
        return self.size == 0

    @property
    def is_straight(self) -> bool:
        return self.inner.length == 0

    def row_bounds(self) -> List[Tuple[int, int]]:
        """(inner_i, outer_i) for every row of the outer partition."""
        return [(self.inner.part(i), self.outer.part(i)) for i in range(1, self.outer.length + 1)]

    def canonical(self) -> "SkewShape":
        """
        Same cells up to translation, with empty rows dropped and columns
        that are empty in every row removed from the left.
        """
        rows = [(lo, hi) for lo, hi in self.row_bounds() if hi > lo]
        if not rows:
            return SkewShape(Partition(), Partition())
        shift = min(lo for lo, _ in rows)
        return SkewShape(
            Partition(tuple(hi - shift for _, hi in rows)),
            Partition(tuple(lo - shift for lo, _ in rows)),
        )

    def __str__(self) -> str:
        if self.is_straight:
            return str(self.outer)
        return f"{self.outer}/{self.inner}"


@dataclass(frozen=True)
class CycleType:
    """Multiplicity vector (a_1, a_2, ...) of a conjugacy class; trailing zeros dropped."""

    multiplicities: Tuple[int, ...] = ()

    def __post_init__(self):
        mult = tuple(int(a) for a in self.multiplicities)
        if any(a < 0 for a in mult):
            raise DomainError(f"cycle multiplicities must be non-negative: {mult}")
        while mult and mult[-1] == 0:
            mult = mult[:-1]
        object.__setattr__(self, "multiplicities", mult)

    @classmethod
    def from_parts(cls, parts: Sequence[int]) -> "CycleType":
        if any(int(p) <= 0 for p in parts):
            raise DomainError(f"cycle lengths must be positive: {tuple(parts)}")
        mult = [0] * (max(parts) if parts else 0)
        for p in parts:
            mult[int(p) - 1] += 1
        return cls(tuple(mult))

    @classmethod
    def identity(cls, n: int) -> "CycleType":
        """1^n."""
        return cls((n,)) if n > 0 else cls()

    @classmethod
    def rectangular(cls, r: int, s: int) -> "CycleType":
        """r^s."""
        if r < 1:
            raise DomainError(f"cycle length must be positive, got {r}")
        return cls((0,) * (r - 1) + (s,))

    @classmethod
    def from_partition(cls, nu: Partition) -> "CycleType":
        return cls.from_parts(nu.parts)

    @classmethod
    def parse(cls, text: str) -> "CycleType":
        """Parse ``3,1,1`` or ``1^2,3^1`` (tokens may be mixed); ``0`` is the empty class."""
        tokens = [tok.strip() for tok in str(text).split(",") if tok.strip()]
        if tokens == ["0"]:
            return cls()
        mult: dict = {}
        for tok in tokens:
            match = _MULTIPLICATIVE.match(tok)
            try:
                length, count = (int(match.group(1)), int(match.group(2))) if match else (int(tok), 1)
            except ValueError:
                raise ParseError(f"not a cycle type: {text!r}")
            if length <= 0:
                raise ParseError(f"not a cycle type: {text!r} (cycle lengths must be positive)")
            mult[length] = mult.get(length, 0) + count
        if not mult:
            return cls()
        return cls(tuple(mult.get(i, 0) for i in range(1, max(mult) + 1)))

    @property
    def size(self) -> int:
        return sum(i * a for i, a in enumerate(self.multiplicities, start=1))

    @property
    def largest(self) -> int:
        return len(self.multiplicities)

    def multiplicity(self, i: int) -> int:
        return self.multiplicities[i - 1] if 1 <= i <= len(self.multiplicities) else 0

    def parts(self) -> Tuple[int, ...]:
        """Cycle lengths, weakly decreasing."""
        out: List[int] = []
        for i in range(self.largest, 0, -1):
            out.extend([i] * self.multiplicity(i))
        return tuple(out)

    def remove_cycle(self, length: int) -> "CycleType":
        if self.multiplicity(length) == 0:
            raise DomainError(f"no {length}-cycle in {self}")
        mult = list(self.multiplicities)
        mult[length - 1] -= 1
        return CycleType(tuple(mult))

    def with_fixed_points(self, d: int) -> "CycleType":
        """(nu, 1^d): add d to the multiplicity of 1-cycles."""
        if d < 0:
            raise DomainError(f"cannot add {d} fixed points")
        mult = list(self.multiplicities) or [0]
        mult[0] += d
        return CycleType(tuple(mult))

    def minus(self, other: "CycleType") -> "CycleType":
        width = max(self.largest, other.largest)
        return CycleType(tuple(self.multiplicity(i) - other.multiplicity(i) for i in range(1, width + 1)))

    def __str__(self) -> str:
        terms = [f"{i}^{a}" for i, a in enumerate(self.multiplicities, start=1) if a]
        return ",".join(terms) if terms else "0"


def cycle_types_of(n: int) -> Iterator[CycleType]:
    for nu in partitions_of(n):
        yield CycleType.from_partition(nu)


def sub_cycle_types(alpha: CycleType, m: int) -> Iterator[Tuple[CycleType, CycleType]]:
    """
    Every (beta, alpha - beta) with 0 <= b_i <= a_i and sum i*b_i = m.

    Longer cycles are chosen first; the stream is empty when no sub-type exists.
    """
    if m < 0 or m > alpha.size:
        return
    width = alpha.largest

    def _choose(i: int, remaining: int, chosen: Tuple[int, ...]) -> Iterator[Tuple[int, ...]]:
        if i == 0:
            if remaining == 0:
                yield chosen
            return
        top = min(alpha.multiplicity(i), remaining // i)
        for b in range(top, -1, -1):
            yield from _choose(i - 1, remaining - i * b, (b,) + chosen)

    for b in _choose(width, m, ()):
        beta = CycleType(b)
        yield beta, alpha.minus(beta)


def centralizer_size(alpha: CycleType) -> int:
    """prod_i a_i! * i^a_i."""
    size = 1
    for i, a in enumerate(alpha.multiplicities, start=1):
        size *= factorial(a) * i ** a
    return size


def centralizer_index(alpha: CycleType, beta: CycleType) -> int:
    """|Cent(alpha)| / (|Cent(beta)| * |Cent(alpha - beta)|), computed as a quotient."""
    gamma = alpha.minus(beta)
    numerator = centralizer_size(alpha)
    denominator = centralizer_size(beta) * centralizer_size(gamma)
    if numerator % denominator:
        raise DomainError(f"{beta} is not a sub-cycle-type of {alpha}")
    return numerator // denominator


def binomial_weight(alpha: CycleType, beta: CycleType) -> int:
    """prod_i C(a_i, b_i)."""
    weight = 1
    for i in range(1, alpha.largest + 1):
        weight *= comb(alpha.multiplicity(i), beta.multiplicity(i))
    return weight
