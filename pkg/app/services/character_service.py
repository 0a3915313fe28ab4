# app/services/character_service.py

import logging
import threading
from abc import ABC, abstractmethod
from fractions import Fraction
from math import comb, factorial
from typing import Dict, List, Optional, Tuple

from app.algebra import rational_det
from app.combinatorics import (
    CycleType,
    Partition,
    SkewShape,
    binomial_weight,
    hook_lengths,
    sub_cycle_types,
)
from app.exceptions import ConsistencyError, DomainError

logger = logging.getLogger(__name__)

MemoKey = Tuple[Tuple[int, ...], Tuple[int, ...], Tuple[int, ...]]


def degree_hook(lam: Partition) -> int:
    """f^lambda = |lambda|! / product of hook lengths."""
    product = 1
    for row in hook_lengths(lam):
        for hook in row:
            product *= hook
    return factorial(lam.size) // product


def degree_skew(shape: SkewShape) -> int:
    """
    f^{lambda/mu} = |lambda/mu|! * det[1 / ((lambda_i - i) - (mu_j - j))!].

    Entries with a negative argument are 0. The determinant is taken over
    the rationals and the scaled result must come out integral.
    """
    if shape.is_empty:
        return 1
    d = shape.outer.length
    matrix = [
        [_inverse_factorial(shape.outer.part(i) - i - shape.inner.part(j) + j) for j in range(1, d + 1)]
        for i in range(1, d + 1)
    ]
    value = rational_det(matrix) * factorial(shape.size)
    if value.denominator != 1 or value < 0:
        raise ConsistencyError(f"degree of {shape} evaluated to non-integral or negative {value}")
    return int(value)


def _inverse_factorial(m: int) -> Fraction:
    return Fraction(1, factorial(m)) if m >= 0 else Fraction(0)


def border_strip_removals(shape: SkewShape, length: int) -> List[Tuple[SkewShape, int]]:
    """
    Every way to peel a border strip of ``length`` cells off the outer rim of
    ``shape`` leaving a valid skew shape, with its sign (-1)^(height - 1).

    Works on beta-numbers outer_i - i: a strip removal slides one bead down by
    ``length`` onto a free position, and the beads jumped over count the rows.
    Positions below -len(outer) are treated as occupied.
    """
    outer, inner = shape.outer, shape.inner
    rows = outer.length
    beads = [outer.part(i) - i for i in range(1, rows + 1)]
    occupied = set(beads)
    floor = -rows
    out: List[Tuple[SkewShape, int]] = []
    for idx, bead in enumerate(beads):
        target = bead - length
        if target < floor or target in occupied:
            continue
        jumped = sum(1 for b in beads if target < b < bead)
        moved = sorted((target if k == idx else b for k, b in enumerate(beads)), reverse=True)
        new_outer = [b + i for i, b in enumerate(moved, start=1)]
        if any(new_outer[i - 1] < inner.part(i) for i in range(1, inner.length + 1)):
            continue
        out.append((SkewShape(Partition(tuple(new_outer)), inner), -1 if jumped % 2 else 1))
    return out


class MemoCache:
    """Lock-protected memo table for Murnaghan-Nakayama subproblems."""

    def __init__(self):
        self._data: Dict[MemoKey, int] = {}
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    def get(self, key: MemoKey) -> Optional[int]:
        with self._lock:
            value = self._data.get(key)
            if value is None:
                self.misses += 1
            else:
                self.hits += 1
            return value

    def put(self, key: MemoKey, value: int) -> None:
        with self._lock:
            self._data[key] = value

    def clear(self) -> None:
        with self._lock:
            self._data.clear()
            self.hits = 0
            self.misses = 0

    def __len__(self) -> int:
        with self._lock:
            return len(self._data)


SHARED_CACHE = MemoCache()


class CharacterEvaluator:
    """
    Exact Murnaghan-Nakayama evaluation of chi^{lambda/mu}(alpha).

    The largest remaining cycle is always peeled first. With ``memoize=False``
    every subproblem is recomputed (the naive strategy of the benchmark).
    ``calls`` counts recursion steps across the evaluator's lifetime.
    """

    def __init__(self, memoize: bool = True, cache: Optional[MemoCache] = None):
        self.memoize = memoize
        self.cache = cache if cache is not None else (MemoCache() if memoize else None)
        self.calls = 0
        self._calls_lock = threading.Lock()

    @classmethod
    def for_policy(cls, cache_policy: str = "per-call") -> "CharacterEvaluator":
        if cache_policy == "shared":
            return cls(memoize=True, cache=SHARED_CACHE)
        if cache_policy == "per-call":
            return cls(memoize=True)
        raise DomainError(f"unknown cache policy {cache_policy!r}")

    def value(self, shape: SkewShape, alpha: CycleType) -> int:
        if shape.size != alpha.size:
            raise DomainError(f"shape {shape} has {shape.size} cells but class {alpha} has size {alpha.size}")
        return self._value(shape.canonical(), alpha)

    def _value(self, shape: SkewShape, alpha: CycleType) -> int:
        with self._calls_lock:
            self.calls += 1
        if alpha.size == 0:
            return 1
        key = (shape.outer.parts, shape.inner.parts, alpha.multiplicities)
        if self.memoize:
            cached = self.cache.get(key)
            if cached is not None:
                return cached
        length = alpha.largest
        rest = alpha.remove_cycle(length)
        total = 0
        for smaller, sign in border_strip_removals(shape, length):
            total += sign * self._value(smaller.canonical(), rest)
        if self.memoize:
            self.cache.put(key, total)
        return total


def mn_value(shape: SkewShape, alpha: CycleType, cache_policy: str = "per-call") -> int:
    """chi^{shape}(alpha) by the Murnaghan-Nakayama rule."""
    return CharacterEvaluator.for_policy(cache_policy).value(shape, alpha)


class CharacterFn(ABC):
    """A class function on S_m given by an evaluation rule."""

    @property
    @abstractmethod
    def size(self) -> int:
        """m, the symmetric group the character lives on."""

    @abstractmethod
    def evaluate(self, alpha: CycleType) -> int:
        ...

    def __call__(self, alpha: CycleType) -> int:
        if alpha.size != self.size:
            raise DomainError(f"{self} is a character of S_{self.size}, cannot evaluate at {alpha}")
        return self.evaluate(alpha)

    @property
    def degree(self) -> int:
        return self(CycleType.identity(self.size))


class IrreducibleCharacter(CharacterFn):
    """chi^{lambda/mu} (irreducible when the shape is straight)."""

    def __init__(self, shape: SkewShape, evaluator: Optional[CharacterEvaluator] = None):
        self.shape = shape
        self.evaluator = evaluator or CharacterEvaluator()

    @classmethod
    def of(cls, lam: Partition, evaluator: Optional[CharacterEvaluator] = None) -> "IrreducibleCharacter":
        return cls(SkewShape.straight(lam), evaluator)

    @property
    def size(self) -> int:
        return self.shape.size

    def evaluate(self, alpha: CycleType) -> int:
        return self.evaluator.value(self.shape, alpha)

    @property
    def degree(self) -> int:
        return degree_skew(self.shape)

    def __repr__(self) -> str:
        return f"chi^{self.shape}"


class TrivialCharacter(CharacterFn):
    """The trivial character of S_m, chi^{(m)}."""

    def __init__(self, m: int):
        if m < 0:
            raise DomainError(f"S_{m} does not exist")
        self._m = m

    @property
    def size(self) -> int:
        return self._m

    def evaluate(self, alpha: CycleType) -> int:
        return 1

    def __repr__(self) -> str:
        return f"chi^({self._m})"


class InducedCharacter(CharacterFn):
    """(psi x phi) induced from S_m x S_{n-m} to S_n."""

    def __init__(self, psi: CharacterFn, phi: CharacterFn):
        self.psi = psi
        self.phi = phi

    @property
    def size(self) -> int:
        return self.psi.size + self.phi.size

    def evaluate(self, alpha: CycleType) -> int:
        return induced_value(self.psi, self.phi, alpha)

    def __repr__(self) -> str:
        return f"Ind({self.psi!r} x {self.phi!r})"


def induced_value(psi: CharacterFn, phi: CharacterFn, alpha: CycleType) -> int:
    """
    Value of the character induced from psi x phi at the class alpha:
    sum over beta of prod_i C(a_i, b_i) * psi(beta) * phi(alpha - beta).
    """
    m = psi.size
    if alpha.size != m + phi.size:
        raise DomainError(f"class {alpha} is not a class of S_{m + phi.size}")
    total = 0
    for beta, gamma in sub_cycle_types(alpha, m):
        total += binomial_weight(alpha, beta) * psi(beta) * phi(gamma)
    return total


def induced_degree(m: int, n: int, f_psi: int, f_phi: int) -> int:
    """C(n, m) * f_psi * f_phi."""
    if not 0 <= m <= n:
        raise DomainError(f"need 0 <= m <= n, got m={m}, n={n}")
    return comb(n, m) * f_psi * f_phi
