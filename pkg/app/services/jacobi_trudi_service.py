# app/services/jacobi_trudi_service.py

import logging
from dataclasses import dataclass, field
from typing import List, Tuple

from app.algebra import HPoly, hpoly_det, hpoly_generator, render_terms
from app.combinatorics import Partition, SkewShape, column_strip, first_row_extend
from app.exceptions import DomainError

logger = logging.getLogger(__name__)

WITNESS_CAP = 20


@dataclass(frozen=True)
class JTMatrix:
    """H^{lambda/mu}: entry (i, j) is h_{lambda_i - i - mu_j + j}, dimension length(lambda)."""

    shape: SkewShape
    entries: Tuple[Tuple[HPoly, ...], ...]

    @property
    def dimension(self) -> int:
        return len(self.entries)

    def minor(self, row: int, col: int) -> Tuple[Tuple[HPoly, ...], ...]:
        """Delete 1-based ``row`` and ``col``."""
        return tuple(
            tuple(entry for c, entry in enumerate(line, start=1) if c != col)
            for r, line in enumerate(self.entries, start=1)
            if r != row
        )

    def determinant(self) -> HPoly:
        return hpoly_det(self.entries)


@dataclass
class IdentityCheck:
    """Outcome of an exact HPoly comparison; ``witness`` lists differing terms of lhs - rhs."""

    holds: bool
    lhs: HPoly
    rhs: HPoly
    witness: List[str] = field(default_factory=list)


def jt_matrix(shape: SkewShape) -> JTMatrix:
    d = shape.outer.length
    entries = tuple(
        tuple(
            hpoly_generator(shape.outer.part(i) - i - shape.inner.part(j) + j)
            for j in range(1, d + 1)
        )
        for i in range(1, d + 1)
    )
    return JTMatrix(shape, entries)


def skew_schur_h(shape: SkewShape) -> HPoly:
    """s_{lambda/mu} in the h basis, as det H^{lambda/mu}."""
    return jt_matrix(shape).determinant()


def _compare(lhs: HPoly, rhs: HPoly) -> IdentityCheck:
    if lhs == rhs:
        return IdentityCheck(True, lhs, rhs)
    diff = (lhs - rhs).sorted_terms()[:WITNESS_CAP]
    witness = [render_terms([term]) for term in diff]
    return IdentityCheck(False, lhs, rhs, witness)


def schur_expansion_rhs(lam: Partition, n: int) -> HPoly:
    """sum_{j=0}^{t} (-1)^j h_{n+j} s_{lambda/(1^j)}."""
    total = HPoly.zero()
    for j in range(lam.length + 1):
        term = hpoly_generator(n + j) * skew_schur_h(SkewShape(lam, column_strip(j)))
        total = total - term if j % 2 else total + term
    return total


def verify_schur_identity(lam: Partition, n: int) -> IdentityCheck:
    """s_{(n, lambda)} against the first-row expansion through the skew Schur functions s_{lambda/(1^j)}."""
    extended = first_row_extend(lam, n)
    lhs = skew_schur_h(SkewShape.straight(extended))
    check = _compare(lhs, schur_expansion_rhs(lam, n))
    if not check.holds:
        logger.error(f"Schur expansion fails for lambda={lam}, n={n}: {check.witness}")
    return check


def verify_minor_identity(lam: Partition, j: int) -> IdentityCheck:
    """
    The minor of H^{(n, lambda)} with row 1 and column j+1 deleted equals
    s_{lambda/(1^j)}. The minor never sees the first row, so n = lambda_1 is used.

    Args:
        lam: a non-empty partition
        j: 0 <= j <= len(lambda)

    Returns:
        IdentityCheck with both sides and up to WITNESS_CAP differing monomials
    """
    if lam.length == 0:
        raise DomainError("minor identity needs a non-empty partition")
    if not 0 <= j <= lam.length:
        raise DomainError(f"column index j={j} outside 0..{lam.length}")
    matrix = jt_matrix(SkewShape.straight(first_row_extend(lam, lam.first)))
    minor = hpoly_det(matrix.minor(1, j + 1))
    check = _compare(minor, skew_schur_h(SkewShape(lam, column_strip(j))))
    if not check.holds:
        logger.error(f"minor identity fails for lambda={lam}, j={j}: {check.witness}")
    return check
