# app/services/stable_character_service.py

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from app.algebra import RatPoly, binomial, binomial_poly, ratpoly_interpolate
from app.combinatorics import (
    CycleType,
    Partition,
    SkewShape,
    binomial_weight,
    column_strip,
    first_row_extend,
    sub_cycle_types,
)
from app.exceptions import ConsistencyError, DomainError
from app.services.character_service import (
    CharacterEvaluator,
    IrreducibleCharacter,
    TrivialCharacter,
    degree_skew,
    induced_value,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class StableClassSpec:
    """The classes (nu, 1^{n+k-m}) of S_{n+k}, for lambda |- k and nu |- m fixed."""

    lam: Partition
    nu: Partition

    @property
    def k(self) -> int:
        return self.lam.size

    @property
    def m(self) -> int:
        return self.nu.size

    def class_at(self, n: int) -> CycleType:
        fixed = n + self.k - self.m
        if fixed < 0:
            raise DomainError(f"(nu, 1^d) needs d >= 0, got d={fixed} at n={n}")
        return CycleType.from_partition(self.nu).with_fixed_points(fixed)

    @property
    def valid_from(self) -> int:
        """Conservative start of the stable regime: max(lambda_1, m), and at least 1."""
        return max(self.lam.first, self.m, 1)


@dataclass(frozen=True)
class StablePolynomial:
    poly: RatPoly
    valid_from: int


class StableCharacterService:
    """Closed-form expansions of degrees and character values of chi^{(n, lambda)}."""

    def __init__(self, evaluator: Optional[CharacterEvaluator] = None):
        self.evaluator = evaluator or CharacterEvaluator()

    def _check_first_row(self, lam: Partition, n: int) -> None:
        if n < max(lam.first, 1):
            raise DomainError(f"n={n} must satisfy n >= lambda_1 = {lam.first} (and n >= 1)")

    def cz_degree(self, lam: Partition, n: int) -> int:
        """f^{(n, lambda)} = sum_j (-1)^j C(n+k, k-j) f^{lambda/(1^j)}."""
        self._check_first_row(lam, n)
        k = lam.size
        total = 0
        for j in range(lam.length + 1):
            term = binomial(n + k, k - j) * degree_skew(SkewShape(lam, column_strip(j)))
            total += -term if j % 2 else term
        return total

    def cz_degree_poly(self, lam: Partition) -> RatPoly:
        """The degree of chi^{(n, lambda)} as a polynomial in n."""
        k = lam.size
        total = RatPoly()
        for j in range(lam.length + 1):
            term = binomial_poly(k, k - j) * degree_skew(SkewShape(lam, column_strip(j)))
            total = total - term if j % 2 else total + term
        return total

    def _rect_terms(self, lam: Partition, r: int):
        """(j, (k-j)/r, chi^{lambda/(1^j)}(r^{(k-j)/r})) for every j with r | k-j."""
        k = lam.size
        for j in range(lam.length + 1):
            if (k - j) % r:
                continue
            s = (k - j) // r
            value = self.evaluator.value(SkewShape(lam, column_strip(j)), CycleType.rectangular(r, s))
            yield j, s, value

    def rect_class_value(self, lam: Partition, n: int, r: int) -> int:
        """
        chi^{(n, lambda)} at r^{(n+k)/r} through the skew characters chi^{lambda/(1^j)}.

        Args:
            lam: the fixed partition lambda, with lambda_1 <= n
            n: first-row length of (n, lambda)
            r: cycle length, must divide n + k

        Returns:
            The exact character value
        """
        self._check_first_row(lam, n)
        if r < 1:
            raise DomainError(f"cycle length r must be positive, got {r}")
        k = lam.size
        if (n + k) % r:
            raise DomainError(f"r={r} does not divide n+k={n + k}")
        total = 0
        for j, s, value in self._rect_terms(lam, r):
            term = binomial((n + k) // r, s) * value
            total += -term if j % 2 else term
        return total

    def rect_class_poly(self, lam: Partition, r: int) -> RatPoly:
        """Polynomial in n agreeing with rect_class_value wherever r | n+k."""
        if r < 1:
            raise DomainError(f"cycle length r must be positive, got {r}")
        total = RatPoly()
        for j, s, value in self._rect_terms(lam, r):
            term = binomial_poly(lam.size, s, scale=r) * value
            total = total - term if j % 2 else total + term
        return total

    def cz_class_value(self, lam: Partition, n: int, alpha: CycleType) -> int:
        """
        chi^{(n, lambda)}(alpha) as the alternating sum of characters induced
        from chi^{(n+j)} x chi^{lambda/(1^j)}.
        """
        self._check_first_row(lam, n)
        k = lam.size
        if alpha.size != n + k:
            raise DomainError(f"class {alpha} is not a class of S_{n + k}")
        total = 0
        for j in range(lam.length + 1):
            psi = TrivialCharacter(n + j)
            phi = IrreducibleCharacter(SkewShape(lam, column_strip(j)), self.evaluator)
            term = induced_value(psi, phi, alpha)
            total += -term if j % 2 else term
        return total

    def direct_value(self, spec: StableClassSpec, n: int) -> int:
        """chi^{(n, lambda)} at (nu, 1^{n+k-m}) straight from Murnaghan-Nakayama."""
        return self.evaluator.value(SkewShape.straight(first_row_extend(spec.lam, n)), spec.class_at(n))

    def stable_char_poly(self, spec: StableClassSpec) -> StablePolynomial:
        """
        The polynomial p(n) with p(n) = chi^{(n, lambda)}(nu, 1^{n+k-m}) for
        every n >= valid_from, built from the double sum over j and b_1 and
        then checked against interpolation of direct evaluations.

        Args:
            spec: lambda and the non-trivial part nu of the class

        Returns:
            StablePolynomial with the polynomial and its valid_from

        Raises:
            ConsistencyError: if the double sum and the interpolation disagree
        """
        lam, k, m = spec.lam, spec.k, spec.m
        nu_type = CycleType.from_partition(spec.nu)
        a1 = nu_type.multiplicity(1)
        long_cycles = CycleType((0,) + nu_type.multiplicities[1:])

        poly = RatPoly()
        for j in range(lam.length + 1):
            shape = SkewShape(lam, column_strip(j))
            inner_sum = RatPoly()
            for b1 in range(k - j + 1):
                coefficient = 0
                for beta, _ in sub_cycle_types(long_cycles, k - j - b1):
                    value = self.evaluator.value(shape, beta.with_fixed_points(b1))
                    coefficient += binomial_weight(long_cycles, beta) * value
                if coefficient:
                    inner_sum = inner_sum + binomial_poly(k - m + a1, b1) * coefficient
            poly = poly - inner_sum if j % 2 else poly + inner_sum

        result = StablePolynomial(poly, spec.valid_from)
        self._post_check(spec, result)
        return result

    def _post_check(self, spec: StableClassSpec, result: StablePolynomial) -> None:
        nodes = range(result.valid_from, result.valid_from + spec.k + 1)
        interpolated = ratpoly_interpolate([(n, Fraction(self.direct_value(spec, n))) for n in nodes])
        if interpolated != result.poly:
            logger.error(
                f"stable polynomial for lambda={spec.lam}, nu={spec.nu} is {result.poly}, "
                f"interpolation gives {interpolated}"
            )
            raise ConsistencyError(
                f"stable character polynomial for lambda={spec.lam}, nu={spec.nu}: "
                f"formula {result.poly} != interpolation {interpolated}"
            )
        logger.debug(f"stable polynomial for lambda={spec.lam}, nu={spec.nu}: {result.poly} (from n={result.valid_from})")
