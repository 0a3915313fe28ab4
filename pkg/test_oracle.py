from fractions import Fraction
from math import factorial

import pytest

from app.combinatorics import CycleType, Partition, SkewShape, centralizer_size, cycle_types_of, partitions_of
from app.exceptions import DomainError, GuardError
from app.oracle import MonomialPoly, count_syt, frobenius_char_value

P = Partition


def shape(outer, inner=()):
    return SkewShape(P(outer), P(inner))


@pytest.mark.parametrize(
    "outer, inner, expected",
    [
        ((2, 1), (), 2),
        ((2, 1), (1,), 2),
        ((1,), (1,), 1),
        ((3, 1), (1,), 3),
        ((3, 2), (), 5),
        ((2, 2), (1,), 2),
        ((), (), 1),
    ],
)
def test_count_syt_examples(outer, inner, expected):
    assert count_syt(shape(outer, inner)) == expected


def test_count_syt_size_guard():
    with pytest.raises(GuardError):
        count_syt(shape((26,)))
    assert count_syt(shape((25,))) == 1


@pytest.mark.parametrize(
    "lam, alpha, expected",
    [
        ((2, 1), (0, 0, 1), -1),
        ((3,), (3,), 1),
        ((3, 1), (0, 2), -1),
        ((2, 1), (3,), 2),
        ((1, 1), (0, 1), -1),
        ((), (), 1),
    ],
)
def test_frobenius_examples(lam, alpha, expected):
    assert frobenius_char_value(P(lam), CycleType(alpha)) == expected


def test_frobenius_guards():
    with pytest.raises(GuardError):
        frobenius_char_value(P((9,)), CycleType.identity(9))
    with pytest.raises(DomainError):
        frobenius_char_value(P((2, 1)), CycleType.identity(4))


@pytest.mark.parametrize("n", range(8))
def test_frobenius_at_identity_counts_tableaux(n):
    for lam in partitions_of(n):
        assert frobenius_char_value(lam, CycleType.identity(n)) == count_syt(SkewShape.straight(lam))


@pytest.mark.parametrize("n", range(7))
def test_column_orthogonality_at_identity(n):
    total = sum(frobenius_char_value(lam, CycleType.identity(n)) ** 2 for lam in partitions_of(n))
    assert total == factorial(n)


@pytest.mark.parametrize("n", range(1, 7))
def test_frobenius_row_orthogonality(n):
    # sum over classes of chi(alpha)^2 / z_alpha = 1 for every irreducible
    for lam in partitions_of(n):
        norm = sum(
            Fraction(frobenius_char_value(lam, alpha) ** 2, centralizer_size(alpha)) for alpha in cycle_types_of(n)
        )
        assert norm == 1


def test_monomial_poly_product_coefficient_matches_full_product():
    a = MonomialPoly.alternant(3)
    p = MonomialPoly.power_sum(3, 2) * MonomialPoly.power_sum(3, 1)
    full = a * p
    for exps in [(5, 1, 0), (4, 2, 0), (3, 2, 1), (2, 3, 1)]:
        assert a.product_coefficient(p, exps) == full.coefficient(exps)


def test_alternant_has_signed_terms():
    a = MonomialPoly.alternant(2)
    assert a.terms == {(1, 0): 1, (0, 1): -1}
