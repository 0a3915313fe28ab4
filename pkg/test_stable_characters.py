import time
from fractions import Fraction
from math import factorial

import pytest

from app.algebra import RatPoly
from app.combinatorics import CycleType, Partition, SkewShape, cycle_types_of, first_row_extend, partitions_of
from app.exceptions import DomainError
from app.oracle import count_syt
from app.services.character_service import CharacterEvaluator, degree_hook, mn_value
from app.services.stable_character_service import StableCharacterService, StableClassSpec

P = Partition


@pytest.fixture
def service():
    return StableCharacterService()


def _partitions_up_to(k_max):
    for k in range(k_max + 1):
        yield from partitions_of(k)


def _direct(lam, n, alpha):
    return mn_value(SkewShape.straight(first_row_extend(lam, n)), alpha)


@pytest.mark.parametrize("lam, n, expected", [((1,), 3, 3), ((), 5, 1), ((2, 1), 2, 5), ((1, 1), 2, 3)])
def test_cz_degree_examples(service, lam, n, expected):
    assert service.cz_degree(P(lam), n) == expected


def test_cz_degree_rejects_short_first_row(service):
    with pytest.raises(DomainError):
        service.cz_degree(P((3,)), 2)
    with pytest.raises(DomainError):
        service.cz_degree(P(()), 0)


def test_cz_degree_poly_examples(service):
    assert service.cz_degree_poly(P((1,))) == RatPoly.variable()
    assert service.cz_degree_poly(P(())) == RatPoly.constant(1)
    assert service.cz_degree_poly(P((2,))) == RatPoly((-1, Fraction(1, 2), Fraction(1, 2)))
    assert str(service.cz_degree_poly(P((2,)))) == "1/2*n^2 + 1/2*n - 1"


@pytest.mark.parametrize("lam", list(_partitions_up_to(5)))
def test_cz_degree_poly_shape(service, lam):
    poly = service.cz_degree_poly(lam)
    assert poly.degree == lam.size
    assert poly.leading_coefficient == Fraction(degree_hook(lam), factorial(lam.size))
    for n in range(max(lam.first, 1), 12):
        assert poly(n) == service.cz_degree(lam, n)


def test_cz_degree_three_ways(service):
    for lam in _partitions_up_to(6):
        for n in range(max(lam.first, 1), 13):
            extended = first_row_extend(lam, n)
            expected = degree_hook(extended)
            assert service.cz_degree(lam, n) == expected, (lam, n)
            if extended.size <= 14:
                assert count_syt(SkewShape.straight(extended)) == expected


@pytest.mark.parametrize(
    "lam, n, r, expected",
    [((1,), 3, 2, -1), ((), 4, 2, 1), ((2,), 2, 2, 2), ((1,), 2, 3, -1), ((1, 1), 1, 3, 1)],
)
def test_rect_class_value_examples(service, lam, n, r, expected):
    assert service.rect_class_value(P(lam), n, r) == expected


def test_rect_class_value_rejects_bad_cycle_length(service):
    with pytest.raises(DomainError):
        service.rect_class_value(P((1,)), 3, 3)
    with pytest.raises(DomainError):
        service.rect_class_value(P((1,)), 3, 0)


def test_rect_class_value_sweep(service):
    for lam in _partitions_up_to(3):
        for r in (1, 2, 3):
            for n in range(max(lam.first, 1), 9):
                if (n + lam.size) % r == 0:
                    alpha = CycleType.rectangular(r, (n + lam.size) // r)
                    assert service.rect_class_value(lam, n, r) == _direct(lam, n, alpha), (lam, n, r)


@pytest.mark.slow
def test_rect_class_value_full_sweep(service):
    for lam in _partitions_up_to(5):
        for r in (1, 2, 3, 4):
            for n in range(max(lam.first, 1), 15):
                if (n + lam.size) % r == 0:
                    alpha = CycleType.rectangular(r, (n + lam.size) // r)
                    assert service.rect_class_value(lam, n, r) == _direct(lam, n, alpha), (lam, n, r)


def test_rect_class_value_with_unit_cycles_is_the_degree(service):
    for lam in _partitions_up_to(4):
        for n in range(max(lam.first, 1), 9):
            assert service.rect_class_value(lam, n, 1) == service.cz_degree(lam, n)


def test_rect_class_poly_examples(service):
    assert service.rect_class_poly(P((2,)), 2) == RatPoly((1, Fraction(1, 2)))
    assert service.rect_class_poly(P((1,)), 1) == RatPoly.variable()
    for n in range(2, 20, 2):
        assert service.rect_class_poly(P((2,)), 2)(n) == service.rect_class_value(P((2,)), n, 2)


def test_known_families(service):
    for n in range(1, 12):
        assert service.cz_degree(P((1,)), n) == n
        assert mn_value(SkewShape.straight(P((n, 1))), CycleType.identity(n + 1)) == n
    transposition = service.stable_char_poly(StableClassSpec(P((1,)), P((2,))))
    for n in range(2, 12):
        assert transposition.poly(n) == n - 2
        assert mn_value(SkewShape.straight(P((n, 1))), CycleType.parse(f"2,1^{n - 1}")) == n - 2
    for n in range(2, 16, 2):
        assert service.rect_class_value(P((2,)), n, 2) == (n + 2) // 2
        assert mn_value(SkewShape.straight(P((n, 2))), CycleType.rectangular(2, (n + 2) // 2)) == (n + 2) // 2


@pytest.mark.parametrize(
    "lam, nu, rendered, valid_from",
    [((1,), (2,), "n - 2", 2), ((), (), "1", 1), ((1,), (), "n", 1), ((), (3,), "1", 3)],
)
def test_stable_char_poly_examples(service, lam, nu, rendered, valid_from):
    stable = service.stable_char_poly(StableClassSpec(P(lam), P(nu)))
    assert str(stable.poly) == rendered
    assert stable.valid_from == valid_from


def test_stable_class_spec():
    spec = StableClassSpec(P((2, 1)), P((2, 2)))
    assert (spec.k, spec.m) == (3, 4)
    assert spec.valid_from == 4
    assert spec.class_at(4) == CycleType((3, 2))
    with pytest.raises(DomainError):
        StableClassSpec(P(()), P((3,))).class_at(2)


def _check_stable_family(service, k_max, m_max, extra):
    for lam in _partitions_up_to(k_max):
        for nu in _partitions_up_to(m_max):
            spec = StableClassSpec(lam, nu)
            stable = service.stable_char_poly(spec)
            assert stable.poly.degree <= lam.size
            for n in range(stable.valid_from, stable.valid_from + lam.size + extra):
                assert stable.poly(n) == service.direct_value(spec, n), (lam, nu, n)


def test_stable_char_poly_evaluations(service):
    _check_stable_family(service, 2, 2, 5)


@pytest.mark.slow
def test_stable_char_poly_full_evaluations(service):
    _check_stable_family(service, 4, 4, 10)


@pytest.mark.parametrize("lam", list(_partitions_up_to(4)))
def test_stable_poly_at_the_identity_is_the_degree_poly(service, lam):
    assert service.stable_char_poly(StableClassSpec(lam, P(()))).poly == service.cz_degree_poly(lam)


def test_rect_class_value_matches_stable_class_direct_value(service):
    for lam in _partitions_up_to(3):
        for r in (2, 3):
            for n in range(max(lam.first, 1), 10):
                if (n + lam.size) % r:
                    continue
                nu = P((r,) * ((n + lam.size) // r))
                expected = _direct(lam, n, CycleType.rectangular(r, (n + lam.size) // r))
                assert service.rect_class_value(lam, n, r) == expected
                assert service.direct_value(StableClassSpec(lam, nu), n) == expected


@pytest.mark.parametrize("m", [0, 1, 2, 3])
def test_stable_poly_on_unit_cycles_matches_rect_class_value(service, m):
    for lam in _partitions_up_to(3):
        stable = service.stable_char_poly(StableClassSpec(lam, P((1,) * m)))
        for n in range(stable.valid_from, stable.valid_from + 8):
            assert stable.poly(n) == service.rect_class_value(lam, n, 1), (lam, m, n)


def test_cz_class_value_examples(service):
    assert service.cz_class_value(P((1,)), 3, CycleType.parse("2,2")) == -1
    assert service.cz_class_value(P(()), 4, CycleType.parse("4")) == 1
    with pytest.raises(DomainError):
        service.cz_class_value(P((1,)), 3, CycleType.identity(3))


@pytest.mark.parametrize("n", range(1, 6))
def test_cz_class_value_at_every_class(service, n):
    for lam in _partitions_up_to(3):
        if n < lam.first:
            continue
        for alpha in cycle_types_of(n + lam.size):
            assert service.cz_class_value(lam, n, alpha) == _direct(lam, n, alpha), (lam, n, alpha)


def test_shared_evaluator_is_reused(service):
    evaluator = CharacterEvaluator()
    shared = StableCharacterService(evaluator)
    shared.stable_char_poly(StableClassSpec(P((2,)), P((2,))))
    assert evaluator.calls > 0
    assert shared.evaluator is evaluator


@pytest.mark.slow
def test_stable_poly_at_large_n_is_fast(service):
    spec = StableClassSpec(P((3, 1)), P((2, 2)))
    start = time.perf_counter()
    stable = service.stable_char_poly(spec)
    value = stable.poly(30)
    assert time.perf_counter() - start < 5
    assert value == service.direct_value(spec, 30)
