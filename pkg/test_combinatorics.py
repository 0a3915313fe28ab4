from collections import Counter

import pytest
from hypothesis import given, strategies as st

from app.combinatorics import (
    CycleType,
    Partition,
    SkewShape,
    binomial_weight,
    centralizer_index,
    centralizer_size,
    column_strip,
    conjugate,
    cycle_types_of,
    first_row_extend,
    hook_lengths,
    partitions_of,
    sub_cycle_types,
)
from app.exceptions import DomainError, ParseError
from app.oracle import count_syt


@st.composite
def partition_strategy(draw, max_n=10):
    n = draw(st.integers(min_value=0, max_value=max_n))
    if n == 0:
        return Partition()
    k = draw(st.integers(min_value=1, max_value=n))
    bins = draw(st.lists(st.integers(min_value=0, max_value=k - 1), min_size=n, max_size=n))
    return Partition(tuple(sorted(Counter(bins).values(), reverse=True)))


P = Partition


def test_partition_canonical_form():
    assert P((3, 1, 0, 0)) == P((3, 1))
    assert P(()).size == 0
    assert P(()).length == 0
    assert str(P(())) == "0"
    assert str(P((3, 2, 1))) == "3,2,1"


@pytest.mark.parametrize("parts", [(1, 2), (2, -1), (0, 1)])
def test_partition_rejects_bad_parts(parts):
    with pytest.raises(DomainError):
        P(parts)


def test_partition_parse():
    assert Partition.parse("3,2,1") == P((3, 2, 1))
    assert Partition.parse(" 4 , 4 ") == P((4, 4))
    assert Partition.parse("0") == P(())
    for bad in ["1,2", "a,b", "3,-1"]:
        with pytest.raises(ParseError):
            Partition.parse(bad)


@pytest.mark.parametrize(
    "lam, n, expected",
    [((2, 1), 4, (4, 2, 1)), ((), 3, (3,)), ((2, 1), 2, (2, 2, 1))],
)
def test_first_row_extend(lam, n, expected):
    assert first_row_extend(P(lam), n) == P(expected)


def test_first_row_extend_rejects_short_row():
    with pytest.raises(DomainError):
        first_row_extend(P((2, 1)), 1)


@given(partition_strategy(), st.integers(min_value=0, max_value=5))
def test_first_row_extend_size_and_first_part(lam, extra):
    n = max(lam.first, 1) + extra
    extended = first_row_extend(lam, n)
    assert extended.size == n + lam.size
    assert extended.first == n


def test_hook_lengths():
    assert hook_lengths(P((3, 1))) == ((4, 2, 1), (1,))
    assert hook_lengths(P((1,))) == ((1,),)
    assert hook_lengths(P(())) == ()


@given(partition_strategy())
def test_hook_lengths_cover_every_cell(lam):
    hooks = hook_lengths(lam)
    assert sum(len(row) for row in hooks) == lam.size
    assert all(h >= 1 for row in hooks for h in row)


def test_conjugate():
    assert conjugate(P((3, 1))) == P((2, 1, 1))
    assert conjugate(P((2, 2))) == P((2, 2))
    assert conjugate(P(())) == P(())


@given(partition_strategy())
def test_conjugate_is_involution(lam):
    assert conjugate(conjugate(lam)) == lam


def test_column_strip():
    assert column_strip(0) == P(())
    assert column_strip(1) == P((1,))
    assert column_strip(3) == P((1, 1, 1))


def test_partitions_of_counts():
    assert [len(list(partitions_of(k))) for k in range(10)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]
    assert list(partitions_of(3)) == [P((3,)), P((2, 1)), P((1, 1, 1))]


def test_skew_shape_requires_containment():
    with pytest.raises(DomainError):
        SkewShape(P((2,)), P((1, 1)))
    with pytest.raises(DomainError):
        SkewShape(P((2, 1)), P((3,)))
    assert SkewShape(P((2, 1)), P((2, 1))).is_empty


def test_skew_shape_row_bounds():
    assert SkewShape(P((2, 1)), P((1,))).row_bounds() == [(1, 2), (0, 1)]


def test_skew_shape_canonical_drops_empty_rows_and_columns():
    shape = SkewShape(P((3, 3, 1)), P((3, 1)))
    assert shape.canonical() == SkewShape(P((3, 1)), P((1,)))
    shifted = SkewShape(P((4, 3)), P((2, 2)))
    assert shifted.canonical() == SkewShape(P((2, 1)), P(()))
    assert SkewShape(P((2,)), P((2,))).canonical() == SkewShape(P(()), P(()))


@pytest.mark.parametrize(
    "outer, inner",
    [((3, 3, 1), (3, 1)), ((4, 3, 2), (2, 2)), ((5, 2, 2, 1), (3, 2)), ((3, 2), (1,))],
)
def test_canonical_preserves_tableau_count(outer, inner):
    shape = SkewShape(P(outer), P(inner))
    assert count_syt(shape.canonical()) == count_syt(shape)


def test_cycle_type_parsing_and_rendering():
    assert CycleType.parse("3,1,1") == CycleType.parse("1^2,3^1") == CycleType((2, 0, 1))
    assert CycleType.parse("1^2,1^1") == CycleType((3,))
    assert CycleType.parse("0") == CycleType(())
    assert str(CycleType((2, 0, 1))) == "1^2,3^1"
    assert CycleType((2, 0, 1)).parts() == (3, 1, 1)
    assert CycleType((2, 0, 1, 0, 0)) == CycleType((2, 0, 1))
    with pytest.raises(ParseError):
        CycleType.parse("x^2")
    with pytest.raises(ParseError):
        CycleType.parse("0^3")


def test_cycle_type_edits():
    nu = CycleType.from_partition(P((2, 2)))
    assert nu.with_fixed_points(3) == CycleType((3, 2))
    assert nu.with_fixed_points(3).size == 7
    assert CycleType.rectangular(3, 2) == CycleType((0, 0, 2))
    assert CycleType.identity(4) == CycleType((4,))
    assert CycleType.identity(0) == CycleType(())
    assert nu.remove_cycle(2) == CycleType((0, 1))


def test_sub_cycle_types_examples():
    assert list(sub_cycle_types(CycleType((2,)), 1)) == [(CycleType((1,)), CycleType((1,)))]
    assert list(sub_cycle_types(CycleType((0, 1)), 1)) == []
    assert list(sub_cycle_types(CycleType((1, 1)), 2)) == [(CycleType((0, 1)), CycleType((1,)))]


@pytest.mark.parametrize("alpha", list(cycle_types_of(6)))
def test_sub_cycle_types_properties(alpha):
    pairs = list(sub_cycle_types(alpha, 0))
    assert pairs == [(CycleType(()), alpha)]
    assert list(sub_cycle_types(alpha, alpha.size)) == [(alpha, CycleType(()))]
    for m in range(alpha.size + 1):
        for beta, gamma in sub_cycle_types(alpha, m):
            assert beta.size == m
            assert gamma.size == alpha.size - m
            for i in range(1, alpha.largest + 1):
                assert beta.multiplicity(i) + gamma.multiplicity(i) == alpha.multiplicity(i)


def test_sub_cycle_types_enumerates_every_vector():
    alpha = CycleType((3, 2, 1))
    for m in range(alpha.size + 1):
        expected = {
            (b1, b2, b3)
            for b1 in range(4)
            for b2 in range(3)
            for b3 in range(2)
            if b1 + 2 * b2 + 3 * b3 == m
        }
        found = {tuple(beta.multiplicity(i) for i in (1, 2, 3)) for beta, _ in sub_cycle_types(alpha, m)}
        assert found == expected


def test_centralizer_size():
    assert centralizer_size(CycleType((2,))) == 2
    assert centralizer_size(CycleType((0, 1))) == 2
    assert centralizer_size(CycleType((1, 1))) == 2
    assert centralizer_size(CycleType((0, 0, 1))) == 3
    assert centralizer_size(CycleType((3,))) == 6


@pytest.mark.parametrize("n", range(8))
def test_centralizer_index_is_binomial_product(n):
    for alpha in cycle_types_of(n):
        for m in range(n + 1):
            for beta, _ in sub_cycle_types(alpha, m):
                assert centralizer_index(alpha, beta) == binomial_weight(alpha, beta)
