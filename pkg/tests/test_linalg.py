import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from weightspaces.linalg import (
    DimensionError, Restriction, WeightSpace, contains, format_rational, nullspace, rank, rref,
    subspace_equal,
)


def test_restriction_equation():
    assert Restriction((-1, 1, -1)).equation() == "w1 = w0 + w2"
    assert Restriction((2, 0, -1)).equation(["a", "b", "c"]) == "2*a = c"


def test_restriction_rejects_zero():
    with pytest.raises(ValueError):
        Restriction((0, 0))


def test_provenance_ignored_in_equality():
    assert Restriction((1, -1), {"kind": "x"}) == Restriction((1, -1), {"kind": "y"})


def test_evaluate():
    assert Restriction((1, -1, 1)).evaluate([1, 2, 1]) == 0
    with pytest.raises(DimensionError):
        Restriction((1, -1)).evaluate([1])


def test_nullspace_single_equation():
    space = nullspace([(1, -1, 1)], 3)
    assert space.dimension == 2
    assert contains(space, [1, 2, 1])
    assert not contains(space, [1, 1, 1])


def test_nullspace_no_restrictions_is_full():
    assert subspace_equal(nullspace([], 4), WeightSpace.full(4))


def test_nullspace_all_equal():
    space = nullspace([(1, -1, 0), (0, 1, -1)], 3)
    assert space.dimension == 1
    assert contains(space, [Fraction(1, 3)] * 3)


def test_nullspace_zero_dimension():
    assert nullspace([(1, 0), (0, 1)], 2).dimension == 0
    assert nullspace([], 0).dimension == 0


def test_canonical_form_is_syntactic():
    a = nullspace([(1, -1, 1), (2, -2, 2)], 3)
    b = nullspace([(-3, 3, -3)], 3)
    assert a == b


def test_dimension_mismatch():
    with pytest.raises(DimensionError):
        subspace_equal(WeightSpace.full(2), WeightSpace.full(3))
    with pytest.raises(DimensionError):
        contains(WeightSpace.full(2), [1, 2, 3])
    with pytest.raises(DimensionError):
        nullspace([(1, -1)], 3)


def test_rref_and_rank():
    assert rref([(2, 4), (1, 2)], 2) == [(Fraction(1), Fraction(2))]
    assert rank([(1, 0, 1), (0, 1, 1), (1, 1, 2)], 3) == 2


@pytest.mark.parametrize("x, text", [(Fraction(3, 1), "3"), (Fraction(-1, 2), "-1/2"), (0, "0"), (Fraction(6, 4), "3/2")])
def test_format_rational(x, text):
    assert format_rational(x) == text


rows_strategy = st.integers(1, 6).flatmap(lambda d: st.tuples(
    st.just(d),
    st.lists(st.lists(st.integers(-3, 3), min_size=d, max_size=d), max_size=6)))


@given(rows_strategy)
def test_rank_nullity(data):
    d, rows = data
    space = nullspace([r for r in rows if any(r)], d)
    assert rank(rows, d) + space.dimension == d


@given(rows_strategy)
def test_basis_satisfies_every_restriction_exactly(data):
    d, rows = data
    restrictions = [Restriction(tuple(r)) for r in rows if any(r)]
    space = nullspace(restrictions, d)
    for vec in space.basis:
        assert all(r.evaluate(vec) == 0 for r in restrictions)


@given(rows_strategy, st.integers(0, 10**6))
def test_order_and_duplicates_do_not_matter(data, seed):
    d, rows = data
    rows = [r for r in rows if any(r)]
    shuffled = rows + rows[: len(rows) // 2]
    random.Random(seed).shuffle(shuffled)
    assert nullspace(rows, d) == nullspace(shuffled, d)


@given(rows_strategy)
def test_span_of_basis_round_trips(data):
    d, rows = data
    space = nullspace([r for r in rows if any(r)], d)
    assert WeightSpace.span(space.basis, d) == space
