import math

import pytest
from hypothesis import given, strategies as st

from weighted_hurwitz.exact import parse_rational_function as R
from weighted_hurwitz.partitions import (
    aut_order,
    class_size,
    colength,
    conjugate,
    contents,
    dimension,
    enumerate_partitions,
    format_partition,
    hook_product,
    parse_partition,
    pochhammer,
    z_mu,
)


def test_enumeration():
    assert enumerate_partitions(0) == ((),)
    assert enumerate_partitions(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    # counts from sympy.functions.combinatorial.numbers.partition
    assert [len(enumerate_partitions(n)) for n in range(11)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    for n in range(8):
        parts = enumerate_partitions(n)
        assert len(set(parts)) == len(parts)
        assert list(parts) == sorted(parts, reverse=True)


def test_numerology_examples():
    assert colength((1, 1, 1)) == 0
    assert colength((3,)) == 2
    assert colength((2, 1, 1)) == 1
    assert z_mu((1, 1, 1)) == 6
    assert z_mu((3,)) == 3
    assert z_mu((2, 1)) == 2
    assert hook_product((1,)) == 1
    assert hook_product((2, 1)) == 3
    assert hook_product((2, 2)) == 12
    assert aut_order((1, 1)) == 2
    assert aut_order((2, 1)) == 1
    assert aut_order((2, 2, 1, 1, 1)) == 12
    assert contents((1,)) == [0]
    assert contents((3,)) == [0, 1, 2]
    assert contents((2, 2)) == [0, 1, -1, 0]


def test_pochhammer():
    assert pochhammer(R("u"), (2,)) == R("u*(u+1)")
    assert pochhammer(R("u"), (1, 1)) == R("u*(u-1)")
    assert pochhammer(R("u"), ()) == R("1")


def test_class_equation():
    for n in range(10):
        assert sum(class_size(mu) for mu in enumerate_partitions(n)) == math.factorial(n)


def test_standard_tableaux_identity():
    for n in range(1, 9):
        # sum of squared dimensions is n!
        assert sum(dimension(lam) ** 2 for lam in enumerate_partitions(n)) == math.factorial(n)


def test_parse_and_format():
    assert parse_partition("4,2,1") == (4, 2, 1)
    assert parse_partition("1,2,4") == (4, 2, 1)
    assert parse_partition("") == ()
    assert parse_partition("2^2,1") == (2, 2, 1)
    assert format_partition((4, 2, 1)) == "4,2,1"
    with pytest.raises(ValueError):
        parse_partition("2,0")
    with pytest.raises(ValueError):
        parse_partition("a")


partitions = st.integers(0, 12).flatmap(lambda n: st.sampled_from(enumerate_partitions(n)))


@given(partitions)
def test_partition_invariants(lam):
    assert conjugate(conjugate(lam)) == lam
    assert sorted(contents(conjugate(lam))) == sorted(-c for c in contents(lam))
    assert colength(lam) + len(lam) == sum(lam)
    assert hook_product(lam) * dimension(lam) == math.factorial(sum(lam))
    assert math.factorial(sum(lam)) % z_mu(lam) == 0
