from fractions import Fraction
from itertools import permutations

import pytest

from weighted_hurwitz._limits import BoundExceeded
from weighted_hurwitz.characters import character, character_table, schur_in_powersums
from weighted_hurwitz.partitions import dimension, enumerate_partitions, z_mu
from weighted_hurwitz.perms import cycle_type
from weighted_hurwitz.tauseries import pochhammer_identity_check


def test_examples():
    for n in range(1, 7):
        for mu in enumerate_partitions(n):
            assert character((n,), mu) == 1
    assert character((1, 1, 1), (2, 1)) == -1
    assert character((2, 1), (3,)) == -1
    assert character_table(1).values == ((1,),)
    t2 = character_table(2)
    # trivial and sign representations, columns in reverse-lex order (2), (1,1)
    assert t2.order == ((2,), (1, 1))
    assert t2.values == ((1, 1), (-1, 1))
    t3 = character_table(3)
    assert [row[t3.order.index((3,))] for row in t3.values] == [1, -1, 1]


def test_weight_mismatch():
    with pytest.raises(ValueError):
        character((2, 1), (2,))


def test_bound(monkeypatch):
    monkeypatch.delenv("HURWITZ_MAX_N", raising=False)
    with pytest.raises(BoundExceeded):
        character_table(11)


def test_standard_representation_oracle():
    # chi of the standard representation is (#fixed points - 1)
    for n in range(2, 7):
        std = (n - 1, 1)
        for perm in permutations(range(n)):
            fixed = sum(1 for i, x in enumerate(perm) if i == x)
            assert character(std, cycle_type(perm)) == fixed - 1


def test_sign_character():
    for n in range(1, 7):
        for mu in enumerate_partitions(n):
            sign = (-1) ** (n - len(mu))
            assert character((1,) * n, mu) == sign


def test_orthogonality():
    for n in range(1, 9):
        t = character_table(n)
        size = len(t.order)
        for a in range(size):
            assert t.values[a][-1] == dimension(t.order[a])
            for b in range(size):
                rows = sum(Fraction(t.values[a][k] * t.values[b][k], z_mu(t.order[k])) for k in range(size))
                assert rows == (a == b)
                cols = sum(t.values[l][a] * t.values[l][b] for l in range(size))
                assert cols == (z_mu(t.order[a]) if a == b else 0)


def test_schur_in_powersums():
    assert schur_in_powersums((1,)) == {(1,): 1}
    assert schur_in_powersums((2,)) == {(2,): Fraction(1, 2), (1, 1): Fraction(1, 2)}
    assert schur_in_powersums((1, 1)) == {(2,): Fraction(-1, 2), (1, 1): Fraction(1, 2)}


def test_pochhammer_identity():
    for n in range(7):
        for lam in enumerate_partitions(n):
            assert pochhammer_identity_check(lam)


def test_table_json():
    data = character_table(3).to_json()
    assert data["order"] == ["3", "2,1", "1,1,1"]
    assert data["values"] == [[1, 1, 1], [-1, 0, 2], [1, -1, 1]]
