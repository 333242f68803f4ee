from fractions import Fraction
from itertools import permutations
from math import factorial

import pytest

from sntensor.characters import (
    character_table,
    mn_character,
    ncycle_character,
    normalized_transposition_char,
    transposition_type,
)
from sntensor.errors import ResourceLimitError, WeightMismatchError
from sntensor.partitions import (
    Partition,
    conjugate,
    dimension,
    enumerate_partitions,
    is_hook,
    sign,
)
from oracles import perm_cycle_type

P = Partition


def s3_standard_character():
    # (2,1) is the defining rep of S_3 minus the trivial one: fix - 1
    values = {}
    for perm in permutations(range(3)):
        fix = sum(1 for i, x in enumerate(perm) if i == x)
        values[perm_cycle_type(perm)] = fix - 1
    return values


def test_mn_examples():
    assert mn_character(P([2, 1]), P([1, 1, 1])) == 2
    assert mn_character(P([2, 1]), P([3])) == -1
    assert mn_character(P([2, 1]), P([2, 1])) == 0


def test_s3_table_against_enumeration():
    table = character_table(3)
    assert table.partitions == (P([3]), P([2, 1]), P([1, 1, 1]))
    std = s3_standard_character()
    for g in table.partitions:
        assert table.chi([3], g) == 1
        assert table.chi([1, 1, 1], g) == sign(g)
        assert table.chi([2, 1], g) == std[tuple(g)]


def test_small_tables():
    assert character_table(1).chi([1], [1]) == 1
    assert character_table(5).chi([4, 1], [5]) == -1


def test_cycle_type_order_irrelevant():
    assert mn_character(P([3, 2, 1]), (1, 2, 3)) == mn_character(P([3, 2, 1]), P([3, 2, 1]))


def test_weight_mismatch():
    with pytest.raises(WeightMismatchError):
        mn_character(P([2, 1]), P([2, 2]))


def test_ceiling():
    with pytest.raises(ResourceLimitError):
        character_table(9, ceiling=8)


@pytest.mark.parametrize("n", range(1, 9))
def test_orthogonality(n):
    t = character_table(n)
    parts = t.partitions
    for lam in parts:
        assert t.chi(lam, [1] * n) == t.dims[lam]
        for mu in parts:
            s = sum(t.class_sizes[g] * t.chi(lam, g) * t.chi(mu, g) for g in parts)
            assert s == (factorial(n) if lam == mu else 0)
    # column orthogonality
    for g in parts:
        for h in parts:
            s = sum(t.chi(lam, g) * t.chi(lam, h) for lam in parts)
            assert s == (factorial(n) // t.class_sizes[g] if g == h else 0)


@pytest.mark.parametrize("n", range(1, 9))
def test_conjugation_sign_rule(n):
    for lam in enumerate_partitions(n):
        for g in enumerate_partitions(n):
            assert mn_character(conjugate(lam), g) == sign(g) * mn_character(lam, g)


@pytest.mark.parametrize("n", range(2, 11))
def test_frobenius_matches_recursion(n):
    tau = transposition_type(n)
    for lam in enumerate_partitions(n):
        assert normalized_transposition_char(lam) * dimension(lam) == mn_character(lam, tau)


@pytest.mark.parametrize("n", range(3, 16))
def test_hook_normalized_values(n):
    for j in range(1, (n - 1) // 2 + 1):
        lam = P([n - j] + [1] * j)
        assert normalized_transposition_char(lam) == Fraction(n - 1 - 2 * j, n - 1)


def test_normalized_transposition_examples():
    n = 9
    assert normalized_transposition_char(P([n])) == 1
    assert normalized_transposition_char(P([n - 1, 1])) == Fraction(n - 3, n - 1)
    assert normalized_transposition_char(P([1] * n)) == -1
    with pytest.raises(ValueError):
        normalized_transposition_char(P([1]))


@pytest.mark.parametrize("n", range(1, 11))
def test_ncycle_rule_matches_recursion(n):
    for lam in enumerate_partitions(n):
        assert ncycle_character(lam) == mn_character(lam, P([n]))
        assert (ncycle_character(lam) != 0) == is_hook(lam)


def test_ncycle_examples():
    assert ncycle_character(P([7])) == 1
    assert ncycle_character(P([6, 1])) == -1
    assert ncycle_character(P([2, 2])) == 0


def test_table_records_cover_all_pairs():
    t = character_table(4)
    recs = list(t.records())
    assert len(recs) == len(t.partitions) ** 2
    lam, g, chi, size, d = recs[0]
    assert (lam, g, chi, size, d) == (P([4]), P([4]), 1, 6, 1)


def test_large_character_is_exact():
    # f^(10,10) is the Catalan number C_10
    assert mn_character(P([10, 10]), P([1] * 20)) == 16796
    assert mn_character(P([5, 4, 3, 2, 1]), P([1] * 15)) == dimension(P([5, 4, 3, 2, 1]))
