import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from zerograph import theorems as T
from zerograph.metrics import (
    display_distance,
    faithful_characters,
    lemma_pair_values,
    metric_distance,
    metric_partition,
    partitions_csv,
    random_permutation,
    separating_pair,
    triangle_check,
    triangle_holds,
    verify_theorem_6_1,
)
from zerograph.symchar import Permutation, cycle_type_of
from zerograph.tableio import load_fixture

tables = T.TableProvider()


def labels(t, idx):
    return sorted(t.characters[i].label for i in idx)


def test_faithful_examples():
    s4 = tables.sn(4).table
    assert labels(s4, faithful_characters(s4)) == sorted(["(3,1)", "(2,1,1)"])
    s5 = tables.sn(5).table
    assert faithful_characters(s5) == {i for i, c in enumerate(s5.characters) if c.degree > 1}
    for t in (s4, s5, load_fixture("psl2_11")):
        assert 0 not in faithful_characters(t)


def test_distances_in_s3():
    s3 = tables.sn(3)
    e = Permutation.identity(3)
    t = Permutation.from_cycles(3, (1, 2))
    c = Permutation.from_cycles(3, (1, 2, 3))
    assert metric_distance(s3, (2, 1), e, e) == 0
    assert metric_distance(s3, (2, 1), e, t) == 4
    assert metric_distance(s3, (2, 1), e, c) == 6
    assert display_distance(4) == "2.0"


def test_metric_partition_examples():
    s3 = tables.sn(3).table
    p = metric_partition(s3, s3.character_index["(2,1)"])
    assert p.blocks == ((0,), (1,), (2,))
    s8 = tables.sn(8).table
    p = metric_partition(s8, s8.character_index["(6,2)"])
    zero_block = [b for b, v in zip(p.blocks, p.values) if v == 20][0]
    assert {s8.classes[j].label for j in zero_block} >= {"(5,1,1,1)", "(5,2,1)"}
    for t in (s3, s8, load_fixture("sl2_3"), load_fixture("psl2_11")):
        for i in range(len(t.characters)):
            p = metric_partition(t, i)
            assert 0 in p.blocks[0]
            assert sorted(j for b in p.blocks for j in b) == list(range(len(t.classes)))


def test_faithful_partitions_n8_witness():
    r = verify_theorem_6_1(8, tables)
    assert r.passed
    lp = r.details["lemma_pair"]
    assert lp["classes"] == ["(5,1,1,1)", "(5,2,1)"]
    assert lp["(6,2)"] == [0, 0] and lp["(6,1,1)"] == [1, -1]


@pytest.mark.parametrize("n", range(6, 11))
def test_separating_class_values_general(n):
    lp = lemma_pair_values(tables.sn(n))
    assert lp[f"({n - 2},2)"] == [0, 0] and lp[f"({n - 2},1,1)"] == [1, -1]


@pytest.mark.parametrize("n", range(3, 11))
def test_faithful_partitions_distinct(n):
    assert verify_theorem_6_1(n, tables).passed


def test_separating_pair():
    s8 = tables.sn(8).table
    p = metric_partition(s8, s8.character_index["(6,2)"])
    q = metric_partition(s8, s8.character_index["(6,1,1)"])
    x, y = separating_pair(p, q)
    bp, bq = p.block_of(), q.block_of()
    assert (bp[x] == bp[y]) != (bq[x] == bq[y])
    assert separating_pair(p, p) is None


def test_triangle_exact_fallback():
    assert triangle_holds(4, 1, 1) == (True, "exact")
    assert triangle_holds(5, 1, 1)[0] is False
    assert triangle_holds(8, 2, 2)[0] is True
    assert triangle_holds(Fraction(9, 4), Fraction(1, 4), 1) == (True, "exact")
    assert triangle_holds(3, 1, 1)[1].startswith("interval@")


@pytest.mark.parametrize("n", [5, 6])
def test_triangle_and_bi_invariance(n):
    r = triangle_check(tables.sn(n), samples=150, seed=n)
    assert r.passed
    assert r.details["undecided"] == 0


@settings(max_examples=50, deadline=None)
@given(st.integers(3, 6), st.randoms(use_true_random=False))
def test_bi_invariance_property(n, rnd):
    sn = tables.sn(n)
    a, b, c = (random_permutation(n, rnd) for _ in range(3))
    for i in faithful_characters(sn.table):
        d = metric_distance(sn, i, a, b)
        assert d == metric_distance(sn, i, c * a, c * b) == metric_distance(sn, i, a * c, b * c)
        assert d >= 0


@pytest.mark.parametrize("n", [4, 5])
def test_distance_zero_iff_equal(n):
    sn = tables.sn(n)
    perms = [Permutation(p) for p in itertools.permutations(range(1, n + 1))]
    e = Permutation.identity(n)
    for i in faithful_characters(sn.table):
        for a in perms:
            assert (metric_distance(sn, i, a, e) == 0) == (a == e)


def test_csv_dump():
    text = partitions_csv(tables.sn(4).table)
    lines = text.splitlines()
    assert lines[0] == "character,class,block,value"
    assert len(lines) == 1 + 2 * 5
