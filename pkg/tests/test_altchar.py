import math
from fractions import Fraction

import pytest

from zerograph.altchar import an_classes, an_characters, char_table_an, check_lemma_3_1, split_values
from zerograph.cyclo import QuadraticValue
from zerograph.graphs import GAMMA_V, build_graph
from zerograph.tableio import CharTable, Character, validate


def _labels(n):
    return [c.label for c in an_classes(n)]


def test_class_lists():
    assert _labels(5) == ["(1,1,1,1,1)", "(2,2,1)", "(3,1,1)", "(5)a", "(5)b"]
    assert _labels(4) == ["(1,1,1,1)", "(2,2)", "(3,1)a", "(3,1)b"]
    assert _labels(3) == ["(1,1,1)", "(3)a", "(3)b"]


@pytest.mark.parametrize("n", range(2, 11))
def test_class_sizes_and_degrees(n):
    t = char_table_an(n).table
    assert sum(c.size for c in t.classes) == math.factorial(n) // 2
    assert sum(c.degree ** 2 for c in t.characters) == math.factorial(n) // 2
    assert len(t.classes) == len(t.characters)


def test_a5():
    an = char_table_an(5)
    t = an.table
    assert sorted(c.degree for c in t.characters) == [1, 3, 3, 4, 5]
    plus = t.characters[t.character_index["(3,1,1)+"]]
    phi = QuadraticValue(Fraction(1, 2), Fraction(1, 2), 5)
    assert plus.values[t.class_index["(5)a"]] == phi
    assert plus.values[t.class_index["(5)b"]] == 1 - phi


def test_a10_split_values():
    a, b = split_values((4, 3, 2, 1))
    half = Fraction(1, 2)
    assert a == QuadraticValue(half, half, 21)
    assert b == QuadraticValue(half, -half, 21)
    t = char_table_an(10).table
    row = t.characters[t.character_index["(4,3,2,1)+"]]
    assert row.values[t.class_index["(7,3)a"]] == a


def test_split_values_reject_non_self_conjugate():
    with pytest.raises(ValueError):
        split_values((3, 1))


@pytest.mark.parametrize("n", range(2, 13))
def test_orthogonality(n):
    report = validate(char_table_an(n).table)
    assert report.passed, report.witnesses


@pytest.mark.parametrize("n", range(3, 11))
def test_split_rows_swap_under_galois(n):
    an = char_table_an(n)
    t = an.table
    for i, c in enumerate(an.characters):
        if c.kind != "plus":
            continue
        j = t.character_index[c.label[:-1] + "-"]
        perm = []
        for k, cls in enumerate(an.classes):
            if cls.kind == "whole":
                perm.append(k)
            else:
                other = "b" if cls.kind == "a" else "a"
                perm.append(t.class_index[cls.label[:-1] + other])
        assert tuple(t.characters[i].values[p] for p in perm) == t.characters[j].values


@pytest.mark.parametrize("n", range(4, 11))
def test_split_classes_share_zeros(n):
    assert check_lemma_3_1(n).passed


@pytest.mark.parametrize("n", [5, 6, 7, 9])
def test_graphs_invariant_under_swapping_split_labels(n):
    t = char_table_an(n).table
    swapped = []
    for c in t.characters:
        if c.label.endswith("+"):
            swapped.append(Character(c.label, c.degree, t.characters[t.character_index[c.label[:-1] + "-"]].values))
        elif c.label.endswith("-"):
            swapped.append(Character(c.label, c.degree, t.characters[t.character_index[c.label[:-1] + "+"]].values))
        else:
            swapped.append(c)
    u = CharTable(t.name, t.order, t.classes, tuple(swapped))
    assert validate(u).passed
    for kind in (GAMMA_V,):
        g, h = build_graph(t, kind), build_graph(u, kind)
        assert sorted(map(len, (c.vertices for c in g.components()))) == sorted(
            map(len, (c.vertices for c in h.components()))
        )
        assert g.adjacency == h.adjacency


def test_character_list():
    labels = [c.label for c in an_characters(6)]
    assert labels == ["(6)", "(5,1)", "(4,2)", "(4,1,1)", "(3,3)", "(3,2,1)+", "(3,2,1)-"]
    with pytest.raises(ValueError):
        char_table_an(1)


def test_a9_split_values_can_be_rational():
    # diagonal hooks (9): eps = 1 and sqrt(9) = 3
    assert split_values((5, 1, 1, 1, 1)) == (2, -1)
