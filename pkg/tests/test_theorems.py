import pytest

from zerograph import theorems as T
from zerograph.partitions import Partition, all_partitions, conjugate
from zerograph.symchar import char_table_sn
from zerograph.tableio import load_fixture

tables = T.TableProvider()


def test_common_zero_n8_pairs():
    r = T.verify_theorem_a(8, tables)
    assert r.passed
    pairs = {frozenset(p) for p in r.details["non_adjacent_pairs"]}
    assert pairs == {
        frozenset(("(6,2)", "(6,1,1)")),
        frozenset(("(6,2)", "(3,1,1,1,1,1)")),
        frozenset(("(2,2,1,1,1,1)", "(6,1,1)")),
        frozenset(("(2,2,1,1,1,1)", "(3,1,1,1,1,1)")),
    }
    assert r.details["degree_pair"] == [20, 21]


@pytest.mark.parametrize("n", [9, 12])
def test_common_zero_characterization(n):
    r = T.verify_theorem_a(n, tables)
    assert r.passed and r.details["alternating_check"]


def test_preconditions_rejected():
    for fn, n in [
        (T.verify_theorem_a, 7),
        (T.verify_connectivity, 5),
        (T.verify_lemma_3_5, 6),
        (T.verify_nk_lists, 9),
        (T.verify_min_degree, 8),
    ]:
        with pytest.raises(ValueError):
            fn(n, tables)


def test_nk_n10_k1():
    r = T.verify_nk_lists(10, tables)
    k1 = r.details["lists"]["1"]
    assert k1["tau"] == "(9,1)" and k1["computed_size"] == 9
    sn = tables.sn(10)
    col = sn.column_index[Partition((9, 1))]
    computed = {lam for lam in sn.partitions if sn.values[sn.row_index[lam]][col] != 0}
    expected = {Partition((10,)), Partition((1,) * 10)} | {
        Partition((10 - h, 2) + (1,) * (h - 2)) for h in range(2, 9)
    }
    assert computed == expected
    assert Partition((9, 1)) not in computed
    assert r.notes and "non-vanishing" in r.notes[0]


@pytest.mark.parametrize("n", [10, 11, 12, 13])
def test_nk_reports(n):
    r = T.verify_nk_lists(n, tables)
    assert r.passed
    keys = set(r.details["lists"])
    assert keys == ({"1", "2", "3", "4"} if n % 2 == 0 else {"0", "2", "3", "4"})
    for entry in r.details["lists"].values():
        for d in entry["diff"]:
            assert (d["value"] != 0) == d["computed"]


def test_printed_lists_have_the_expected_shapes():
    lists = T.printed_nk_lists(12)
    assert lists[1]["B"] == {Partition((12,)), Partition((1,) * 12)}
    assert len(lists[4]["C"]) == 12
    odd = T.printed_nk_lists(11)
    assert odd[0]["D"] == {Partition((11 - h,) + (1,) * h) for h in range(11)}
    for spec in (lists, odd):
        for parts in spec.values():
            for family in parts.values():
                assert all(sum(p) in (11, 12) for p in family)


@pytest.mark.parametrize("n", [7, 10])
def test_connectivity(n):
    r = T.verify_connectivity(n, tables)
    assert r.passed
    assert r.details[f"gamma-v(S{n})"]["diameters"] == [2]


def test_small_alternating():
    r = T.verify_small_alternating(tables)
    assert r.passed
    assert len(r.details["A5"]) == 3 and len(r.details["A6"]) == 2


@pytest.mark.parametrize("n", [7, 8, 10])
def test_vanishing_class_witnesses(n):
    r = T.verify_lemma_3_5(n, tables)
    assert r.passed and r.details["literal_reading_holds"]
    sn = tables.sn(n)
    excluded = {f"({n - 2},2)", "(2,2" + ",1" * (n - 4) + ")"}
    for cls, lam in r.details["witness_character"].items():
        assert lam not in excluded
        assert sn.value(_parse(lam), _parse(cls)) == 0


def _parse(s):
    from zerograph.partitions import parse_partition

    return parse_partition(s)


def test_vanishing_class_witness_n8():
    r = T.verify_lemma_3_5(8, tables)
    assert "(5,1,1,1)" in r.details["witness_character"]
    assert tables.sn(8).value((6, 1, 1), (5, 1, 1, 1)) == 1


@pytest.mark.parametrize("n", [5, 8, 12])
def test_van_rigidity(n):
    assert T.verify_van_rigidity(n, tables).passed


def test_signature_pairs():
    assert T.find_signature_pair((7,), tables) == ((1,) * 7, (2,) + (1,) * 5)
    pair = T.find_signature_pair((6, 1), tables)
    sn = tables.sn(7)
    a, b = pair
    assert sn.signs[sn.column_index[a]] != sn.signs[sn.column_index[b]]
    assert abs(sn.value((6, 1), a)) == abs(sn.value((6, 1), b)) != 0
    for n in range(2, 13):
        r = T.verify_signature_pairs(n, tables)
        assert r.passed
        for lam in all_partitions(n):
            if conjugate(lam) != lam:
                assert T.find_signature_pair(lam, tables) is not None


def test_coprime_noncontainment():
    assert T.verify_coprime_noncontainment(tables.sn(9).table).passed
    for name in ("psl2_11", "gl2_3"):
        assert T.verify_coprime_noncontainment(load_fixture(name)).passed


@pytest.mark.parametrize("n", [9, 12])
def test_min_degree(n):
    r = T.verify_min_degree(n, tables)
    assert r.passed
    assert r.details["smallest_degree_in_range"] > (n - 1) * (n - 2) // 2


def test_min_degree_example():
    from zerograph.partitions import degree

    assert degree((8, 2, 1)) > 45


@pytest.mark.parametrize("n", range(5, 14))
def test_mod2(n):
    assert T.verify_mod2(n, tables).passed


def test_fixture_battery():
    r = T.verify_fixtures()
    assert r.passed, r.witnesses


def test_failed_claim_is_reported_not_raised():
    # synthetic, not a real group: nested vanishing sets with coprime degrees
    from zerograph.tableio import CharTable, Character, ClassInfo

    classes = (ClassInfo("1a", 1, 1), ClassInfo("2a", 1, 2), ClassInfo("3a", 1, 3))
    chars = (Character("X", 2, (2, 0, 1)), Character("Y", 3, (3, 0, 0)))
    r = T.verify_coprime_noncontainment(CharTable("fake", 3, classes, chars))
    assert r.status == "fail"
    assert r.witnesses[0]["pair"] == ["X", "Y"]


def test_table_provider_uses_cache(tmp_path):
    tp = T.TableProvider(cache=tmp_path)
    a = tp.sn(7)
    assert (tmp_path / "sn-7-v1.json").is_file()
    tp.an(7)
    assert (tmp_path / "an-7-v1.json").is_file()
    again = T.TableProvider(cache=tmp_path)
    assert again.sn(7) == a
    (tmp_path / "sn-7-v1.json").write_text("{")
    assert T.TableProvider(cache=tmp_path).sn(7) == char_table_sn(7)


def test_run_all_small():
    reports = T.run_all(9, tables)
    assert all(r.passed for r in reports), [r.summary() for r in reports if not r.passed]
    names = {r.check for r in reports}
    assert {"thm-a", "connectivity", "lemma-3-5", "van-rigidity", "metrics", "min-degree", "mod2", "fixtures"} <= names
