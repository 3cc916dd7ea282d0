"""Genus partitioning, the two distinguished genera, and the bijection."""

import json

import pytest

from threesquares.lattice import TernaryForm
from threesquares.forms import reduce_form
from threesquares.genera import (
    BinaryClass,
    binary_classes,
    find_h,
    genus_of,
    genus_partition,
    lift_binary_to_ternary,
    same_genus,
    tg1,
    tg2,
)

TG1_23 = [(1, 6, 23, 0, 0, 1), (2, 3, 23, 0, 0, 1), (3, 8, 8, -7, 2, 2)]
TG2_23 = [(4, 23, 24, 0, 4, 0), (8, 23, 12, 0, 4, 0), (3, 31, 31, -30, 2, 2)]
TG1_17 = [(3, 5, 6, 1, 2, 3), (3, 6, 6, -5, 2, 2)]
TG2_17 = [(7, 11, 20, -8, 4, 6), (3, 23, 23, -22, 2, 2)]


def genus_equals(genus, printed):
    if len(genus.members) != len(printed):
        return False
    return all(genus.contains(TernaryForm(*t)) for t in printed)


def test_single_genus_at_prime_squares():
    for p in (3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47):
        assert len(genus_partition(p * p)) == 1


def test_tg1_printed_members():
    assert genus_equals(tg1(17), TG1_17)
    assert genus_equals(tg1(23), TG1_23)
    g3 = tg1(3)
    assert genus_equals(g3, [(1, 1, 3, 0, 0, 1)])
    assert g3.aut_counts == (24,)
    assert g3.weights48() == (2,)


def test_tg2_printed_members():
    assert genus_equals(tg2(17), TG2_17)
    assert genus_equals(tg2(23), TG2_23)
    assert len(tg2(17).members) == len(tg1(17).members)
    assert len(tg2(23).members) == len(tg1(23).members)


def test_tg_aut_multisets():
    assert sorted(tg1(23).aut_counts) == [4, 8, 12]
    assert sorted(tg2(23).aut_counts) == [4, 8, 12]
    assert sorted(tg1(17).aut_counts) == [4, 12]
    assert sorted(tg2(17).aut_counts) == [4, 12]


def test_twelve_genera_at_4624():
    part = genus_partition(4624)
    assert len(part) == 12
    doubletons = [g for g in part if len(g.members) == 2]
    assert len(doubletons) == 3
    printed_doubletons = [
        TG2_17,
        [(3, 6, 68, 0, 0, 2), (10, 11, 14, 2, 4, 10)],
        [(5, 7, 34, 0, 0, 2), (6, 12, 17, 0, 0, 4)],
    ]
    for printed in printed_doubletons:
        assert any(genus_equals(g, printed) for g in doubletons)
    # The two non-distinguished doubletons have all automorph counts 4.
    for printed in printed_doubletons[1:]:
        g = next(g for g in doubletons if genus_equals(g, printed))
        assert g.aut_counts == (4, 4)


def test_twelve_genera_at_8464():
    assert len(genus_partition(8464)) == 12


def test_same_genus_requires_equal_discriminant():
    with pytest.raises(ValueError):
        same_genus(TernaryForm(1, 1, 1, 0, 0, 0), TernaryForm(1, 1, 3, 0, 0, 1))


def test_genus_refines_equivalence():
    f = TernaryForm(4, 23, 24, 0, 4, 0)
    assert same_genus(f, reduce_form(f))


def test_binary_classes_of_disc_23():
    assert [b.as_tuple() for b in binary_classes(23)] == [
        (1, 1, 6),
        (2, 1, 3),
        (2, -1, 3),
    ]
    for b in binary_classes(23):
        assert b.disc() == -23


def test_binary_lift_printed_examples():
    assert lift_binary_to_ternary(BinaryClass(1, 1, 6), 23) == TernaryForm(
        4, 23, 24, 0, 4, 0
    )
    assert lift_binary_to_ternary(BinaryClass(2, 1, 3), 23) == TernaryForm(
        8, 23, 12, 0, 4, 0
    )
    # The principal form lifts to 4x^2 + p y^2 + (p+1) z^2 + 4 zx.
    p = 11
    principal = BinaryClass(1, 1, (p + 1) // 4)
    assert lift_binary_to_ternary(principal, p) == TernaryForm(
        4, p, p + 1, 0, 4, 0
    )


def test_binary_lift_validates_discriminant():
    with pytest.raises(ValueError):
        lift_binary_to_ternary(BinaryClass(1, 1, 6), 11)
    lifted = lift_binary_to_ternary(BinaryClass(1, 1, 3), 11)
    assert lifted.disc() == 16 * 121


def test_lift_lands_in_one_genus_regardless_of_choice():
    for p in (3, 7, 11, 19, 23, 31, 43, 47):
        genera = set()
        for b in binary_classes(p):
            genus = genus_of(lift_binary_to_ternary(b, p))
            genera.add(tuple(m.as_tuple() for m in genus.members))
        assert len(genera) == 1


def test_tg2_seed_families_agree_where_they_overlap():
    # p = 5 sits in both the mod-3 and mod-8 families.
    a = genus_of(TernaryForm(3, 7, 7, -6, 2, 2))
    b = genus_of(TernaryForm(8, 3, 7, 2, 8, 4))
    assert a == b == tg2(5)


def test_tg2_rejects_even_or_composite():
    with pytest.raises(ValueError):
        tg2(2)
    with pytest.raises(ValueError):
        tg2(9)


def test_find_h_pairings():
    result = find_h(23, 300)
    assert result.status == "ok"
    mapping = {
        reduce_form(TernaryForm(*src)).as_tuple(): dst
        for src, dst in (
            ((3, 31, 31, -30, 2, 2), (3, 8, 8, -7, 2, 2)),
            ((4, 23, 24, 0, 4, 0), (1, 6, 23, 0, 0, 1)),
            ((8, 23, 12, 0, 4, 0), (2, 3, 23, 0, 0, 1)),
        )
    }
    for f, g in result.mapping:
        expected = mapping[f.as_tuple()]
        assert g == reduce_form(TernaryForm(*expected))

    result17 = find_h(17, 300)
    assert result17.status == "ok"
    lookup = {f.as_tuple(): g for f, g in result17.mapping}
    src = reduce_form(TernaryForm(7, 11, 20, -8, 4, 6))
    assert lookup[src.as_tuple()] == reduce_form(TernaryForm(3, 5, 6, 1, 2, 3))


def test_genus_json_shape():
    doc = tg1(23).to_json_dict()
    assert set(doc) == {"discriminant", "members", "autCounts", "weights48"}
    assert doc["discriminant"] == 529
    assert len(doc["members"]) == 3
    json.dumps(doc)  # serializable
