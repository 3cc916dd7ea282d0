"""Catalog structure, the evaluator, and targeted verification runs."""

import pytest

from threesquares import qseries as qs
from threesquares.catalog import (
    IdentitySpec,
    catalog,
    evaluate,
    lookup,
    mul,
    scale,
)
from threesquares.verify import verify_identity


def test_catalog_size_and_order():
    specs = catalog()
    assert len(specs) >= 55
    ids = [s.id for s in specs]
    assert ids == sorted(ids)
    assert len(set(ids)) == len(ids)


def test_lookup():
    assert lookup("E2.1") is not None
    assert lookup("E9.9") is None


def test_e21_sides_are_what_they_claim():
    spec = lookup("E2.1")
    lhs = evaluate(spec.lhs, 40)
    assert lhs == qs.phi(40).pow(2) - qs.phi(40, 5).pow(2)
    rhs = evaluate(spec.rhs, 40)
    assert rhs == (
        qs.monomial(40, 1, 4) * qs.theta_f(1, 9, 40) * qs.theta_f(3, 7, 40)
    )


def test_verify_passes_core_entries():
    for ident in ("E2.1", "E1.23", "E4.4", "E5.9"):
        report = verify_identity(ident, 150)
        assert report.status == "pass", ident
        assert report.first_mismatch is None


def test_verify_unknown_id():
    with pytest.raises(KeyError):
        verify_identity("BOGUS", 50)


def test_perturbed_identity_fails_with_located_mismatch():
    spec = lookup("E2.1")
    broken = IdentitySpec(
        "E2.1-broken", spec.lhs, scale(5, spec.rhs), "rhs scaled by 5"
    )
    report = verify_identity(broken, 60)
    assert report.status == "fail"
    assert report.first_mismatch == (1, 4, 20)


def test_masked_entries_compare_only_selected_residues():
    spec = lookup("E1.3")
    assert spec.mask == (4, (1, 2))
    assert verify_identity(spec, 120).status == "pass"
    # Without the mask the same pair of trees must disagree somewhere
    # (the unrestricted identity needs the second form's correction).
    unmasked = IdentitySpec("E1.3-all", spec.lhs, spec.rhs, "no mask")
    assert verify_identity(unmasked, 120).status == "fail"


def test_evaluator_rejects_unknown_node():
    with pytest.raises(ValueError):
        evaluate(("what", 1), 10)


def test_sift_node_pulls_deeper_order():
    # S(7,5) of the odd-distinct-parts product at order 20 needs the
    # product at order 145; the coefficients must match a direct sift.
    expr = ("sift", 7, 5, ("prodap", ((2, 1, 1, 1),)))
    out = evaluate(expr, 20)
    direct = qs.prod_ap([(2, 1, 1, 1)], 7 * 20 + 5).sift(7, 5)
    assert out == direct


def test_full_catalog_passes_at_order_80():
    for spec in catalog():
        report = verify_identity(spec, 80)
        assert report.status == "pass", spec.id


def test_borwein_splitting_identity_to_500():
    assert verify_identity("E4.4", 500).status == "pass"


def test_descriptions_are_informative():
    for spec in catalog():
        assert spec.description
        assert "=" in spec.description or "X(" in spec.description
