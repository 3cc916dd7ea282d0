"""Verification engines at reduced depth (full depths live in acceptance)."""

import pytest

from threesquares.forms import reduce_form
from threesquares.lattice import TernaryForm
from threesquares.verify import (
    run_catalog,
    verify_hs,
    verify_jagy,
    verify_prop54,
    verify_signature,
    verify_theorems,
)


def canon(t):
    return reduce_form(TernaryForm(*t)).as_tuple()


def test_hs_small_all_routes():
    for p in (3, 5):
        report = verify_hs(p, 300, chain_order=300)
        assert report.status == "pass"
        assert report.first_fail is None
        assert report.chain_order == 300
        assert report.chain_reports
        assert all(r.status == "pass" for r in report.chain_reports)


def test_hs_brute_only_for_larger_primes():
    report = verify_hs(7, 300)
    assert report.status == "pass"
    assert report.chain_reports == ()


def test_hs_rejects_bad_p():
    with pytest.raises(ValueError):
        verify_hs(2, 10)
    with pytest.raises(ValueError):
        verify_hs(15, 10)


def test_theorems_small():
    reports = verify_theorems(400)
    assert [r.status for r in reports] == ["pass"] * 4
    assert {r.id for r in reports} == {"T1.1", "T1.2", "T5.2", "T5.3"}


def test_prop54_coefficients_echo_printed_displays():
    expected = {
        3: ({(2, canon((1, 1, 3, 0, 0, 1)))}, {(4, canon((4, 3, 4, 0, 4, 0)))}),
        7: ({(6, canon((1, 2, 7, 0, 0, 1)))}, {(12, canon((4, 7, 8, 0, 4, 0)))}),
    }
    for p, (want1, want2) in expected.items():
        report = verify_prop54(p, 200)
        assert report.status == "pass"
        assert {(c, t) for c, t in report.tg1_terms} == want1
        assert {(c, t) for c, t in report.tg2_terms} == want2


def test_prop54_eleven_matches_four_term_display():
    report = verify_prop54(11, 150)
    assert report.status == "pass"
    assert {(c, t) for c, t in report.tg1_terms} == {
        (4, canon((3, 4, 4, -3, 2, 2))),
        (6, canon((1, 3, 11, 0, 0, 1))),
    }
    assert {(c, t) for c, t in report.tg2_terms} == {
        (8, canon((3, 15, 15, -14, 2, 2))),
        (12, canon((4, 11, 12, 0, 4, 0))),
    }


def test_signature_small():
    report = verify_signature(23, 120)
    assert report.status == "pass"
    assert report.pullback_ok and report.vanishing_ok


def test_jagy_small():
    report = verify_jagy(13, 400)
    assert report.status == "pass"
    assert report.failures == ()


def test_prop54_conjecture_level_primes():
    # Beyond the proved range: any failure here is a hard suite failure
    # pending investigation, never suppressed.
    for p in (29, 31, 37):
        report = verify_prop54(p, 500)
        assert report.status == "pass", (p, report.first_fail)


def test_sifting_chain_routes_agree():
    # The dissection steps applied to the cube of the theta sum must
    # agree with the same steps applied to the enumerated count series.
    from threesquares import qseries as qs
    from threesquares.lattice import theta_series_ternary

    order = 200
    outer = 25 * order
    qseries_route = qs.phi(outer).pow(3)
    lattice_route = theta_series_ternary(
        TernaryForm(1, 1, 1, 0, 0, 0), outer
    )
    assert qseries_route == lattice_route
    for series in (qseries_route, lattice_route):
        step = series.sift(25, 0) - series.truncate(order).scale(5)
        assert step == qseries_route.sift(25, 0) - lattice_route.truncate(
            order
        ).scale(5)


def test_pullback_bijection_seedless_prime():
    # The first prime outside the three seed congruence families is
    # selected by the signature search and still pairs off uniquely.
    from threesquares.genera import find_h, tg1, tg2

    genus = tg2(73)
    assert genus.discriminant == 16 * 73 * 73
    assert len(genus.members) == len(tg1(73).members)
    assert find_h(73, 200).status == "ok"


def test_run_catalog_filters_and_validates():
    reports = run_catalog(60, ids=["E2.1", "E4.4"])
    assert [r.id for r in reports] == ["E2.1", "E4.4"]
    with pytest.raises(KeyError):
        run_catalog(60, ids=["NOPE"])


def test_report_json_shapes():
    rep = verify_hs(3, 50, chain_order=60)
    doc = rep.to_json_dict()
    assert doc["p"] == 3 and doc["status"] == "pass"
    doc54 = verify_prop54(3, 50).to_json_dict()
    assert doc54["tg1Terms"] and doc54["tg2Terms"]
    docsig = verify_signature(17, 60).to_json_dict()
    assert docsig["hStatus"] == "ok"
    docj = verify_jagy(17, 100).to_json_dict()
    assert docj["status"] == "pass"
