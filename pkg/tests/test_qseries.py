"""Series arithmetic: frozen oracle values and algebraic properties."""

import pytest
from hypothesis import given, settings, strategies as st

from threesquares import qseries as qs
from threesquares.qseries import QSeries, TruncationMismatch


# -- independent oracles -----------------------------------------------------


def partitions_into(n, parts):
    """Count partitions of n into parts drawn from the given list."""
    ways = [1] + [0] * n
    for p in parts:
        for i in range(p, n + 1):
            ways[i] += ways[i - p]
    return ways[n]


def distinct_part_count(n, parts):
    """Count partitions of n into distinct parts from the list."""
    ways = [1] + [0] * n
    for p in parts:
        for i in range(n, p - 1, -1):
            ways[i] += ways[i - p]
    return ways[n]


def series(coeffs):
    return QSeries(len(coeffs) - 1, tuple(coeffs))


st_series = st.lists(st.integers(-40, 40), min_size=1, max_size=48).map(series)


def paired(draw_len=40):
    return st.lists(
        st.tuples(st.integers(-40, 40), st.integers(-40, 40)),
        min_size=1,
        max_size=draw_len,
    ).map(lambda ps: (series([a for a, _ in ps]), series([b for _, b in ps])))


# -- constructors against oracles ---------------------------------------------


def test_phi_counts_signed_squares():
    phi = qs.phi(30)
    for n in range(31):
        expected = sum(1 for k in range(-6, 7) if k * k == n)
        assert phi[n] == expected
    assert phi[1] == 2


def test_psi_counts_triangular_numbers():
    psi = qs.psi(30)
    tri = {k * (k + 1) // 2 for k in range(10)}
    for n in range(31):
        assert psi[n] == (1 if n in tri else 0)


def test_euler_product_matches_pentagonal_expansion():
    # Oracle: signed pentagonal exponents j(3j -+ 1)/2.
    expected = [0] * 13
    expected[0] = 1
    for j in range(1, 4):
        for e in (j * (3 * j - 1) // 2, j * (3 * j + 1) // 2):
            if e <= 12:
                expected[e] = (-1) ** j
    assert qs.euler_e(1, 12).coeffs == tuple(expected)


def test_partition_generating_series():
    inv = qs.one(12).divide_exact(qs.euler_e(1, 12))
    for n in range(13):
        assert inv[n] == partitions_into(n, range(1, 13))
    assert inv[5] == 7


def test_prod_ap_distinct_odd_parts():
    ser = qs.prod_ap([(2, 1, 1, 1)], 20)
    for n in range(21):
        assert ser[n] == distinct_part_count(n, range(1, 21, 2))
    assert ser[8] == 2


def test_prod_ap_empty_product_is_one():
    assert qs.prod_ap([], 10) == qs.one(10)


def test_prod_ap_rejects_offset_zero():
    with pytest.raises(ValueError):
        qs.prod_ap([(2, 0, -1, 1)], 10)


def test_prod_ap_negative_exponent_inverts():
    ser = qs.prod_ap([(1, 1, -1, 1)], 15)
    inv = qs.prod_ap([(1, 1, -1, -1)], 15)
    assert ser * inv == qs.one(15)


def test_jacobi_triple_product_small_grid():
    for r in range(1, 5):
        for s in range(r, 5):
            assert qs.theta_f(r, s, 120) == qs.theta_f_product(r, s, 120)


def test_phi_psi_eta_quotients():
    n = 500
    phi_quot = (
        qs.euler_e(2, n)
        .pow(5)
        .divide_exact(qs.euler_e(4, n).pow(2) * qs.euler_e(1, n).pow(2))
    )
    assert phi_quot == qs.phi(n)
    psi_quot = qs.euler_e(2, n).pow(2).divide_exact(qs.euler_e(1, n))
    assert psi_quot == qs.psi(n)


def test_theta_f_special_values():
    assert qs.theta_f(1, 1, 50) == qs.phi(50)
    assert qs.theta_f(1, 3, 50) == qs.psi(50)


# -- arithmetic: frozen spot values -------------------------------------------


def test_additive_inverse_and_scale():
    phi = qs.phi(20)
    assert (phi + (-phi)).is_zero()
    assert phi.scale(2)[1] == 4


def test_sub_phi_squares_at_q1():
    lhs = qs.phi(20).pow(2) - qs.phi(20, 5).pow(2)
    assert lhs[1] == 4


def test_mul_identity_and_cube():
    phi = qs.phi(20)
    assert phi * qs.one(20) == phi
    assert (phi * (phi * phi))[1] == 6


def test_psi_square_by_convolution():
    # Oracle: convolve the triangular-number indicator with itself.
    tri = [k * (k + 1) // 2 for k in range(10) if k * (k + 1) // 2 <= 20]
    conv = [0] * 21
    for t1 in tri:
        for t2 in tri:
            if t1 + t2 <= 20:
                conv[t1 + t2] += 1
    psi2 = qs.psi(20).pow(2)
    assert psi2.coeffs == tuple(conv)
    assert psi2[2] == 1


def test_divide_exact_examples():
    phi = qs.phi(30)
    assert phi.divide_exact(phi) == qs.one(30)
    quot = phi.pow(4).divide_exact(qs.phi(30, 3))
    assert quot[0] == 1 and quot[1] == 8


def test_divide_exact_requires_unit():
    with pytest.raises(ValueError):
        qs.phi(10).divide_exact(qs.monomial(10, 1))


def test_truncation_mismatch_is_an_error():
    with pytest.raises(TruncationMismatch):
        qs.phi(10) + qs.phi(11)
    with pytest.raises(TruncationMismatch):
        qs.phi(10) * qs.phi(11)


def test_dilate_sift_alternate_basics():
    phi = qs.phi(40)
    assert phi.dilate(1) == phi
    assert phi.dilate(4) == qs.phi(40, 4)
    assert phi.alternate().alternate() == phi
    assert phi.alternate()[1] == -2
    assert phi.dilate(2).dilate(3) == phi.dilate(6)


def test_sift_spot_values():
    # s(1), s(6), s(11), s(16), s(21) by direct lattice enumeration.
    def s_brute(n):
        b = int(n**0.5) + 1
        return sum(
            1
            for x in range(-b, b + 1)
            for y in range(-b, b + 1)
            for z in range(-b, b + 1)
            if x * x + y * y + z * z == n
        )

    expect = [s_brute(5 * k + 1) for k in range(5)]
    assert expect == [6, 24, 24, 6, 48]
    sifted = qs.phi(26).pow(3).sift(5, 1)
    assert list(sifted.coeffs)[:5] == expect


def test_sift_inverts_dilation():
    ser = series([3, -1, 4, 1, -5, 9, 2, 6])
    dil = ser.dilate(3)
    assert dil.sift(3, 0) == ser.truncate(dil.trunc // 3)


def test_sift_inverts_shifted_dilation():
    ser = series([3, -1, 4, 1, -5, 9, 2, 6])
    shifted = qs.monomial(ser.trunc, 1) * ser.dilate(3)
    recovered = shifted.sift(3, 1)
    assert recovered == ser.truncate(recovered.trunc)


def test_sift_validation():
    with pytest.raises(ValueError):
        qs.phi(10).sift(3, 3)
    with pytest.raises(ValueError):
        qs.phi(10).sift(0, 0)


def test_json_round_trip():
    ser = series([1, -2, 3])
    doc = ser.to_json_dict()
    assert doc == {"trunc": 2, "coeffs": [1, -2, 3]}
    assert QSeries.from_json_dict(doc) == ser


def test_getitem_bounds():
    ser = series([1, 2])
    with pytest.raises(IndexError):
        ser[2]
    with pytest.raises(IndexError):
        ser[-1]


# -- algebraic properties ------------------------------------------------------


@settings(max_examples=40, deadline=None)
@given(paired())
def test_mul_commutes(pair):
    a, b = pair
    assert a * b == b * a


@settings(max_examples=25, deadline=None)
@given(
    st.lists(
        st.tuples(
            st.integers(-20, 20), st.integers(-20, 20), st.integers(-20, 20)
        ),
        min_size=1,
        max_size=30,
    )
)
def test_mul_associates_and_distributes(triples):
    a = series([x for x, _, _ in triples])
    b = series([y for _, y, _ in triples])
    c = series([z for _, _, z in triples])
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=40, deadline=None)
@given(st_series, st.integers(1, 7))
def test_dissection_completeness(a, t):
    # Every coefficient is recovered from the residue-class parts.
    for n in range(a.trunc + 1):
        part = a.sift(t, n % t)
        assert part[n // t] == a[n]


@settings(max_examples=40, deadline=None)
@given(st_series, st.integers(1, 7))
def test_sift_of_dilate_recovers(a, t):
    dil = a.dilate(t)
    assert dil.sift(t, 0) == a.truncate(dil.trunc // t)


@settings(max_examples=30, deadline=None)
@given(paired())
def test_divide_exact_roundtrip(pair):
    a, b = pair
    unit = QSeries(b.trunc, (1,) + b.coeffs[1:])
    assert (a * unit).divide_exact(unit) == a


def test_mul_large_coefficient_fallback():
    # Values beyond the int64-safe window take the unbounded path.
    big = 1 << 70
    a = series([big, 1])
    b = series([1, big])
    prod = a * b
    assert prod.coeffs == (big, big * big + 1)
