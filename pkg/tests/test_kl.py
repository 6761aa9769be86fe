from math import comb

import pytest

from thagkl.dyck import catalan, closed_form, count_by_ascents_dp
from thagkl.kl import (
    KLTable,
    char_poly_boolean,
    char_poly_thag,
    kl_poly,
    phi_series,
    verify_theorem,
)
from thagkl.polynomials import IntPoly, ONE, PolySeries, ZERO, poly_reverse


def test_char_poly_boolean():
    assert char_poly_boolean(0) == ONE
    assert char_poly_boolean(1) == IntPoly((-1, 1))
    assert char_poly_boolean(3) == IntPoly((-1, 3, -3, 1))


def test_char_poly_thag():
    assert char_poly_thag(0) == IntPoly((-1, 1))
    assert char_poly_thag(1) == IntPoly((2, -3, 1))
    assert char_poly_thag(2) == IntPoly((-4, 8, -5, 1))
    assert char_poly_thag(3).evaluate(1) == 0


def test_kl_poly_anchors():
    assert kl_poly(0) == ONE
    assert kl_poly(1) == ONE
    assert kl_poly(2) == IntPoly((1, 1))
    assert kl_poly(3) == IntPoly((1, 4))
    assert kl_poly(4) == IntPoly((1, 11, 2))
    assert kl_poly(5) == IntPoly((1, 26, 15))


def test_kl_poly_rejects_negative_index():
    with pytest.raises(ValueError):
        kl_poly(-1)


def test_kl_poly_structure_to_twenty():
    for n in range(21):
        p = kl_poly(n)
        assert p.constant_term() == 1
        assert p.degree() <= n // 2
        assert all(c >= 0 for c in p.coeffs)


def test_kl_poly_catalan_specializations():
    for n in range(21):
        assert kl_poly(n).evaluate(1) == catalan(n)
    for m in range(11):
        assert kl_poly(2 * m).leading_coefficient() == catalan(m)


def test_kl_poly_matches_closed_form():
    for n in range(21):
        p = kl_poly(n)
        for k in range(p.degree() + 2):
            assert p[k] == closed_form(n, k)


def test_defining_recursion_residual_is_exact():
    # substitute the table back into the rank recursion and demand identity
    for n in range(21):
        lhs = poly_reverse(n + 1, kl_poly(n))
        rhs = char_poly_boolean(n + 1)
        for i in range(n + 1):
            weight = comb(n, i) * 2 ** (n - i)
            rhs = rhs + weight * char_poly_boolean(n - i) * kl_poly(i)
        assert lhs == rhs


def test_kl_table_entries():
    table = KLTable()
    entries = table.entries(6)
    assert len(entries) == 7
    assert entries[0] == ONE
    assert entries[4] == IntPoly((1, 11, 2))
    # shared module-level table agrees with a fresh one
    assert all(entries[n] == kl_poly(n) for n in range(7))


def test_phi_series_low_orders():
    assert phi_series(1) == PolySeries(1, (ZERO, ONE))
    phi = phi_series(3)
    assert [c.coeffs for c in phi.coeffs] == [(), (1,), (1,), (1, 1)]


def test_phi_series_coefficients_are_kl_polys():
    phi = phi_series(15)
    for n in range(14):
        assert phi.coefficient(n + 1) == kl_poly(n)


def test_phi_series_catalan_column():
    phi = phi_series(21)
    assert phi.coefficient(0).is_zero()
    for n in range(21):
        assert phi.coefficient(n).evaluate(1) == (catalan(n - 1) if n else 0)


def test_verify_theorem_passes():
    assert verify_theorem(15).ok
    report = verify_theorem(1)
    assert report.ok and report.order == 1


def test_verify_theorem_rejects_zero_order():
    with pytest.raises(ValueError):
        verify_theorem(0)


def _corrupt(series: PolySeries, n: int, k: int) -> PolySeries:
    coeffs = list(series.coeffs)
    target = list(coeffs[n + 1].coeffs)
    while len(target) <= k:
        target.append(0)
    target[k] += 1
    coeffs[n + 1] = IntPoly(target)
    return PolySeries(series.order, coeffs)


def test_verify_theorem_corrupted_fixture_names_cell():
    order = 21
    corrupted = _corrupt(phi_series(order), 9, 2)
    report = verify_theorem(order, series=corrupted)
    assert not report.ok
    assert len(report.mismatches) == 1
    bad = report.mismatches[0]
    assert (bad.n, bad.k) == (9, 2)
    assert bad.series == bad.recursion + 1
    assert bad.dyck_dp == bad.recursion == count_by_ascents_dp(9)[2]
