"""End-to-end smoke tests for the python bindings."""

import math

import pytest

import perispline as ps


def test_spline_space_attributes():
    space = ps.SplineSpace(3, 24)
    assert space.r == 3
    assert space.N == 24
    assert space.h == pytest.approx(1.0 / 24.0, abs=0.0)
    assert "SplineSpace(r=3, N=24)" == repr(space)
    with pytest.raises(ValueError):
        ps.SplineSpace(2, 7)


def test_cardinal_bspline_values():
    assert ps.cardinal_bspline(2, 0.0) == pytest.approx(1.0)
    assert ps.cardinal_bspline(2, 0.5) == pytest.approx(0.5)
    assert ps.cardinal_bspline(4, 0.0) == pytest.approx(2.0 / 3.0)
    assert ps.cardinal_bspline_fourier(3, 0.0) == pytest.approx(1.0)


def test_partition_of_unity():
    space = ps.SplineSpace(3, 16)
    for x in (0.0, 0.1, 0.37, 0.9):
        total = sum(ps.basis_eval(space, j, x) for j in range(1, 17))
        assert total == pytest.approx(1.0, abs=1e-12)


def test_gram_stencil_and_bounds():
    g = ps.gram_stencil(2)
    assert g[0] == pytest.approx(2.0 / 3.0, abs=1e-15)
    assert g[1] == pytest.approx(1.0 / 6.0, abs=1e-15)
    lower, upper = ps.spectral_bounds(2)
    assert lower == pytest.approx(1.0 / 3.0, abs=1e-12)
    assert upper == pytest.approx(1.0, abs=1e-12)


def test_inverse_row_decay_ratio():
    gamma = ps.inverse_first_row(2, 64)
    assert gamma[0] == pytest.approx(math.sqrt(3.0), abs=1e-10)
    for i in range(1, 8):
        assert abs(gamma[i] / gamma[i - 1]) == pytest.approx(2.0 - math.sqrt(3.0), rel=1e-6)
    C, q = ps.demko_bound(1.0 / 3.0, 1.0, 1)
    assert C == pytest.approx(2.0 + math.sqrt(3.0), abs=1e-9)
    assert q == pytest.approx(2.0 + math.sqrt(3.0), abs=1e-9)


def test_projection_error_halves_at_order_two():
    errs = []
    for n in (16, 32):
        s = ps.project(ps.SplineSpace(2, n), "sin1")
        errs.append(ps.l2_error("sin1", s))
    assert errs[0] / errs[1] == pytest.approx(4.0, rel=0.05)


def test_projection_of_python_callable():
    u = lambda x: math.sin(2.0 * math.pi * x)  # noqa: E731
    space = ps.SplineSpace(3, 32)
    s = ps.project(space, u)
    assert s(0.25) == pytest.approx(1.0, abs=1e-3)
    assert ps.l2_error(u, s) < 1e-3


def test_stability_report_contracts():
    rep = ps.stability_report(ps.SplineSpace(2, 32), "expsin", 0)
    assert rep["applicable"]
    assert rep["ratio_l2"] <= 1.0 + 1e-12


def test_quasi_interpolation_exact_rationals():
    assert ps.tw_delta(2) == ["1", "1/3"]
    exact, floats = ps.tw_stencil(2)
    assert exact == ["7/6", "-1/12"]
    assert floats[0] == pytest.approx(7.0 / 6.0, abs=0.0)
    assert ps.quasi_alignment_shift(4) == 1.0
    assert ps.quasi_sup_bound(2) == pytest.approx(4.0 / 3.0)


def test_quasi_interpolation_converges():
    space = ps.SplineSpace(2, 64)
    s = ps.quasi_interpolate(space, "sin1")
    assert ps.l2_error("sin1", s) < 2e-3


def test_binomial_alternating_sum_is_exact_int():
    assert ps.binomial_alternating_sum(3, 1) == 0
    assert ps.binomial_alternating_sum(3, 3) == 6
    assert ps.binomial_alternating_sum(12, 12, 6) == math.factorial(12)
    big = ps.binomial_alternating_sum(25, 25, 3)
    assert big == math.factorial(25)  # exceeds 2**63: arrives as a python int


def test_sobolev_seminorm_and_sup_norm():
    space = ps.SplineSpace(2, 16)
    s = ps.make_spline(space, [2.5] * 16)
    assert ps.sobolev_seminorm(s, 0) == pytest.approx(2.5, abs=1e-12)
    assert s.sup_norm() == pytest.approx(2.5, abs=1e-12)
    assert ps.sobolev_seminorm(s, 1) == pytest.approx(0.0, abs=1e-10)
    assert ps.inverse_inequality_constant(space) == pytest.approx(
        2.0 * math.sqrt(3.0), abs=1e-10
    )


def test_corpus_labels_present():
    labels = ps.corpus_labels()
    assert "sin1" in labels and "randtrig" in labels
