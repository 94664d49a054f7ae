"""Smoke tests for the python bindings."""

import math

import pytest

import crownvol as cv

PI2 = math.pi**2


def test_dilog_values():
    assert cv.dilog(1.0) == pytest.approx(PI2 / 6, rel=1e-14)
    assert cv.dilog(-1.0) == pytest.approx(-PI2 / 12, rel=1e-14)
    assert cv.dilog_re(2.0) == pytest.approx(PI2 / 4, rel=1e-14)
    assert abs(cv.five_term_residual(0.3, 0.6)) < 1e-13
    with pytest.raises(ValueError):
        cv.dilog(1.5)


def test_closed_forms_and_quadrature():
    assert cv.v3_closed(1.0) == pytest.approx(0.365410857170, rel=1e-10)
    q = cv.crown_volume_quadrature(3, 1.0)
    assert q.value == pytest.approx(cv.v3_closed(1.0), rel=1e-7)
    r = cv.v4_reduced_quadrature(1.0)
    assert r.value == pytest.approx(0.4907811703, rel=1e-6)
    assert cv.disc_volume_quadrature(5).value == pytest.approx(PI2 / 6, rel=1e-6)


def test_mc_is_deterministic_and_close():
    a = cv.crown_volume_mc(3, 1.0, 200000, seed=7)
    b = cv.crown_volume_mc(3, 1.0, 200000, seed=7, threads=3)
    assert a.estimate == b.estimate
    assert abs(a.estimate - cv.v3_closed(1.0)) < 4 * a.std_error


def test_geometry_chain():
    x = cv.x_from_delta(2.0, [0.5, 1.1])
    back = cv.delta_from_x(x, 2.0)
    assert back == pytest.approx([0.5, 1.1], rel=1e-12)
    act = cv.crown_action([0.5, 0.6, 0.9], kappa=1.0)
    geo = cv.action_from_geometry(2.0, [0.5, 1.1], kappa=1.0)
    assert geo == pytest.approx(act, rel=1e-10)


def test_pfaffian_and_brackets():
    x = [0.4, 0.9, 1.7, 2.2]
    assert cv.pfaffian_x_bracket(x) == pytest.approx(cv.pfaffian_closed_form(x), rel=1e-12)
    assert cv.xi_bracket_transform_check(x) < 1e-12
    assert cv.casimir_bracket_residual([1.0, 2.0, 3.0]) == 0
    assert cv.dh_consistency(5) < 1e-14


def test_schwarzian():
    f = cv.sine_diffeo(1.0, 0.1)
    g = cv.exp_map(1.0)
    assert abs(cv.cocycle_residual(g, f, 0.3)) < 1e-11
    crown = cv.crown_x_map(3.0)
    assert cv.schwarzian(crown, 1.2) == pytest.approx(-0.5, abs=1e-10)


def test_python_callable_test_fn():
    f = cv.SmoothTestFn(
        f=lambda t: 2.0 * t,
        d1=lambda t: 2.0,
        d2=lambda t: 0.0,
        d3=lambda t: 0.0,
        quasiperiod=2.0,
    )
    assert cv.schwarzian(f, 0.5) == 0.0
    assert cv.discrete_crown_action(f, 5) == pytest.approx(
        5 * math.log(math.expm1(4.0 / 5)), rel=1e-12
    )


def test_check_suite():
    results = cv.check_specfun()
    assert results and all(r.pass_ for r in results)
