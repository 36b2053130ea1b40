"""Small-depth closed forms for probe transmission, reflection and phases."""

import math

import numpy as np
import pytest

from phasegrating import (
    PhysicalParams,
    approx_RT,
    approx_phases,
    small_od_envelopes,
    solve_control_bvp,
    validity_indicator,
)


def test_transmission_unity_at_sin_zero():
    # 2 phi + phi_l = pi kills the first-order term
    out = approx_RT(0.3, 0.64, 0.19, math.pi / 2, math.pi / 4)
    assert out["T"] == pytest.approx(1.0, abs=1e-14)


def test_reference_arithmetic():
    # alpha0_L |c_plus| = 0.192, alpha0_L |c_pm| = 0.054, resonance, phi = 0
    out = approx_RT(0.3, 0.192 / 0.3, 0.054 / 0.3, math.pi / 2, 0.0)
    assert out["T"] == pytest.approx(1.0 - 2.0 * 0.192, rel=1e-12)
    assert out["R"] == pytest.approx(0.054**2 * 0.616, rel=1e-12)
    assert out["R"] == pytest.approx(0.0018, abs=5e-5)


def test_transmission_above_unity_range():
    for phi in np.linspace(0.0, math.pi, 181, endpoint=False):
        t = approx_RT(0.1, 0.6, 0.2, math.pi / 2, float(phi))["T"]
        arg = (2.0 * phi + math.pi / 2) % (2.0 * math.pi)
        if 1e-6 < arg - math.pi and arg < 2.0 * math.pi - 1e-6:
            assert t > 1.0
        elif 1e-6 < arg < math.pi - 1e-6:
            assert t < 1.0


def test_rejects_negative_magnitudes():
    with pytest.raises(ValueError):
        approx_RT(0.3, -0.1, 0.2, math.pi / 2, 0.0)
    with pytest.raises(ValueError):
        approx_RT(0.3, 0.1, -0.2, math.pi / 2, 0.0)


def test_forward_phase_vanishes_at_symmetric_points():
    y = np.linspace(0.0, 1.0, 21)
    for phi in (0.0, math.pi / 2):
        out = approx_phases(0.6, 0.683, math.pi / 2, phi, y)
        assert np.max(np.abs(out["phi_sigma_plus"])) < 1e-15


def test_forward_phase_prediction_depth_06():
    out = approx_phases(0.6, 0.683, math.pi / 2, math.pi / 4, np.array([1.0]))
    assert out["phi_sigma_plus"][0] == pytest.approx(0.41, abs=2e-3)


def test_backward_exit_phases():
    # pi - 2 phi at the exit, independent of the slope term
    for phi, expected in ((0.0, math.pi), (math.pi / 4, math.pi / 2), (math.pi / 2, 0.0)):
        out = approx_phases(0.6, 0.683, math.pi / 2, phi, np.array([1.0]))
        assert out["phi_sigma_minus"][0] == pytest.approx(expected, abs=1e-13)


def test_envelopes_boundary_structure():
    y = np.linspace(0.0, 1.0, 41)
    control = solve_control_bvp(PhysicalParams(alpha0_L=0.05))
    gc = control.coefficients_at(0.0)
    env = small_od_envelopes(0.05, gc, 0.3, y)
    plus = env["omega_sigma_plus"]
    minus = env["omega_sigma_minus"]
    assert plus[0] == pytest.approx(1.0, abs=1e-14)
    assert abs(minus[-1]) < 1e-14
    # forward envelope is linear in y at first order
    second_diff = np.diff(plus, 2)
    assert np.max(np.abs(second_diff)) < 1e-12


def test_validity_indicator_is_max_over_couplings():
    control = solve_control_bvp(PhysicalParams(alpha0_L=0.3))
    gc = control.coefficients_at(0.0)
    ind = validity_indicator(0.3, gc)
    assert ind == pytest.approx(0.3 * abs(gc.c_plus), rel=1e-14)
    assert ind == pytest.approx(0.19221743, abs=1e-6)


def test_agreement_with_full_solver_in_regime():
    # alpha0_L = 0.01 sits inside the validity window of the closed forms
    from phasegrating import phase_sweep

    p = PhysicalParams(alpha0_L=0.01)
    control = solve_control_bvp(p)
    gc = control.coefficients_at(0.0)
    phis = np.linspace(0.0, math.pi, 32, endpoint=False)
    refl, trans = phase_sweep(control, phis)
    worst_t = 0.0
    worst_r = 0.0
    for phi, r_num, t_num in zip(phis, refl, trans):
        out = approx_RT(
            0.01, abs(gc.c_plus), abs(gc.c_plus_minus), p.phi_l, float(phi)
        )
        bound = 0.05 * abs(t_num - 1.0) + 1e-4
        worst_t = max(worst_t, abs(out["T"] - t_num) - bound)
        worst_r = max(worst_r, abs(out["R"] - r_num) / r_num)
    assert worst_t <= 0.0
    assert worst_r <= 0.10
