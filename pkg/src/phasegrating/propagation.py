"""Envelope propagation through the cell.

The control pair forms a nonlinear two-point boundary value problem:
the forward amplitude is given at the entrance (y = 0) and the backward
amplitude at the exit (y = L).  It is solved by damped-Newton shooting
on the unknown backward amplitude at y = 0.  The probe pair rides on the
frozen control; its equations couple to the conjugate amplitudes, which
makes them linear over the reals, so the two-point conditions are met by
superposing basis initial value runs.

Positions are expressed in units of the cell length (x = y / L runs over
[0, 1]); the optical depth enters only through alpha0_L.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np
from scipy.integrate import solve_ivp

from .errors import (
    ConfigError,
    DegenerateField,
    NodeError,
    NoConvergence,
    SingularSystem,
)
from .grating import GratingCoefficients, coupling_coefficients
from .model import PhysicalParams

# relative amplitude below which a point is excluded from phase unwrapping
PHASE_AMP_FLOOR = 1e-12


@dataclass(frozen=True)
class BoundaryConditions:
    """Field amplitudes pinned at the cell boundaries.

    control_in is the forward control at y = 0, control_back the backward
    control at y = L, probe_in the forward probe at y = 0.  The backward
    probe vanishes at y = L always.
    """

    control_in: float = 0.4
    control_back: complex = 0.16
    probe_in: float = 1.0

    def __post_init__(self) -> None:
        if self.control_in <= 0.0:
            raise ConfigError("control_in must be positive")
        if self.probe_in <= 0.0:
            raise ConfigError("probe_in must be positive")


@dataclass(frozen=True)
class SolverOptions:
    grid_points: int = 2001
    ode_rel_tol: float = 1e-10
    ode_abs_tol: float = 1e-12
    shoot_tol: float = 1e-10
    max_newton_iter: int = 50
    fd_step: float = 1e-7

    def __post_init__(self) -> None:
        if self.grid_points < 2:
            raise ConfigError("grid_points must be at least 2")
        if min(self.ode_rel_tol, self.ode_abs_tol, self.shoot_tol, self.fd_step) <= 0.0:
            raise ConfigError("solver tolerances must be positive")
        if self.max_newton_iter < 1:
            raise ConfigError("max_newton_iter must be at least 1")


def _unwrapped_phase(z: np.ndarray, positive_anchor: bool = False) -> np.ndarray:
    """Unwrapped phase of a sampled envelope under phi = -arg(Omega).

    Points with negligible amplitude (below PHASE_AMP_FLOOR of the peak)
    carry no phase information; they take the nearest valid value, with
    linear interpolation across interior gaps.  The first valid point is
    anchored to (-pi, pi], or to [0, 2 pi) when positive_anchor is set.
    """
    amp = np.abs(z)
    peak = amp.max()
    if peak == 0.0:
        return np.zeros_like(amp)
    valid = amp > PHASE_AMP_FLOOR * peak
    idx = np.nonzero(valid)[0]
    raw = np.unwrap(-np.angle(z[idx]))
    if positive_anchor and raw[0] < 0.0:
        raw = raw + 2.0 * math.pi
    return np.interp(np.arange(len(z), dtype=float), idx.astype(float), raw)


@dataclass(frozen=True)
class FieldProfile:
    """All four envelopes sampled on the y grid, plus unwrapped phases.

    Probe intensities are normalised to the entrance probe; control
    intensities are absolute.  phase_probe_minus is anchored to [0, 2 pi)
    so the backward-probe phase reads continuously from its y = 0 value.
    """

    y: np.ndarray
    control_plus: np.ndarray
    control_minus: np.ndarray
    probe_plus: np.ndarray
    probe_minus: np.ndarray
    probe_in: float
    phase_control_plus: np.ndarray = field(init=False)
    phase_control_minus: np.ndarray = field(init=False)
    phase_probe_plus: np.ndarray = field(init=False)
    phase_probe_minus: np.ndarray = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "phase_control_plus", _unwrapped_phase(self.control_plus)
        )
        object.__setattr__(
            self, "phase_control_minus", _unwrapped_phase(self.control_minus)
        )
        object.__setattr__(self, "phase_probe_plus", _unwrapped_phase(self.probe_plus))
        object.__setattr__(
            self,
            "phase_probe_minus",
            _unwrapped_phase(self.probe_minus, positive_anchor=True),
        )

    @property
    def intensity_control_plus(self) -> np.ndarray:
        return np.abs(self.control_plus) ** 2

    @property
    def intensity_control_minus(self) -> np.ndarray:
        return np.abs(self.control_minus) ** 2

    @property
    def intensity_probe_plus(self) -> np.ndarray:
        return np.abs(self.probe_plus) ** 2 / self.probe_in**2

    @property
    def intensity_probe_minus(self) -> np.ndarray:
        return np.abs(self.probe_minus) ** 2 / self.probe_in**2


@dataclass(frozen=True)
class ControlSolution:
    """Converged control pair with its shooting diagnostics."""

    params: PhysicalParams
    bc: BoundaryConditions
    options: SolverOptions
    y: np.ndarray
    control_plus: np.ndarray
    control_minus: np.ndarray
    control_minus_entrance: complex
    newton_iters: int
    residual: float
    _dense: Callable[[float], np.ndarray]

    def fields_at(self, y: float) -> tuple[complex, complex]:
        s = self._dense(y)
        return complex(s[0], s[1]), complex(s[2], s[3])

    def reflection_ratio(self, y: float = 0.0) -> complex:
        cp, cm = self.fields_at(y)
        if cp == 0.0:
            raise DegenerateField("forward control amplitude vanishes")
        return cm / cp

    def coefficients_at(self, y: float = 0.0) -> GratingCoefficients:
        cp, cm = self.fields_at(y)
        return coupling_coefficients(self.params, cp, cm)


@dataclass(frozen=True)
class ScatteringResult:
    """Probe response on top of a converged control."""

    reflectivity: float
    transmissivity: float
    profile: FieldProfile
    control: ControlSolution
    probe_residual: float


@dataclass(frozen=True)
class ForwardSolution:
    """Forward-only run (no backward control, no backward probe).

    dephasing holds the running phase offset
    phi_probe_plus + phi - phi_control_plus along y.
    """

    params: PhysicalParams
    y: np.ndarray
    control_plus: np.ndarray
    probe_plus: np.ndarray
    dephasing: np.ndarray


def control_rhs(
    params: PhysicalParams, y: float, fields: tuple[complex, complex]
) -> tuple[complex, complex]:
    """Derivatives of (forward, backward) control envelopes at position y."""
    cp, cm = fields
    try:
        gc = coupling_coefficients(params, cp, cm)
    except NodeError as exc:
        raise NodeError(y) from exc
    al = params.alpha0_L
    dcp = -al * (gc.cbar_0 * cp + gc.cbar_1 * cm)
    dcm = al * (gc.cbar_m1 * cp + gc.cbar_0 * cm)
    return dcp, dcm


def probe_rhs(
    params: PhysicalParams,
    y: float,
    probe: tuple[complex, complex],
    control: tuple[complex, complex],
) -> tuple[complex, complex]:
    """Derivatives of (forward, backward) probe envelopes at position y.

    The coupling involves the conjugate probe amplitudes: the grating
    converts phase advance into retreat, which is what locks the probe
    phase to the control pattern.
    """
    pp, pm = probe
    cp, cm = control
    try:
        gc = coupling_coefficients(params, cp, cm)
    except NodeError as exc:
        raise NodeError(y) from exc
    drive = params.alpha0_L * cmath.exp(2j * params.phi)
    dpp = -drive * (gc.c_plus * pp.conjugate() + gc.c_plus_minus * pm.conjugate())
    dpm = drive * (gc.c_plus_minus * pp.conjugate() + gc.c_minus * pm.conjugate())
    return dpp, dpm


def _control_rhs_real(params: PhysicalParams) -> Callable[[float, np.ndarray], list[float]]:
    def rhs(x: float, s: np.ndarray) -> list[float]:
        dcp, dcm = control_rhs(params, x, (complex(s[0], s[1]), complex(s[2], s[3])))
        return [dcp.real, dcp.imag, dcm.real, dcm.imag]

    return rhs


def _integrate(
    rhs: Callable,
    y0: Sequence[float],
    options: SolverOptions,
    t_eval: np.ndarray | None = None,
    dense: bool = False,
):
    sol = solve_ivp(
        rhs,
        (0.0, 1.0),
        y0,
        method="DOP853",
        rtol=options.ode_rel_tol,
        atol=options.ode_abs_tol,
        t_eval=t_eval,
        dense_output=dense,
    )
    if not sol.success:
        raise NoConvergence(0, math.nan, f"integration failed: {sol.message}")
    return sol


def solve_control_bvp(
    params: PhysicalParams,
    bc: BoundaryConditions | None = None,
    options: SolverOptions | None = None,
) -> ControlSolution:
    """Shoot for the backward control amplitude at the entrance.

    Newton iteration on the complex unknown, central-difference Jacobian,
    step halving when the residual fails to drop.  The initial guess is
    the exit value itself, which is exact at zero depth and close for
    shallow cells.
    """
    bc = bc if bc is not None else BoundaryConditions()
    options = options if options is not None else SolverOptions()
    target = complex(bc.control_back)
    rhs = _control_rhs_real(params)

    def residual_at(g: complex):
        sol = _integrate(rhs, [bc.control_in, 0.0, g.real, g.imag], options)
        return complex(sol.y[2, -1], sol.y[3, -1]) - target

    tol = options.shoot_tol * abs(bc.control_in)
    g = target
    f = residual_at(g)
    iters = 0
    while abs(f) > tol:
        if iters >= options.max_newton_iter:
            raise NoConvergence(iters, abs(f))
        h = options.fd_step * max(1.0, abs(g))
        fpr = residual_at(g + h)
        fmr = residual_at(g - h)
        fpi = residual_at(g + 1j * h)
        fmi = residual_at(g - 1j * h)
        jac = np.array(
            [
                [(fpr.real - fmr.real) / (2 * h), (fpi.real - fmi.real) / (2 * h)],
                [(fpr.imag - fmr.imag) / (2 * h), (fpi.imag - fmi.imag) / (2 * h)],
            ]
        )
        try:
            delta = np.linalg.solve(jac, [f.real, f.imag])
        except np.linalg.LinAlgError as exc:
            raise NoConvergence(iters, abs(f), "singular shooting Jacobian") from exc
        step = complex(delta[0], delta[1])
        lam = 1.0
        while True:
            try:
                f_new = residual_at(g - lam * step)
            except (NodeError, DegenerateField):
                f_new = None
            if f_new is not None and abs(f_new) < abs(f):
                break
            lam *= 0.5
            if lam < 1e-6:
                raise NoConvergence(
                    iters + 1, abs(f), "shooting line search stalled"
                )
        g = g - lam * step
        f = f_new
        iters += 1

    grid = np.linspace(0.0, 1.0, options.grid_points)
    sol = _integrate(
        rhs, [bc.control_in, 0.0, g.real, g.imag], options, t_eval=grid, dense=True
    )
    cp = sol.y[0] + 1j * sol.y[1]
    cm = sol.y[2] + 1j * sol.y[3]
    return ControlSolution(
        params=params,
        bc=bc,
        options=options,
        y=grid,
        control_plus=cp,
        control_minus=cm,
        control_minus_entrance=g,
        newton_iters=iters,
        residual=abs(f),
        _dense=sol.sol,
    )


def _joint_rhs(
    params: PhysicalParams, n_cols: int, phi_override: float | None = None
) -> Callable[[float, np.ndarray], np.ndarray]:
    """Control plus n_cols independent probe columns in one state vector.

    Integrating the probe together with the control keeps the probe
    coefficients consistent with the integrator's own control accuracy
    instead of relying on dense-output interpolation.
    """
    phi = params.phi if phi_override is None else phi_override

    def rhs(x: float, s: np.ndarray) -> np.ndarray:
        cp = complex(s[0], s[1])
        cm = complex(s[2], s[3])
        try:
            gc = coupling_coefficients(params, cp, cm)
        except NodeError as exc:
            raise NodeError(x) from exc
        al = params.alpha0_L
        dcp = -al * (gc.cbar_0 * cp + gc.cbar_1 * cm)
        dcm = al * (gc.cbar_m1 * cp + gc.cbar_0 * cm)
        out = np.empty_like(s)
        out[0], out[1], out[2], out[3] = dcp.real, dcp.imag, dcm.real, dcm.imag
        drive = al * cmath.exp(2j * phi)
        for k in range(n_cols):
            base = 4 + 4 * k
            pp = complex(s[base], s[base + 1])
            pm = complex(s[base + 2], s[base + 3])
            dpp = -drive * (gc.c_plus * pp.conjugate() + gc.c_plus_minus * pm.conjugate())
            dpm = drive * (gc.c_plus_minus * pp.conjugate() + gc.c_minus * pm.conjugate())
            out[base], out[base + 1] = dpp.real, dpp.imag
            out[base + 2], out[base + 3] = dpm.real, dpm.imag
        return out

    return rhs


def _superpose_match(col_a_end: complex, col_b_end: complex, col_c_end: complex):
    """Coefficients (s1, s2) with col_a + s1 col_b + s2 col_c vanishing at exit."""
    mat = np.array(
        [
            [col_b_end.real, col_c_end.real],
            [col_b_end.imag, col_c_end.imag],
        ]
    )
    scale = np.abs(mat).max()
    det = mat[0, 0] * mat[1, 1] - mat[0, 1] * mat[1, 0]
    if scale == 0.0 or abs(det) <= 1e-14 * scale * scale:
        raise SingularSystem("probe boundary matching system is singular")
    rhs_vec = np.array([-col_a_end.real, -col_a_end.imag])
    s = np.linalg.solve(mat, rhs_vec)
    return float(s[0]), float(s[1])


def solve_probe_bvp(
    control: ControlSolution, options: SolverOptions | None = None
) -> ScatteringResult:
    """Probe response over a converged control.

    Three initial value runs (the inhomogeneous entrance column plus two
    backward-probe unit columns) are superposed to cancel the backward
    probe at the exit; superposition over the reals is exact because the
    conjugate coupling is real-linear.
    """
    options = options if options is not None else control.options
    params = control.params
    bc = control.bc
    g = control.control_minus_entrance
    y0 = np.zeros(16)
    y0[0] = bc.control_in
    y0[2], y0[3] = g.real, g.imag
    y0[4] = bc.probe_in  # column a: physical entrance probe, no backward seed
    y0[10] = 1.0  # column b: unit backward probe at entrance
    y0[15] = 1.0  # column c: i * backward probe at entrance
    grid = np.linspace(0.0, 1.0, options.grid_points)
    sol = _integrate(_joint_rhs(params, 3), y0, options, t_eval=grid)

    cols = sol.y
    a_pm_end = complex(cols[6, -1], cols[7, -1])
    b_pm_end = complex(cols[10, -1], cols[11, -1])
    c_pm_end = complex(cols[14, -1], cols[15, -1])
    s1, s2 = _superpose_match(a_pm_end, b_pm_end, c_pm_end)

    def superpose(row: int) -> np.ndarray:
        a = cols[row] + 1j * cols[row + 1]
        b = cols[row + 4] + 1j * cols[row + 5]
        c = cols[row + 8] + 1j * cols[row + 9]
        return a + s1 * b + s2 * c

    pp = superpose(4)
    pm = superpose(6)
    profile = FieldProfile(
        y=grid,
        control_plus=cols[0] + 1j * cols[1],
        control_minus=cols[2] + 1j * cols[3],
        probe_plus=pp,
        probe_minus=pm,
        probe_in=bc.probe_in,
    )
    r_val = abs(pm[0]) ** 2 / bc.probe_in**2
    t_val = abs(pp[-1]) ** 2 / bc.probe_in**2
    return ScatteringResult(
        reflectivity=r_val,
        transmissivity=t_val,
        profile=profile,
        control=control,
        probe_residual=abs(pm[-1]),
    )


def solve_scattering(
    params: PhysicalParams,
    bc: BoundaryConditions | None = None,
    options: SolverOptions | None = None,
) -> ScatteringResult:
    """Full control + probe solve in one call."""
    control = solve_control_bvp(params, bc, options)
    return solve_probe_bvp(control, options)


def phase_sweep(
    control: ControlSolution,
    phis: np.ndarray,
    options: SolverOptions | None = None,
) -> tuple[np.ndarray, np.ndarray]:
    """Reflectivity and transmissivity over a grid of relative phases.

    Rotating the probe pair by e^{i phi} removes phi from the equations,
    so one set of four basis columns serves every phase; each phi then
    costs a 2x2 solve.  Exact pi periodicity is structural here: phases
    phi and phi + pi give entrance vectors of opposite sign, hence
    superposition coefficients of opposite sign and identical moduli.
    """
    options = options if options is not None else control.options
    params = control.params
    bc = control.bc
    g = control.control_minus_entrance
    y0 = np.zeros(20)
    y0[0] = bc.control_in
    y0[2], y0[3] = g.real, g.imag
    y0[4] = 1.0  # forward unit
    y0[9] = 1.0  # forward i
    y0[14] = 1.0  # backward unit
    y0[19] = 1.0  # backward i
    sol = _integrate(_joint_rhs(params, 4, phi_override=0.0), y0, options)

    end = sol.y[:, -1]

    def col_end(base: int) -> tuple[complex, complex]:
        return (
            complex(end[base], end[base + 1]),
            complex(end[base + 2], end[base + 3]),
        )

    f1_pp, f1_pm = col_end(4)
    f2_pp, f2_pm = col_end(8)
    b1_pp, b1_pm = col_end(12)
    b2_pp, b2_pm = col_end(16)

    phis = np.asarray(phis, dtype=float)
    refl = np.empty_like(phis)
    trans = np.empty_like(phis)
    for i, phi in enumerate(phis):
        wa = bc.probe_in * math.cos(phi)
        wb = -bc.probe_in * math.sin(phi)
        a_pm = wa * f1_pm + wb * f2_pm
        s1, s2 = _superpose_match(a_pm, b1_pm, b2_pm)
        pm0 = complex(s1, s2)
        pp_end = wa * f1_pp + wb * f2_pp + s1 * b1_pp + s2 * b2_pp
        refl[i] = abs(pm0) ** 2 / bc.probe_in**2
        trans[i] = abs(pp_end) ** 2 / bc.probe_in**2
    return refl, trans


def solve_forward_only(
    params: PhysicalParams,
    control_in: float = 0.4,
    probe_in: float = 1.0,
    options: SolverOptions | None = None,
) -> ForwardSolution:
    """Forward control and probe only (no retroreflection, no grating).

    With the backward control absent the medium is a plain saturated
    absorber; the probe still couples through its conjugate, which turns
    the relative phase phi_probe + phi - phi_control into a slow flow
    toward the attracting value pi - phi_l.
    """
    if control_in <= 0.0:
        raise ConfigError("control_in must be positive")
    if probe_in <= 0.0:
        raise ConfigError("probe_in must be positive")
    options = options if options is not None else SolverOptions()

    def rhs(x: float, s: np.ndarray) -> list[float]:
        cp = complex(s[0], s[1])
        pp = complex(s[2], s[3])
        gc = coupling_coefficients(params, cp, 0.0)
        al = params.alpha0_L
        dcp = -al * gc.cbar_0 * cp
        dpp = -al * cmath.exp(2j * params.phi) * gc.c_plus * pp.conjugate()
        return [dcp.real, dcp.imag, dpp.real, dpp.imag]

    grid = np.linspace(0.0, 1.0, options.grid_points)
    sol = _integrate(rhs, [control_in, 0.0, probe_in, 0.0], options, t_eval=grid)
    cp = sol.y[0] + 1j * sol.y[1]
    pp = sol.y[2] + 1j * sol.y[3]
    dephasing = (
        _unwrapped_phase(pp) + params.phi - _unwrapped_phase(cp)
    )
    return ForwardSolution(
        params=params, y=grid, control_plus=cp, probe_plus=pp, dephasing=dephasing
    )


def analytic_dephasing(params: PhysicalParams, y: np.ndarray) -> np.ndarray:
    """Closed-form dephasing flow for an unsaturated forward-only medium.

    Continuous in y and in phi; at phi = 0 mod pi the flow sits on a
    fixed point and the expression returns that constant branch.  For
    large depth every other phase is drawn to pi - phi_l.
    """
    y = np.asarray(y, dtype=float)
    phi_l = params.phi_l
    s_phi = math.sin(params.phi)
    decay = np.exp(-2.0 * params.alpha0_L * y * math.sin(phi_l) ** 2)
    num = math.sin(phi_l) * s_phi
    den = math.sin(phi_l + params.phi) * decay - math.cos(phi_l) * s_phi
    out = np.arctan2(num, den)
    # keep the y = 0 branch equal to phi itself, not its principal value
    shift = params.phi - math.atan2(
        num, math.sin(phi_l + params.phi) - math.cos(phi_l) * s_phi
    )
    return out + shift


def scattering_from_config(
    params: PhysicalParams,
    bc: BoundaryConditions,
    options: SolverOptions,
) -> ScatteringResult:
    """Convenience wrapper used by the command line front end."""
    return solve_scattering(params, bc, options)
