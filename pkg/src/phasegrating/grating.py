"""Saturation grating written by the control standing wave.

The counterpropagating control components interfere, so the local pi
intensity is modulated along y with period pi/k.  The saturation factor

    s(y) = b / (1 + a * cos(2ky + phi_r))

then acts as an amplitude grating for both the control itself and the
probe.  This module computes the modulation parameters (a, b) and the
Fourier harmonics of s and of the phase-carrying combination
s * exp(-2i phase(local pi field)), which feed the envelope equations as
coupling coefficients.

All harmonics have closed forms built from the ratio

    eta = (sqrt(1 - a^2) - 1) / a,       c_n = c_0 * eta^|n| * e^{i n phi_r}

and the analogous ratio eta' for the inverse-intensity grating, which
collapses to -|r| (|r| < 1) or -1/|r| (|r| > 1) with r the local
backward/forward control ratio.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import DegenerateField, NodeError
from .model import PhysicalParams

# |1 - |r|| below this is treated as a standing-wave node.
NODE_TOL = 1e-9


@dataclass(frozen=True)
class ModulationParams:
    """Grating shape at one position: s(zeta) = b / (1 + a cos(zeta + phi_r))."""

    a: float
    b: float
    a_p: float
    b_p: float
    phi_r: float
    r_abs: float


@dataclass(frozen=True)
class GratingCoefficients:
    """Harmonic and coupling coefficients of the grating at one position.

    cbar_0, cbar_1, cbar_m1 drive the control envelopes; c_plus,
    c_plus_minus, c_minus drive the probe pair (with the conjugate
    coupling).  beta, gamma_c, delta_c are the building blocks shared by
    the three probe coefficients.
    """

    eta: float
    eta_p: float
    c0: float
    c0_p: float
    beta: complex
    gamma_c: float
    delta_c: float
    c_plus: complex
    c_plus_minus: complex
    c_minus: complex
    cbar_0: complex
    cbar_1: complex
    cbar_m1: complex


def modulation_params(
    params: PhysicalParams, control_plus: complex, control_minus: complex
) -> ModulationParams:
    """Grating parameters from the two control envelopes at one position.

    Raises DegenerateField if the forward control vanishes and NodeError
    if |r| is within NODE_TOL of 1 (the standing wave develops a node and
    the inverse-intensity expansion diverges).
    """
    ip = abs(control_plus) ** 2
    if ip == 0.0:
        raise DegenerateField("forward control amplitude vanishes")
    r = control_minus / control_plus
    r_abs = abs(r)
    if abs(1.0 - r_abs) < NODE_TOL:
        raise NodeError()
    f0 = params.f0
    denom = 1.0 + f0 * ip * (1.0 + r_abs**2)
    a = 2.0 * f0 * ip * r_abs / denom
    b = 1.0 / denom
    a_p = 2.0 * r_abs / (1.0 + r_abs**2)
    b_p = 1.0 / (ip * (1.0 + r_abs**2))
    # r = |r| e^{-i phi_r} under the phase convention Omega = |Omega| e^{-i phi}
    phi_r = -cmath.phase(r) if r_abs > 0.0 else 0.0
    return ModulationParams(a=a, b=b, a_p=a_p, b_p=b_p, phi_r=phi_r, r_abs=r_abs)


def modulation_ratio(a: float) -> float:
    """Harmonic ratio eta(a) = (sqrt(1 - a^2) - 1) / a for |a| < 1.

    Series branch for small a avoids the 0/0 cancellation.
    """
    if abs(a) >= 1.0:
        raise NodeError(message="modulation depth |a| >= 1")
    if abs(a) < 1e-6:
        return -0.5 * a - 0.125 * a**3
    return (math.sqrt(1.0 - a * a) - 1.0) / a


def harmonic_coefficient(mp: ModulationParams, n: int) -> complex:
    """Fourier coefficient c_n of s(zeta), any integer n."""
    eta = modulation_ratio(mp.a)
    c0 = mp.b / math.sqrt(1.0 - mp.a**2)
    return c0 * eta ** abs(n) * cmath.exp(1j * n * mp.phi_r)


def inverse_intensity_harmonic(mp: ModulationParams, n: int) -> complex:
    """Fourier coefficient c'_n of 1 / |local pi Rabi|^2.

    Uses the exact collapse eta' = -min(|r|, 1/|r|) rather than the
    generic eta(a') expression, which cancels badly as |r| -> 1.
    """
    r = mp.r_abs
    eta_p = -r if r <= 1.0 else -1.0 / r
    c0_p = mp.b_p / math.sqrt(1.0 - mp.a_p**2)
    return c0_p * eta_p ** abs(n) * cmath.exp(1j * n * mp.phi_r)


def coupling_coefficients(
    params: PhysicalParams, control_plus: complex, control_minus: complex
) -> GratingCoefficients:
    """All envelope coupling coefficients at one position.

    The probe coefficients come from the harmonics of the product
    s * exp(-2i phase(local pi field)); the closed forms below express
    those through eta, eta' and the boundary ratio r.  The control
    coefficients are the plain s harmonics times the complex Lorentzian
    gamma_d / (gamma_d + i Delta_0).
    """
    mp = modulation_params(params, control_plus, control_minus)
    r = control_minus / control_plus
    r_abs = mp.r_abs

    eta = modulation_ratio(mp.a)
    eta_p = -r_abs if r_abs <= 1.0 else -1.0 / r_abs
    c0 = mp.b / math.sqrt(1.0 - mp.a**2)
    one_minus_rr = abs(1.0 - r_abs**2)
    c0_p = 1.0 / (abs(control_plus) ** 2 * one_minus_rr)

    lorentz = params.gamma_d / complex(params.gamma_d, params.delta0)
    # e^{-2i phase(control_plus)} with phase(Omega) = -arg(Omega)
    unit = control_plus / abs(control_plus)
    phase_sq = unit * unit

    gamma_c = eta + eta_p
    ee = eta * eta_p
    delta_c = eta**2 + eta_p**2 + ee - ee**2
    beta = c0 * phase_sq * lorentz / ((1.0 - ee) * one_minus_rr)

    if r_abs == 0.0:
        c_plus = beta
        c_plus_minus = 0.0 + 0.0j
        c_minus = 0.0 + 0.0j
        cbar_1 = 0.0 + 0.0j
        cbar_m1 = 0.0 + 0.0j
    else:
        c_plus = beta * (1.0 + 2.0 * gamma_c * r_abs + delta_c * r_abs**2)
        c_plus_minus = beta * r * (2.0 + gamma_c / r_abs + gamma_c * r_abs)
        c_minus = beta * r * r * (1.0 + 2.0 * gamma_c / r_abs + delta_c / r_abs**2)
        phase_r = r.conjugate() / r_abs  # e^{+i phi_r}
        cbar_1 = lorentz * c0 * eta * phase_r
        cbar_m1 = lorentz * c0 * eta / phase_r
    cbar_0 = lorentz * c0

    return GratingCoefficients(
        eta=eta,
        eta_p=eta_p,
        c0=c0,
        c0_p=c0_p,
        beta=beta,
        gamma_c=gamma_c,
        delta_c=delta_c,
        c_plus=c_plus,
        c_plus_minus=c_plus_minus,
        c_minus=c_minus,
        cbar_0=cbar_0,
        cbar_1=cbar_1,
        cbar_m1=cbar_m1,
    )


def coherence_harmonics(
    params: PhysicalParams,
    gc: GratingCoefficients,
    control_plus: complex,
    control_minus: complex,
    probe_plus: complex,
    probe_minus: complex,
) -> dict[str, complex]:
    """Phase-matched harmonics of the two radiating coherences.

    Returns rho_pi^(0), rho_pi^(-1) (sources of the forward/backward
    control) and rho_sigma^(0), rho_sigma^(-1) (sources of the
    forward/backward probe).
    """
    pref = 1j / params.gamma_d
    e_phi = cmath.exp(1j * params.phi)
    return {
        "rho_pi_0": pref * (gc.cbar_0 * control_plus + gc.cbar_1 * control_minus),
        "rho_pi_m1": pref * (gc.cbar_m1 * control_plus + gc.cbar_0 * control_minus),
        "rho_sigma_0": pref
        * e_phi
        * (gc.c_plus * probe_plus.conjugate() + gc.c_plus_minus * probe_minus.conjugate()),
        "rho_sigma_m1": pref
        * e_phi
        * (gc.c_plus_minus * probe_plus.conjugate() + gc.c_minus * probe_minus.conjugate()),
    }
