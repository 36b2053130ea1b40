"""Local steady-state response of a duplicated two-level medium.

The atom has two ground sublevels (a, b) and two excited sublevels (c, d)
sharing a common detuning delta0.  A linearly polarised control field drives
the two pi transitions with Rabi envelope Omega_pi; the key feature of the
level scheme is that the two pi couplings carry opposite signs, so the medium
behaves as two two-level systems driven in antiphase.  A weak probe of the
orthogonal linear polarisation drives the sigma transitions with envelope
Omega_sigma and is offset from the control by a relative phase phi.

Everything here is local: given the total complex Rabi envelopes at a point,
these routines return the stationary optical coherences and the equivalent
susceptibilities.  Spatial structure (standing-wave modulation, propagation)
is layered on top by the grating and propagation modules.

Units and conventions
---------------------
Rates and detunings are quoted in units of the optical coherence decay
gamma_d, lengths in units of the sample thickness L.  The susceptibilities
drop a common real prefactor so that chi_lin = 1/(-i*gamma_d + delta0); with
this choice rho_pi = chi_sat * Omega_pi holds with no extra constants and the
propagation equations close with the single dimensionless knob alpha0_L.

Complex envelopes are written Omega = |Omega| * exp(-i*phase): a growing
phase in the tables below means retardation.
"""

import cmath
import math
from dataclasses import dataclass
from typing import NamedTuple

from .errors import ConfigError, DegenerateField

__all__ = [
    "PhysicalParams",
    "Saturation",
    "Susceptibilities",
    "CoherencePair",
    "saturation",
    "susceptibilities",
    "steady_coherences_full",
    "steady_coherences_perturbative",
]


@dataclass(frozen=True)
class PhysicalParams:
    """Medium and drive parameters, in units of the coherence decay rate.

    Defaults encode the radiative limit of the closed four-level scheme:
    gamma = 2*gamma_d (population decay twice the coherence decay) and
    gamma_ze = gamma for the excited Zeeman coherence.
    """

    gamma: float = 2.0      # excited-state population decay
    gamma_d: float = 1.0    # optical coherence decay; sets the frequency unit
    gamma_ze: float = 2.0   # excited Zeeman coherence decay
    delta0: float = 0.0     # common one-photon detuning
    alpha0_L: float = 0.3   # resonant absorption depth of the sample
    phi: float = 0.0        # probe-control relative phase

    def __post_init__(self):
        if self.gamma <= 0.0 or self.gamma_d <= 0.0 or self.gamma_ze <= 0.0:
            raise ConfigError("decay rates gamma, gamma_d, gamma_ze must be positive")
        if self.alpha0_L < 0.0:
            raise ConfigError("alpha0_L must be non-negative")

    @property
    def phi_l(self) -> float:
        """Phase of the linear susceptibility: tan(phi_l) = gamma_d/delta0.

        Computed as atan2(gamma_d, delta0) so that phi_l stays in (0, pi)
        and crosses pi/2 exactly on resonance.
        """
        return math.atan2(self.gamma_d, self.delta0)

    @property
    def f0(self) -> float:
        """Saturation prefactor 4*gamma_d / (gamma * (gamma_d**2 + delta0**2))."""
        return 4.0 * self.gamma_d / (self.gamma * (self.gamma_d**2 + self.delta0**2))


class Saturation(NamedTuple):
    f0: float
    s: float


@dataclass(frozen=True)
class Susceptibilities:
    """Equivalent susceptibilities of the driven medium (common prefactor dropped)."""

    chi_lin: complex   # linear response 1/(-i*gamma_d + delta0)
    chi_sat: complex   # chi_lin reduced by the saturation factor s
    chi_eff: complex   # chi_sat rotated by exp(2i*phi); drives the probe
    phi_l: float
    s: float
    f0: float


@dataclass(frozen=True)
class CoherencePair:
    """Stationary optical coherences radiating the pi and sigma fields."""

    rho_pi: complex
    rho_sigma: complex


def saturation(params: PhysicalParams, omega_pi_sq: float) -> Saturation:
    """Saturation factor s = 1/(1 + f0*|Omega_pi|^2) for a control intensity.

    ``omega_pi_sq`` is the local control intensity |Omega_pi|^2 in units of
    gamma_d**2.
    """
    if omega_pi_sq < 0.0:
        raise ConfigError("control intensity |Omega_pi|^2 must be non-negative")
    f0 = params.f0
    return Saturation(f0, 1.0 / (1.0 + f0 * omega_pi_sq))


def susceptibilities(params: PhysicalParams, s: float) -> Susceptibilities:
    """Bundle chi_lin, chi_sat = s*chi_lin and chi_eff = chi_sat*exp(2i*phi)."""
    chi_lin = 1.0 / complex(params.delta0, -params.gamma_d)
    chi_sat = chi_lin * s
    chi_eff = chi_sat * cmath.exp(2j * params.phi)
    return Susceptibilities(
        chi_lin=chi_lin,
        chi_sat=chi_sat,
        chi_eff=chi_eff,
        phi_l=params.phi_l,
        s=s,
        f0=params.f0,
    )


def steady_coherences_full(
    params: PhysicalParams, omega_pi: complex, omega_sigma: complex
) -> CoherencePair:
    """Exact stationary coherences for arbitrary field strengths.

    Both coherences share the combination q = Omega_pi^2 +
    Omega_sigma^2*exp(-2i*phi); the probe enters the denominator on the same
    footing as the control, so this result holds beyond the weak-probe
    regime.  Raises DegenerateField when both envelopes vanish (the
    stationary state is then not unique and no coherence is defined).
    """
    abs_pi_sq = abs(omega_pi) ** 2
    abs_sigma_sq = abs(omega_sigma) ** 2
    if abs_pi_sq == 0.0 and abs_sigma_sq == 0.0:
        raise DegenerateField("both fields vanish; stationary coherences undefined")
    gd, d0 = params.gamma_d, params.delta0
    q = omega_pi * omega_pi + omega_sigma * omega_sigma * cmath.exp(-2j * params.phi)
    numerator = q * complex(d0, gd)
    denominator = (
        4.0 * gd / params.gamma * abs(q) ** 2
        + (abs_pi_sq + abs_sigma_sq) * (gd**2 + d0**2)
    )
    rho_pi = numerator * omega_pi.conjugate() / denominator
    rho_sigma = (
        numerator * omega_sigma.conjugate() * cmath.exp(1j * params.phi) / denominator
    )
    return CoherencePair(rho_pi=rho_pi, rho_sigma=rho_sigma)


def steady_coherences_perturbative(
    params: PhysicalParams, omega_pi: complex, omega_sigma: complex
) -> CoherencePair:
    """Stationary coherences to leading order in the weak probe.

    The control saturates the medium (factor s); the probe response picks up
    the conjugate envelope and the doubled control phase:

        rho_pi    = chi_sat * Omega_pi
        rho_sigma = chi_eff * (Omega_pi^2/|Omega_pi|^2)
                    * conj(Omega_sigma) * exp(-i*phi)

    Raises DegenerateField when the control vanishes; the perturbative
    expansion has no leading term to expand around in that case.
    """
    abs_pi_sq = abs(omega_pi) ** 2
    if abs_pi_sq == 0.0:
        raise DegenerateField("perturbative coherences need a non-vanishing control")
    chi = susceptibilities(params, saturation(params, abs_pi_sq).s)
    rho_pi = chi.chi_sat * omega_pi
    rho_sigma = (
        chi.chi_eff
        * (omega_pi * omega_pi / abs_pi_sq)
        * omega_sigma.conjugate()
        * cmath.exp(-1j * params.phi)
    )
    return CoherencePair(rho_pi=rho_pi, rho_sigma=rho_sigma)
