"""Independent cross-checks for the closed-form machinery.

Every nontrivial closed form in this package has a second, dumber route to
the same number, built on different machinery:

* the stationary coherences of the model module are recomputed here from the
  full four-level master equation (dense Liouvillian, null-space solve);
* the grating harmonics of the grating module are recomputed by direct
  numerical quadrature of the modulated profiles;
* the probe dephasing closed form of the propagation module is recomputed by
  integrating the phase equation of motion.

The production code never calls into this module; it exists so the test
suite can compare the two routes.  Keep it that way: collapsing the routes
would make the tests circular.
"""

import cmath
import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad, solve_ivp

from .errors import ConfigError, SingularLiouvillian
from .model import PhysicalParams

__all__ = [
    "DensityMatrix4",
    "bloch_steady_state",
    "fourier_quadrature",
    "product_harmonic_quadrature",
    "dephasing_ode",
]

# basis ordering: (a, b) ground m = -1/2, +1/2; (c, d) excited m = -1/2, +1/2
_A, _B, _C, _D = 0, 1, 2, 3


@dataclass(frozen=True)
class DensityMatrix4:
    """Steady-state density matrix over (a, b, c, d) with derived observables."""

    rho: np.ndarray  # (4, 4) complex, trace normalised

    @property
    def populations(self) -> np.ndarray:
        return self.rho.diagonal().real.copy()

    @property
    def n_ground(self) -> float:
        return float(self.rho[_A, _A].real + self.rho[_B, _B].real)

    @property
    def n_excited(self) -> float:
        return float(self.rho[_C, _C].real + self.rho[_D, _D].real)

    @property
    def rho_pi(self) -> complex:
        """Coherence radiating the pi polarisation.

        The two pi transitions are driven in antiphase, so their coherences
        contribute with opposite signs: rho_pi = rho_ca - rho_db.
        """
        return complex(self.rho[_C, _A] - self.rho[_D, _B])

    @property
    def rho_sigma(self) -> complex:
        """Coherence radiating the sigma polarisation: rho_cb + rho_da."""
        return complex(self.rho[_C, _B] + self.rho[_D, _A])

    @property
    def rho_zeeman(self) -> complex:
        """Combined Zeeman coherence rho_ab + rho_cd."""
        return complex(self.rho[_A, _B] + self.rho[_C, _D])

    @property
    def rho_excited_zeeman(self) -> complex:
        """Excited Zeeman coherence rho_cd (vanishes in every steady state)."""
        return complex(self.rho[_C, _D])


def _hamiltonian(params: PhysicalParams, omega_pi: complex, omega_sigma: complex) -> np.ndarray:
    """Rotating-frame Hamiltonian of the four-level scheme.

    The pi couplings to the two sublevel pairs carry opposite signs; the
    sigma couplings are equal and carry the relative phase phi.
    """
    op = complex(omega_pi)
    os_ = complex(omega_sigma) * cmath.exp(-1j * params.phi)
    d0 = params.delta0
    return np.array(
        [
            [0.0, 0.0, -op.conjugate(), -os_.conjugate()],
            [0.0, 0.0, -os_.conjugate(), op.conjugate()],
            [-op, -os_, d0, 0.0],
            [-os_, op, 0.0, d0],
        ],
        dtype=complex,
    )


def _liouvillian(params: PhysicalParams, omega_pi: complex, omega_sigma: complex) -> np.ndarray:
    """Dense generator M with d(vec rho)/dt = M vec(rho), row-major vec."""
    h = _hamiltonian(params, omega_pi, omega_sigma)
    eye = np.eye(4)
    m = -1j * (np.kron(h, eye) - np.kron(eye, h.T))

    def idx(i: int, j: int) -> int:
        return 4 * i + j

    g, gd, gze = params.gamma, params.gamma_d, params.gamma_ze
    decay = np.zeros((4, 4))
    decay[_C, _C] = decay[_D, _D] = g
    for gnd in (_A, _B):
        for exc in (_C, _D):
            decay[gnd, exc] = decay[exc, gnd] = gd
    decay[_C, _D] = decay[_D, _C] = gze
    for i in range(4):
        for j in range(4):
            m[idx(i, j), idx(i, j)] -= decay[i, j]

    # spontaneous feeding, each excited state branching half-half into the
    # two ground states (pi and sigma emission channels of the closed line)
    half = 0.5 * g
    m[idx(_A, _A), idx(_C, _C)] += half
    m[idx(_B, _B), idx(_D, _D)] += half
    m[idx(_B, _B), idx(_C, _C)] += half
    m[idx(_A, _A), idx(_D, _D)] += half
    # the two pi emission branches share a photon mode and interfere with
    # opposite amplitudes, feeding the ground Zeeman coherence from the
    # excited one (irrelevant once rho_cd settles to zero, kept for honesty)
    m[idx(_A, _B), idx(_C, _D)] -= half
    m[idx(_B, _A), idx(_D, _C)] -= half
    return m


def bloch_steady_state(
    params: PhysicalParams, omega_pi: complex, omega_sigma: complex
) -> DensityMatrix4:
    """Steady state of the four-level master equation at a point.

    ``omega_pi`` and ``omega_sigma`` are the total local Rabi envelopes
    (standing-wave structure already summed in).  The null space of the
    Liouvillian is extracted by SVD; a null space of dimension > 1 (for
    example with both fields off, where any ground-state mixture is
    stationary) raises SingularLiouvillian.
    """
    m = _liouvillian(params, omega_pi, omega_sigma)
    _, svals, vh = np.linalg.svd(m)
    scale = svals[0]
    if svals[-2] <= 1e-10 * scale:
        raise SingularLiouvillian(
            "steady state not unique; second singular value "
            f"{svals[-2]:.3e} vs largest {scale:.3e}"
        )
    rho = vh[-1].conj().reshape(4, 4)
    rho = rho / np.trace(rho)
    return DensityMatrix4(rho=rho)


def fourier_quadrature(a: float, b: float, phi_r: float, n: int) -> complex:
    """Harmonic of the modulated profile b/(1 + a*cos(zeta + phi_r)).

    Returns (1/2pi) * integral over one period of the profile times
    exp(-i*n*zeta).  Absolute quadrature error is held below 1e-10 so the
    result can be compared against the geometric closed form at 1e-8.
    """
    if not abs(a) < 1.0:
        raise ConfigError("modulation depth |a| must be < 1 for an integrable profile")

    def profile(zeta: float) -> float:
        return b / (1.0 + a * math.cos(zeta + phi_r))

    re, re_err = quad(
        lambda z: profile(z) * math.cos(n * z), 0.0, 2.0 * math.pi,
        epsabs=1e-12, epsrel=1e-12, limit=200,
    )
    im, im_err = quad(
        lambda z: -profile(z) * math.sin(n * z), 0.0, 2.0 * math.pi,
        epsabs=1e-12, epsrel=1e-12, limit=200,
    )
    if re_err + im_err > 1e-10:
        raise ConfigError(f"quadrature error {re_err + im_err:.2e} above budget")
    return complex(re, im) / (2.0 * math.pi)


def product_harmonic_quadrature(
    f0: float, omega_pi_plus: complex, r: complex, n: int
) -> complex:
    """Harmonic of the full probe-coupling profile, straight from the fields.

    The probe sources respond to s(zeta) * Omega_pi(zeta)^2/|Omega_pi(zeta)|^2
    with Omega_pi(zeta) = omega_pi_plus * (1 + r*exp(-i*zeta)) and
    s = 1/(1 + f0*|Omega_pi|^2).  No factorisation into separate gratings is
    used here, which makes this an independent check on the closed-form
    coupling coefficients assembled by the grating module.
    """
    if abs(omega_pi_plus) == 0.0:
        raise ConfigError("forward control must not vanish")
    if abs(abs(r) - 1.0) < 1e-12:
        raise ConfigError("|r| = 1 puts a node in the control standing wave")

    def value(zeta: float) -> complex:
        local = omega_pi_plus * (1.0 + r * cmath.exp(-1j * zeta))
        intensity = abs(local) ** 2
        return (local * local / intensity) / (1.0 + f0 * intensity)

    re, re_err = quad(
        lambda z: (value(z) * cmath.exp(-1j * n * z)).real, 0.0, 2.0 * math.pi,
        epsabs=1e-12, epsrel=1e-12, limit=400,
    )
    im, im_err = quad(
        lambda z: (value(z) * cmath.exp(-1j * n * z)).imag, 0.0, 2.0 * math.pi,
        epsabs=1e-12, epsrel=1e-12, limit=400,
    )
    if re_err + im_err > 1e-10:
        raise ConfigError(f"quadrature error {re_err + im_err:.2e} above budget")
    return complex(re, im) / (2.0 * math.pi)


def dephasing_ode(params: PhysicalParams, y: np.ndarray) -> np.ndarray:
    """Probe-control dephasing by integrating its equation of motion.

    Weak-control limit (saturation factor 1).  The dephasing v between the
    phase-shifted probe envelope and the control obeys

        dv/dy = 2*alpha0 * sin(phi_l) * sin(v) * sin(v + phi_l),

    integrated here from v(0) = phi on the requested grid of y/L values.
    The closed form in the propagation module must match this at 1e-8.
    """
    y = np.asarray(y, dtype=float)
    phi_l = params.phi_l
    two_a = 2.0 * params.alpha0_L * math.sin(phi_l)

    def rhs(_x: float, v: np.ndarray) -> np.ndarray:
        return two_a * np.sin(v) * np.sin(v + phi_l)

    sol = solve_ivp(
        rhs,
        (float(y[0]), float(y[-1])),
        [params.phi],
        method="RK45",
        rtol=1e-12,
        atol=1e-14,
        dense_output=True,
    )
    if not sol.success:
        raise ConfigError(f"dephasing integration failed: {sol.message}")
    return sol.sol(y)[0]
