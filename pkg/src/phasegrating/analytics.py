"""Small-depth closed forms for the probe response.

With the control treated as uniform and the coupling mild, the probe
envelopes integrate in closed form; transmission becomes a sinusoid in
the doubled relative phase, reflection its scaled copy.  These are the
dashed comparison curves plotted against the full solver, and the
handles for reasoning about phase control: the detuning only shifts the
sinusoid by phi_l.
"""

from __future__ import annotations

import cmath
import math
from typing import TypedDict

import numpy as np

from .grating import GratingCoefficients


class EnvelopePair(TypedDict):
    omega_sigma_plus: np.ndarray
    omega_sigma_minus: np.ndarray


class ApproxRT(TypedDict):
    T: float
    R: float


class ApproxPhases(TypedDict):
    phi_sigma_plus: np.ndarray
    phi_sigma_minus: np.ndarray


def validity_indicator(alpha0_L: float, gc: GratingCoefficients) -> float:
    """max over j of |alpha0_L c_j|; the closed forms assume this is small."""
    return alpha0_L * max(abs(gc.c_plus), abs(gc.c_minus), abs(gc.c_plus_minus))


def small_od_envelopes(
    alpha0_L: float, gc: GratingCoefficients, phi: float, y: np.ndarray
) -> EnvelopePair:
    """First-order probe envelopes on y in [0, 1], normalised to entrance 1.

    The backward envelope keeps the next-order cross term; it vanishes at
    the exit by construction and grows essentially linearly toward the
    entrance, so its intensity is parabolic near y = 1.
    """
    y = np.asarray(y, dtype=float)
    e2 = cmath.exp(2j * phi)
    plus = 1.0 - alpha0_L * y * e2 * gc.c_plus
    back = (y - 1.0) * alpha0_L
    minus = back * e2 * (
        gc.c_plus_minus
        - back * np.conj(e2) * gc.c_plus_minus * np.conj(gc.c_plus)
    )
    return {"omega_sigma_plus": plus, "omega_sigma_minus": minus}


def approx_RT(
    alpha0_L: float, c_plus_abs: float, c_plus_minus_abs: float, phi_l: float, phi: float
) -> ApproxRT:
    """Sinusoidal transmission and its reflected copy.

    Inputs are entrance magnitudes; the entrance argument of c_plus is
    pinned to phi_l - pi/2, which is how the detuning shift enters.
    """
    if min(alpha0_L, c_plus_abs, c_plus_minus_abs) < 0.0:
        raise ValueError("magnitudes must be nonnegative")
    t_val = 1.0 - 2.0 * alpha0_L * c_plus_abs * math.sin(2.0 * phi + phi_l)
    r_val = (alpha0_L * c_plus_minus_abs) ** 2 * t_val
    return {"T": t_val, "R": r_val}


def approx_phases(
    alpha0_L: float, c_plus_abs: float, phi_l: float, phi: float, y: np.ndarray
) -> ApproxPhases:
    """Accumulated probe phases on y in [0, 1].

    The forward phase grows linearly from zero; the backward phase is
    pinned near pi - 2 phi by the conjugate coupling and drifts with the
    same slope.  Neither boundary fixes the backward phase, which is why
    its exit value is quoted as a limit.
    """
    y = np.asarray(y, dtype=float)
    slope = alpha0_L * c_plus_abs * math.cos(2.0 * phi + phi_l)
    plus = -slope * y
    minus = math.pi - 2.0 * phi + slope * (y - 1.0)
    return {"phi_sigma_plus": plus, "phi_sigma_minus": minus}
