"""
Saturated response of the driven four-level medium
==================================================

The atomic response seen by the probe is a linear susceptibility scaled
by the saturation factor s = 1/(1 + F0 |Omega_pi|^2) and rotated by twice
the control-probe relative phase.  This script walks the intensity axis,
then spot-checks the closed-form coherences against the brute-force
steady state of the full master equation.
"""

import pathlib

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from phasegrating import (
    PhysicalParams,
    saturation,
    steady_coherences_full,
    susceptibilities,
)
from phasegrating.oracles import bloch_steady_state

params = PhysicalParams()
print(f"F0 = {params.f0:.4f}, phi_l on resonance = {params.phi_l:.4f} rad")

# saturation vs control intensity
intensity = np.linspace(0.0, 2.0, 400)
s_curve = np.array([saturation(params, i).s for i in intensity])
print(f"s(0.16) = {saturation(params, 0.16).s:.6f}  (the stock control intensity)")

# the susceptibility phase is what the relative phase phi steers
detuned = PhysicalParams(delta0=2.0)
chi = susceptibilities(detuned, saturation(detuned, 0.16).s)
print(f"detuned chi_lin = {chi.chi_lin:.4f}, phi_l = {chi.phi_l:.4f} rad")

# closed form against the Liouvillian null space, one arbitrary point
om_pi, om_sigma = 0.31 - 0.12j, 0.02 + 0.05j
pair = steady_coherences_full(params, om_pi, om_sigma)
dm = bloch_steady_state(params, om_pi, om_sigma)
print(f"rho_pi closed form  {pair.rho_pi:.10f}")
print(f"rho_pi master eq    {dm.rho_pi:.10f}")
print(f"deviation {abs(pair.rho_pi - dm.rho_pi):.2e}, "
      f"excited Zeeman coherence {abs(dm.rho_excited_zeeman):.2e}")

fig, (ax0, ax1) = plt.subplots(1, 2, figsize=(9, 3.4))
ax0.plot(intensity, s_curve)
ax0.set_xlabel(r"$|\Omega_\pi|^2/\gamma_d^2$")
ax0.set_ylabel("saturation factor s")

deltas = np.linspace(-4.0, 4.0, 400)
phis_l = [PhysicalParams(delta0=d).phi_l for d in deltas]
ax1.plot(deltas, phis_l)
ax1.axhline(np.pi / 2, ls=":", lw=0.8)
ax1.set_xlabel(r"$\Delta_0/\gamma_d$")
ax1.set_ylabel(r"$\phi_L$ [rad]")

fig.tight_layout()
out = pathlib.Path(__file__).with_suffix(".png")
fig.savefig(out, dpi=120)
print(f"wrote {out}")
