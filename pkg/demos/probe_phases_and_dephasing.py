"""Accumulated probe phases and the slow dephasing flow.

At alpha0_L = 0.6 the forward probe picks up a phase only when the
interference condition is partly off (phi = pi/4 here), while the
backward probe leaves near pi - 2 phi.  The backward intensity dies
parabolically into its exit zero.  A second part integrates the weak
control dephasing equation and compares it with the closed form.
"""

import pathlib

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from phasegrating import (
    BoundaryConditions,
    PhysicalParams,
    analytic_dephasing,
    solve_control_bvp,
    solve_probe_bvp,
)
from phasegrating.oracles import dephasing_ode

bc = BoundaryConditions()

fig, axes = plt.subplots(1, 3, figsize=(10.5, 3.3))
for phi, color in zip((0.0, np.pi / 4.0, np.pi / 2.0), ("C0", "C1", "C2")):
    params = PhysicalParams(alpha0_L=0.6, phi=phi)
    result = solve_probe_bvp(solve_control_bvp(params, bc))
    prof = result.profile
    print(f"phi = {phi / np.pi:.2f} pi: R = {result.reflectivity:.5f}, "
          f"T = {result.transmissivity:.5f}, "
          f"forward exit phase {prof.phase_probe_plus[-1]:+.4f}, "
          f"backward entrance phase {prof.phase_probe_minus[0]:.4f}")
    label = rf"$\phi = {phi / np.pi:.2f}\pi$"
    axes[0].plot(prof.y, prof.phase_probe_plus, color, label=label)
    axes[1].plot(prof.y[:-1], prof.phase_probe_minus[:-1], color)
    axes[2].plot(prof.y, prof.intensity_probe_minus, color)

axes[0].set_ylabel(r"$\phi_\sigma^+(y)$")
axes[1].set_ylabel(r"$\phi_\sigma^-(y)$")
axes[2].set_ylabel(r"$|\Omega_\sigma^-|^2 / |\Omega_\sigma^+(0)|^2$")
for ax in axes:
    ax.set_xlabel("y / L")
axes[0].legend(fontsize=8)
fig.tight_layout()
out = pathlib.Path(__file__).with_suffix(".png")
fig.savefig(out, dpi=120)
print(f"wrote {out}")

# dephasing flow toward the attractor pi - phi_l, closed form vs ODE
params = PhysicalParams(alpha0_L=0.35, phi=0.6, delta0=0.8)
span = np.linspace(0.0, 10.0, 501)
closed = analytic_dephasing(params, span)
brute = dephasing_ode(params, span)
print(f"dephasing attractor pi - phi_l = {np.pi - params.phi_l:.6f}")
print(f"closed form end value {closed[-1]:.6f}, ODE end value {brute[-1]:.6f}, "
      f"max deviation {np.abs(closed - brute).max():.2e}")
