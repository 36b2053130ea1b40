"""Harmonics of the standing-wave saturation grating.

A retro-reflected control writes a spatial modulation s(zeta) =
b / (1 + a cos(zeta + phi_r)) into the medium.  Its Fourier ladder decays
geometrically with the ratio eta(a), and the inverse-intensity ladder
collapses to the exact ratio eta' = -min(|r|, 1/|r|).  The script prints
both ladders and then shows how the probe coupling coefficients grow with
the retro-reflection.
"""

import pathlib

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from phasegrating import (
    PhysicalParams,
    coupling_coefficients,
    harmonic_coefficient,
    modulation_params,
)

params = PhysicalParams()
cp = 0.4 + 0.0j

mp = modulation_params(params, cp, 0.3536 * cp)
print(f"modulation depth a = {mp.a:.6f}, offset b = {mp.b:.6f}, "
      f"phi_r = {mp.phi_r:.3f}")
for n in range(5):
    print(f"  c_{n} = {harmonic_coefficient(mp, n):+.6f}")

# reconstruction: the ladder really is the function
zeta = np.linspace(0.0, 2.0 * np.pi, 721)
series = sum(
    harmonic_coefficient(mp, n) * np.exp(1j * n * zeta) for n in range(-24, 25)
)
direct = mp.b / (1.0 + mp.a * np.cos(zeta + mp.phi_r))
print(f"24-term reconstruction error {np.abs(series - direct).max():.2e}")

# coupling coefficients vs the retro-reflection amplitude
ratios = np.linspace(0.0, 0.8, 81)
mags = np.empty((3, ratios.size))
for k, r in enumerate(ratios):
    gc = coupling_coefficients(params, cp, r * cp)
    mags[:, k] = np.abs([gc.c_plus, gc.c_plus_minus, gc.c_minus])

fig, ax = plt.subplots(figsize=(5.2, 3.6))
for row, label in zip(mags, (r"$|c_+|$", r"$|c_{+-}|$", r"$|c_-|$")):
    ax.plot(ratios, row, label=label)
ax.set_xlabel("|r| at the entrance")
ax.set_ylabel("coupling magnitude")
ax.legend()
fig.tight_layout()
out = pathlib.Path(__file__).with_suffix(".png")
fig.savefig(out, dpi=120)
print(f"wrote {out}")
