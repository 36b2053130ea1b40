"""Canonical figure scenarios.

Each preset pins the medium, the boundary amplitudes, and what is swept
or plotted.  fig3/fig5 are phase sweeps of R and T at two depths, fig4
and fig6 the matching control profiles, fig7 the detuned sweep pair,
fig8/fig9 the probe profiles at three relative phases.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .model import PhysicalParams
from .propagation import BoundaryConditions

AMPLITUDES = BoundaryConditions(control_in=0.4, control_back=0.16, probe_in=1.0)
SWEEP_STEPS = 128


@dataclass(frozen=True)
class FigurePreset:
    name: str
    kind: str  # "sweep" | "profile" | "sweep_detuning" | "profile_phases"
    params: PhysicalParams
    bc: BoundaryConditions = AMPLITUDES
    detunings: tuple[float, ...] = ()
    phases: tuple[float, ...] = ()


PRESETS: dict[str, FigurePreset] = {
    "fig3": FigurePreset(
        name="fig3", kind="sweep", params=PhysicalParams(alpha0_L=0.3)
    ),
    "fig4": FigurePreset(
        name="fig4", kind="profile", params=PhysicalParams(alpha0_L=0.3)
    ),
    "fig5": FigurePreset(
        name="fig5", kind="sweep", params=PhysicalParams(alpha0_L=0.6)
    ),
    "fig6": FigurePreset(
        name="fig6", kind="profile", params=PhysicalParams(alpha0_L=0.6)
    ),
    "fig7": FigurePreset(
        name="fig7",
        kind="sweep_detuning",
        params=PhysicalParams(alpha0_L=0.3),
        detunings=(0.0, 2.0),
    ),
    "fig8": FigurePreset(
        name="fig8",
        kind="profile_phases",
        params=PhysicalParams(alpha0_L=0.6),
        phases=(0.0, math.pi / 4, math.pi / 2),
    ),
    "fig9": FigurePreset(
        name="fig9",
        kind="profile_phases",
        params=PhysicalParams(alpha0_L=0.6),
        phases=(0.0, math.pi / 4, math.pi / 2),
    ),
}
