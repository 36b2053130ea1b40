"""Probe scattering off a standing-wave saturation grating.

A linearly polarised control standing wave imprints a spatial modulation
on a four-level medium; a weak cross-polarised probe Bragg-scatters off
that modulation with reflectivity and transmission controlled by the
probe-control relative phase.  The package solves the coupled envelope
equations exactly (shooting BVP) and carries the small-depth closed
forms alongside, plus independent oracles used only for validation.
"""

from .analytics import (
    approx_RT,
    approx_phases,
    small_od_envelopes,
    validity_indicator,
)
from .errors import (
    ConfigError,
    DegenerateField,
    NodeError,
    NoConvergence,
    SimulationError,
    SingularLiouvillian,
    SingularSystem,
)
from .grating import (
    GratingCoefficients,
    ModulationParams,
    coherence_harmonics,
    coupling_coefficients,
    harmonic_coefficient,
    inverse_intensity_harmonic,
    modulation_params,
    modulation_ratio,
)
from .model import (
    CoherencePair,
    PhysicalParams,
    Saturation,
    Susceptibilities,
    saturation,
    steady_coherences_full,
    steady_coherences_perturbative,
    susceptibilities,
)
from .propagation import (
    BoundaryConditions,
    ControlSolution,
    FieldProfile,
    ForwardSolution,
    ScatteringResult,
    SolverOptions,
    analytic_dephasing,
    control_rhs,
    phase_sweep,
    probe_rhs,
    solve_control_bvp,
    solve_forward_only,
    solve_probe_bvp,
    solve_scattering,
)

__version__ = "0.1.0"
