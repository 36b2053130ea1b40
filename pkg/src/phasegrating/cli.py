"""Command line front end.

Subcommands
-----------
propagate       one full solve, field-profile CSV
sweep           1-D sweep over phi, delta0 or alpha0_L, summary CSV
figure NAME     canned scenarios fig3..fig9
coefficients    grating coupling coefficients along y
oracle NAME     independent validation report (bloch | fourier | dephasing)

Configuration is a flat ``key = value`` text file; flags win over file
values.  Output is CSV with full-precision decimals so reruns diff
clean.  Figure phase sweeps cover [0, 2*pi) with the endpoint excluded;
the generic sweep subcommand includes both endpoints.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, fields
from typing import Iterable, Sequence, TextIO

import numpy as np

from . import oracles
from .analytics import approx_RT, validity_indicator
from .errors import ConfigError, NodeError, NoConvergence, SimulationError
from .grating import (
    coupling_coefficients,
    harmonic_coefficient,
    inverse_intensity_harmonic,
    modulation_params,
)
from .model import PhysicalParams, steady_coherences_full
from .presets import PRESETS, SWEEP_STEPS, FigurePreset
from .propagation import (
    BoundaryConditions,
    ScatteringResult,
    SolverOptions,
    analytic_dephasing,
    phase_sweep,
    solve_control_bvp,
    solve_scattering,
)

SWEEP_VARIABLES = ("phi", "delta0", "alpha0_L")

EXIT_CONFIG = 2
EXIT_NO_CONVERGENCE = 3
EXIT_NODE = 4


@dataclass
class RunConfig:
    """One run: medium, boundary amplitudes, solver knobs, optional sweep."""

    gamma: float = 2.0
    gamma_d: float = 1.0
    gamma_ze: float = 2.0
    delta0: float = 0.0
    alpha0_L: float = 0.3
    phi: float = 0.0
    omega_pi_plus_in: float = 0.4
    omega_pi_minus_in: float = 0.16
    omega_sigma_plus_in: float = 1.0
    grid_points: int = 2001
    ode_rel_tol: float = 1e-10
    shoot_tol: float = 1e-10
    max_newton_iter: int = 50
    sweep_variable: str | None = None
    sweep_from: float | None = None
    sweep_to: float | None = None
    sweep_steps: int | None = None

    def validate(self) -> None:
        if self.grid_points < 64:
            raise ConfigError("grid_points must be at least 64")
        if self.ode_rel_tol <= 0.0 or self.shoot_tol <= 0.0:
            raise ConfigError("tolerances must be positive")
        if self.max_newton_iter < 1:
            raise ConfigError("max_newton_iter must be at least 1")
        sweep_keys = (self.sweep_variable, self.sweep_from, self.sweep_to, self.sweep_steps)
        if any(k is not None for k in sweep_keys):
            if any(k is None for k in sweep_keys):
                raise ConfigError(
                    "sweep needs all of sweep_variable, sweep_from, sweep_to, sweep_steps"
                )
            if self.sweep_variable not in SWEEP_VARIABLES:
                raise ConfigError(
                    f"sweep_variable must be one of {', '.join(SWEEP_VARIABLES)}"
                )
            if self.sweep_steps < 2:
                raise ConfigError("sweep_steps must be at least 2")
            if not (math.isfinite(self.sweep_from) and math.isfinite(self.sweep_to)):
                raise ConfigError("sweep bounds must be finite")
        # constructing the domain objects runs their own validation too
        self.physical_params()
        self.boundary()

    def physical_params(self) -> PhysicalParams:
        return PhysicalParams(
            gamma=self.gamma,
            gamma_d=self.gamma_d,
            gamma_ze=self.gamma_ze,
            delta0=self.delta0,
            alpha0_L=self.alpha0_L,
            phi=self.phi,
        )

    def boundary(self) -> BoundaryConditions:
        return BoundaryConditions(
            control_in=self.omega_pi_plus_in,
            control_back=self.omega_pi_minus_in,
            probe_in=self.omega_sigma_plus_in,
        )

    def solver_options(self) -> SolverOptions:
        return SolverOptions(
            grid_points=self.grid_points,
            ode_rel_tol=self.ode_rel_tol,
            ode_abs_tol=min(1e-12, self.ode_rel_tol),
            shoot_tol=self.shoot_tol,
            max_newton_iter=self.max_newton_iter,
        )

    def to_text(self) -> str:
        lines = []
        for f in fields(self):
            value = getattr(self, f.name)
            if value is None:
                continue
            lines.append(f"{f.name} = {value!r}")
        return "\n".join(lines) + "\n"


_INT_KEYS = {"grid_points", "max_newton_iter", "sweep_steps"}
_STR_KEYS = {"sweep_variable"}
_ALL_KEYS = {f.name for f in fields(RunConfig)}


def _assign(config: RunConfig, key: str, raw: str) -> None:
    if key not in _ALL_KEYS:
        raise ConfigError(f"unknown config key: {key}")
    try:
        if key in _INT_KEYS:
            value = int(raw)
        elif key in _STR_KEYS:
            value = raw.strip("'\"")
        else:
            value = float(raw)
    except ValueError as exc:
        raise ConfigError(f"bad value for {key}: {raw!r}") from exc
    setattr(config, key, value)


def parse_config_text(text: str, config: RunConfig | None = None) -> RunConfig:
    """Apply ``key = value`` lines on top of defaults (or an existing config)."""
    config = config if config is not None else RunConfig()
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        if "=" not in stripped:
            raise ConfigError(f"line {lineno}: expected key = value, got {line!r}")
        key, raw = stripped.split("=", 1)
        _assign(config, key.strip(), raw.strip())
    return config


def load_config(path: str | None, overrides: Sequence[str] = ()) -> RunConfig:
    config = RunConfig()
    if path is not None:
        try:
            with open(path, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise ConfigError(f"cannot read config file {path}: {exc}") from exc
        parse_config_text(text, config)
    for item in overrides:
        if "=" not in item:
            raise ConfigError(f"--set expects key=value, got {item!r}")
        key, raw = item.split("=", 1)
        _assign(config, key.strip(), raw.strip())
    return config


# ---------------------------------------------------------------------------
# CSV emission

def _fmt(value: float) -> str:
    return f"{value:.14e}"


PROFILE_HEADER = (
    "y,"
    "re_omega_pi_plus,im_omega_pi_plus,"
    "re_omega_pi_minus,im_omega_pi_minus,"
    "re_omega_sigma_plus,im_omega_sigma_plus,"
    "re_omega_sigma_minus,im_omega_sigma_minus,"
    "intensity_pi_plus,intensity_pi_minus,"
    "intensity_sigma_plus,intensity_sigma_minus,"
    "phi_pi_plus,phi_pi_minus,phi_sigma_plus,phi_sigma_minus"
)

SWEEP_HEADER = "sweep_value,R,T,T_analytic,R_analytic,max_abs_alpha0L_cj,newton_iters"


def emit_profile(result: ScatteringResult, sink: TextIO, header: bool = True) -> None:
    """Field profile rows; intensities of the probe are entrance-normalised."""
    p = result.profile
    if header:
        sink.write(PROFILE_HEADER + "\n")
    rows = zip(
        p.y,
        p.control_plus,
        p.control_minus,
        p.probe_plus,
        p.probe_minus,
        p.intensity_control_plus,
        p.intensity_control_minus,
        p.intensity_probe_plus,
        p.intensity_probe_minus,
        p.phase_control_plus,
        p.phase_control_minus,
        p.phase_probe_plus,
        p.phase_probe_minus,
    )
    for y, cp, cm, pp, pm, icp, icm, ipp, ipm, fcp, fcm, fpp, fpm in rows:
        sink.write(
            ",".join(
                [
                    _fmt(y),
                    _fmt(cp.real), _fmt(cp.imag),
                    _fmt(cm.real), _fmt(cm.imag),
                    _fmt(pp.real), _fmt(pp.imag),
                    _fmt(pm.real), _fmt(pm.imag),
                    _fmt(icp), _fmt(icm), _fmt(ipp), _fmt(ipm),
                    _fmt(fcp), _fmt(fcm), _fmt(fpp), _fmt(fpm),
                ]
            )
            + "\n"
        )


def _emit_sweep_rows(rows: Iterable[tuple], sink: TextIO) -> None:
    for value, r, t, t_ana, r_ana, indicator, iters in rows:
        sink.write(
            ",".join(
                [
                    _fmt(value), _fmt(r), _fmt(t),
                    _fmt(t_ana), _fmt(r_ana), _fmt(indicator),
                    str(int(iters)),
                ]
            )
            + "\n"
        )


# ---------------------------------------------------------------------------
# solving

def _phi_sweep_rows(
    params: PhysicalParams,
    bc: BoundaryConditions,
    options: SolverOptions,
    phis: np.ndarray,
) -> list[tuple]:
    """Phase sweep on one converged control; the control never sees phi."""
    control = solve_control_bvp(params, bc, options)
    refl, trans = phase_sweep(control, phis, options)
    gc0 = control.coefficients_at(0.0)
    indicator = validity_indicator(params.alpha0_L, gc0)
    c_plus_abs = abs(gc0.c_plus)
    c_pm_abs = abs(gc0.c_plus_minus)
    rows = []
    for phi, r, t in zip(phis, refl, trans):
        ana = approx_RT(params.alpha0_L, c_plus_abs, c_pm_abs, params.phi_l, float(phi))
        rows.append((float(phi), float(r), float(t), ana["T"], ana["R"], indicator, control.newton_iters))
    return rows


def _solve_sweep_point(payload: tuple) -> tuple:
    cfg_dict, variable, value = payload
    cfg = RunConfig(**cfg_dict)
    setattr(cfg, variable, value)
    params = cfg.physical_params()
    result = solve_scattering(params, cfg.boundary(), cfg.solver_options())
    gc0 = result.control.coefficients_at(0.0)
    ana = approx_RT(
        params.alpha0_L, abs(gc0.c_plus), abs(gc0.c_plus_minus), params.phi_l, params.phi
    )
    return (
        float(value),
        result.reflectivity,
        result.transmissivity,
        ana["T"],
        ana["R"],
        validity_indicator(params.alpha0_L, gc0),
        result.control.newton_iters,
    )


def _pool_rows(config: RunConfig, variable: str, values: np.ndarray) -> list[tuple]:
    payloads = [(asdict(config), variable, float(v)) for v in values]
    workers = min(len(payloads), os.cpu_count() or 1)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_solve_sweep_point, payloads))
    return [_solve_sweep_point(p) for p in payloads]


def run_sweep(config: RunConfig, sink: TextIO) -> None:
    if config.sweep_variable is None:
        raise ConfigError("sweep requires sweep_variable/sweep_from/sweep_to/sweep_steps")
    values = np.linspace(config.sweep_from, config.sweep_to, config.sweep_steps)
    sink.write(SWEEP_HEADER + "\n")
    if config.sweep_variable == "phi":
        rows = _phi_sweep_rows(
            config.physical_params(), config.boundary(), config.solver_options(), values
        )
    else:
        rows = _pool_rows(config, config.sweep_variable, values)
    _emit_sweep_rows(rows, sink)


def run_propagate(config: RunConfig, sink: TextIO) -> None:
    result = solve_scattering(
        config.physical_params(), config.boundary(), config.solver_options()
    )
    emit_profile(result, sink)


def run_coefficients(config: RunConfig, sink: TextIO) -> None:
    params = config.physical_params()
    control = solve_control_bvp(params, config.boundary(), config.solver_options())
    sink.write(
        "y,"
        "re_cbar_0,im_cbar_0,re_cbar_1,im_cbar_1,re_cbar_m1,im_cbar_m1,"
        "re_beta,im_beta,re_c_plus,im_c_plus,"
        "re_c_plus_minus,im_c_plus_minus,re_c_minus,im_c_minus,"
        "eta,eta_p,c0,c0_p,gamma_c,delta_c,a,b,phi_r,r_abs\n"
    )
    for y, cp, cm in zip(control.y, control.control_plus, control.control_minus):
        gc = coupling_coefficients(params, complex(cp), complex(cm))
        mp = modulation_params(params, complex(cp), complex(cm))
        sink.write(
            ",".join(
                [
                    _fmt(float(y)),
                    _fmt(gc.cbar_0.real), _fmt(gc.cbar_0.imag),
                    _fmt(gc.cbar_1.real), _fmt(gc.cbar_1.imag),
                    _fmt(gc.cbar_m1.real), _fmt(gc.cbar_m1.imag),
                    _fmt(gc.beta.real), _fmt(gc.beta.imag),
                    _fmt(gc.c_plus.real), _fmt(gc.c_plus.imag),
                    _fmt(gc.c_plus_minus.real), _fmt(gc.c_plus_minus.imag),
                    _fmt(gc.c_minus.real), _fmt(gc.c_minus.imag),
                    _fmt(gc.eta), _fmt(gc.eta_p), _fmt(gc.c0), _fmt(gc.c0_p),
                    _fmt(gc.gamma_c), _fmt(gc.delta_c),
                    _fmt(mp.a), _fmt(mp.b), _fmt(mp.phi_r), _fmt(mp.r_abs),
                ]
            )
            + "\n"
        )


def run_figure(name: str, sink: TextIO, options: SolverOptions) -> None:
    preset: FigurePreset = PRESETS[name]
    params = preset.params
    bc = preset.bc
    if preset.kind == "sweep":
        phis = np.linspace(0.0, 2.0 * math.pi, SWEEP_STEPS, endpoint=False)
        sink.write(SWEEP_HEADER + "\n")
        _emit_sweep_rows(_phi_sweep_rows(params, bc, options, phis), sink)
    elif preset.kind == "profile":
        result = solve_scattering(params, bc, options)
        emit_profile(result, sink)
    elif preset.kind == "sweep_detuning":
        phis = np.linspace(0.0, 2.0 * math.pi, SWEEP_STEPS, endpoint=False)
        sink.write(SWEEP_HEADER + "\n")
        for delta0 in preset.detunings:
            p = PhysicalParams(
                gamma=params.gamma,
                gamma_d=params.gamma_d,
                gamma_ze=params.gamma_ze,
                delta0=delta0,
                alpha0_L=params.alpha0_L,
                phi=params.phi,
            )
            sink.write(
                f"# delta0 = {_fmt(delta0)}, phi_l = {_fmt(p.phi_l)} rad"
                f" ({p.phi_l / math.pi:.6f} pi)\n"
            )
            _emit_sweep_rows(_phi_sweep_rows(p, bc, options, phis), sink)
    elif preset.kind == "profile_phases":
        first = True
        for phi in preset.phases:
            p = PhysicalParams(
                gamma=params.gamma,
                gamma_d=params.gamma_d,
                gamma_ze=params.gamma_ze,
                delta0=params.delta0,
                alpha0_L=params.alpha0_L,
                phi=phi,
            )
            result = solve_scattering(p, bc, options)
            if first:
                sink.write(PROFILE_HEADER + "\n")
                first = False
            sink.write(f"# phi = {_fmt(phi)} ({phi / math.pi:.6f} pi)\n")
            emit_profile(result, sink, header=False)
    else:  # pragma: no cover - presets table is closed
        raise ConfigError(f"unknown preset kind {preset.kind!r}")


# ---------------------------------------------------------------------------
# oracle reports

def _report(sink: TextIO, name: str, deviation: float, tolerance: float) -> bool:
    ok = deviation <= tolerance
    sink.write(
        f"{name}: max deviation {deviation:.3e}"
        f" (tolerance {tolerance:.1e}) -> {'PASS' if ok else 'FAIL'}\n"
    )
    return ok


def oracle_bloch(sink: TextIO) -> bool:
    rng = np.random.default_rng(20260821)
    worst = 0.0
    worst_cd = 0.0
    for _ in range(100):
        params = PhysicalParams(
            gamma=float(rng.uniform(0.3, 4.0)),
            gamma_d=float(rng.uniform(0.3, 3.0)),
            gamma_ze=float(rng.uniform(0.2, 5.0)),
            delta0=float(rng.uniform(-3.0, 3.0)),
            phi=float(rng.uniform(0.0, 2.0 * math.pi)),
        )
        omega_pi = complex(rng.normal(), rng.normal()) * float(rng.uniform(0.05, 2.0))
        omega_sigma = complex(rng.normal(), rng.normal()) * float(rng.uniform(0.05, 2.0))
        if abs(omega_pi) < 1e-3 and abs(omega_sigma) < 1e-3:
            omega_pi += 0.5
        dm = oracles.bloch_steady_state(params, omega_pi, omega_sigma)
        cf = steady_coherences_full(params, omega_pi, omega_sigma)
        worst = max(worst, abs(dm.rho_pi - cf.rho_pi), abs(dm.rho_sigma - cf.rho_sigma))
        worst_cd = max(worst_cd, abs(dm.rho_excited_zeeman))
    ok = _report(sink, "bloch steady state vs closed-form coherences", worst, 1e-10)
    ok &= _report(sink, "excited Zeeman coherence rho_cd", worst_cd, 1e-12)
    return ok


def oracle_fourier(sink: TextIO) -> bool:
    cases = [
        (PhysicalParams(), 0.4 + 0.0j, 0.33 + 0.0j),
        (PhysicalParams(delta0=1.3), 0.7 - 0.2j, 0.21 - 0.35j),
        (PhysicalParams(delta0=-0.7), 0.2 + 0.5j, 0.55 + 0.3j),
    ]
    worst_harm = 0.0
    worst_conj = 0.0
    worst_inv = 0.0
    worst_recon = 0.0
    worst_product = 0.0
    zeta = np.linspace(0.0, 2.0 * math.pi, 64, endpoint=False)
    for params, cp, r in cases:
        cm = r * cp
        mp = modulation_params(params, cp, cm)
        for n in range(0, 6):
            closed = harmonic_coefficient(mp, n)
            quad = oracles.fourier_quadrature(mp.a, mp.b, mp.phi_r, n)
            worst_harm = max(worst_harm, abs(closed - quad))
            mirror = harmonic_coefficient(mp, -n)
            worst_conj = max(worst_conj, abs(mirror - closed.conjugate()))
        for n in range(-2, 3):
            closed = inverse_intensity_harmonic(mp, n)
            quad = oracles.fourier_quadrature(mp.a_p, mp.b_p, mp.phi_r, n)
            worst_inv = max(worst_inv, abs(closed - quad))
        direct = mp.b / (1.0 + mp.a * np.cos(zeta + mp.phi_r))
        series = np.zeros_like(zeta, dtype=complex)
        for n in range(-32, 33):
            series += harmonic_coefficient(mp, n) * np.exp(1j * n * zeta)
        worst_recon = max(worst_recon, float(np.max(np.abs(series - direct))))
        gc = coupling_coefficients(params, cp, cm)
        lor = params.gamma_d / complex(params.gamma_d, params.delta0)
        ee = gc.eta * gc.eta_p
        for n, printed, corr in (
            (0, gc.c_plus, gc.beta * ee),
            (-1, gc.c_plus_minus, 2.0 * gc.beta * ee * r),
            (-2, gc.c_minus, gc.beta * ee * r * r),
        ):
            exact = lor * oracles.product_harmonic_quadrature(params.f0, cp, r, n)
            worst_product = max(worst_product, abs(exact - (printed + corr)))
    ok = _report(sink, "modulation harmonics vs quadrature", worst_harm, 1e-8)
    ok &= _report(sink, "harmonic conjugation c_-n = conj(c_n)", worst_conj, 1e-14)
    ok &= _report(sink, "inverse-intensity harmonics vs quadrature", worst_inv, 1e-8)
    ok &= _report(sink, "profile reconstruction from harmonics", worst_recon, 1e-8)
    ok &= _report(
        sink, "probe coupling product identity vs quadrature", worst_product, 1e-8
    )
    return ok


def oracle_dephasing(sink: TextIO) -> bool:
    y = np.linspace(0.0, 1.0, 201)
    worst = 0.0
    for phi, delta0, depth in (
        (math.pi / 4, 1.0, 0.8),
        (math.pi / 2, 2.0, 1.5),
        (2.5, -1.2, 1.0),
        (0.3, 0.5, 3.0),
    ):
        params = PhysicalParams(delta0=delta0, alpha0_L=depth, phi=phi)
        closed = analytic_dephasing(params, y)
        integrated = oracles.dephasing_ode(params, y)
        worst = max(worst, float(np.max(np.abs(closed - integrated))))
    return _report(sink, "dephasing closed form vs integrated flow", worst, 1e-8)


ORACLES = {
    "bloch": oracle_bloch,
    "fourier": oracle_fourier,
    "dephasing": oracle_dephasing,
}


# ---------------------------------------------------------------------------
# argument plumbing

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="phasegrating",
        description="Standing-wave saturation grating: solvers and figure data.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, config: bool = True) -> None:
        if config:
            p.add_argument("--config", metavar="PATH", help="flat key = value file")
            p.add_argument(
                "--set",
                metavar="KEY=VALUE",
                action="append",
                default=[],
                help="override one config key (repeatable)",
            )
        p.add_argument("--out", metavar="PATH", help="output file (default stdout)")
        p.add_argument("--grid", metavar="N", type=int, help="grid points override")
        p.add_argument(
            "--tol",
            metavar="X",
            type=float,
            help="sets both ode_rel_tol and shoot_tol",
        )

    p = sub.add_parser("propagate", help="single solve, profile CSV")
    add_common(p)

    p = sub.add_parser("sweep", help="1-D sweep, summary CSV")
    add_common(p)
    p.add_argument("--var", metavar="NAME", choices=SWEEP_VARIABLES)
    p.add_argument("--from", dest="sweep_from", metavar="F", type=float)
    p.add_argument("--to", dest="sweep_to", metavar="T", type=float)
    p.add_argument("--steps", dest="sweep_steps", metavar="N", type=int)

    p = sub.add_parser("figure", help="canned figure scenarios")
    p.add_argument("name", choices=sorted(PRESETS))
    add_common(p, config=False)

    p = sub.add_parser("coefficients", help="coupling coefficients along y")
    add_common(p)

    p = sub.add_parser("oracle", help="independent validation report")
    p.add_argument("name", choices=sorted(ORACLES))
    p.add_argument("--out", metavar="PATH", help="output file (default stdout)")

    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    config = load_config(getattr(args, "config", None), getattr(args, "set", []))
    if getattr(args, "var", None) is not None:
        config.sweep_variable = args.var
    for key in ("sweep_from", "sweep_to", "sweep_steps"):
        value = getattr(args, key, None)
        if value is not None:
            setattr(config, key, value)
    if args.grid is not None:
        config.grid_points = args.grid
    if args.tol is not None:
        config.ode_rel_tol = args.tol
        config.shoot_tol = args.tol
    config.validate()
    return config


def _dispatch(args: argparse.Namespace, sink: TextIO) -> int:
    if args.command == "figure":
        grid = args.grid if args.grid is not None else 2001
        tol = args.tol if args.tol is not None else 1e-10
        options = SolverOptions(
            grid_points=grid,
            ode_rel_tol=tol,
            ode_abs_tol=min(1e-12, tol),
            shoot_tol=tol,
        )
        run_figure(args.name, sink, options)
        return 0
    if args.command == "oracle":
        return 0 if ORACLES[args.name](sink) else 1
    config = _config_from_args(args)
    if args.command == "propagate":
        run_propagate(config, sink)
    elif args.command == "sweep":
        run_sweep(config, sink)
    elif args.command == "coefficients":
        run_coefficients(config, sink)
    else:  # pragma: no cover - argparse restricts the choices
        raise ConfigError(f"unknown command {args.command!r}")
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        out_path = getattr(args, "out", None)
        if out_path is not None:
            with open(out_path, "w", encoding="utf-8", newline="\n") as sink:
                return _dispatch(args, sink)
        return _dispatch(args, sys.stdout)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except NoConvergence as exc:
        print(f"no convergence: {exc}", file=sys.stderr)
        return EXIT_NO_CONVERGENCE
    except NodeError as exc:
        print(f"standing-wave node: {exc}", file=sys.stderr)
        return EXIT_NODE
    except SimulationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
