"""Config parsing, CSV contracts, exit codes, preset scenarios."""

import io
import math
import re
from contextlib import redirect_stdout

import numpy as np
import pytest

from phasegrating.cli import (
    PROFILE_HEADER,
    SWEEP_HEADER,
    RunConfig,
    load_config,
    main,
    parse_config_text,
)
from phasegrating.errors import ConfigError

FLOAT_CELL = re.compile(r"^-?\d\.\d{14}e[+-]\d{2}$")


def run_main(argv, out_path):
    code = main([*argv, "--out", str(out_path)])
    return code, out_path.read_text() if out_path.exists() else ""


# ---------------------------------------------------------------------------
# configuration

def test_defaults_are_valid():
    cfg = RunConfig()
    cfg.validate()
    assert cfg.grid_points == 2001
    assert cfg.ode_rel_tol == 1e-10


def test_parse_comments_and_spacing():
    cfg = parse_config_text(
        """
        # a comment
        alpha0_L = 0.45
        phi=1.5   # trailing note
        grid_points = 301
        """
    )
    assert cfg.alpha0_L == 0.45
    assert cfg.phi == 1.5
    assert cfg.grid_points == 301


def test_parse_rejects_unknown_key():
    with pytest.raises(ConfigError):
        parse_config_text("not_a_key = 3\n")


def test_parse_rejects_bad_value():
    with pytest.raises(ConfigError):
        parse_config_text("alpha0_L = banana\n")


def test_parse_rejects_missing_equals():
    with pytest.raises(ConfigError):
        parse_config_text("alpha0_L 0.3\n")


def test_validate_grid_floor():
    cfg = RunConfig(grid_points=32)
    with pytest.raises(ConfigError):
        cfg.validate()


def test_validate_partial_sweep():
    cfg = RunConfig(sweep_variable="phi", sweep_from=0.0)
    with pytest.raises(ConfigError):
        cfg.validate()


def test_validate_sweep_variable_name():
    cfg = RunConfig(
        sweep_variable="gamma", sweep_from=0.0, sweep_to=1.0, sweep_steps=3
    )
    with pytest.raises(ConfigError):
        cfg.validate()


def test_validate_sweep_steps_floor():
    cfg = RunConfig(sweep_variable="phi", sweep_from=0.0, sweep_to=1.0, sweep_steps=1)
    with pytest.raises(ConfigError):
        cfg.validate()


def test_validate_sweep_bounds_finite():
    cfg = RunConfig(
        sweep_variable="phi", sweep_from=0.0, sweep_to=math.inf, sweep_steps=4
    )
    with pytest.raises(ConfigError):
        cfg.validate()


def test_serialised_config_reparses_identically():
    cfg = RunConfig(
        alpha0_L=0.45,
        phi=0.7853981633974483,
        sweep_variable="phi",
        sweep_from=0.0,
        sweep_to=math.pi,
        sweep_steps=5,
    )
    assert parse_config_text(cfg.to_text()) == cfg


def test_load_config_overrides(tmp_path):
    path = tmp_path / "run.cfg"
    path.write_text("alpha0_L = 0.3\nphi = 0.1\n")
    cfg = load_config(str(path), ["phi=0.9"])
    assert cfg.alpha0_L == 0.3
    assert cfg.phi == 0.9


# ---------------------------------------------------------------------------
# propagate

def test_propagate_profile_contract(tmp_path):
    code, text = run_main(
        ["propagate", "--set", "grid_points=101"], tmp_path / "p.csv"
    )
    assert code == 0
    lines = text.strip().split("\n")
    assert lines[0] == PROFILE_HEADER
    assert len(lines) == 102
    cells = lines[1].split(",")
    assert len(cells) == 17
    for cell in cells:
        assert FLOAT_CELL.match(cell), cell


def test_propagate_zero_depth_constant_columns(tmp_path):
    code, text = run_main(
        ["propagate", "--set", "alpha0_L=0", "--grid", "101"], tmp_path / "p.csv"
    )
    assert code == 0
    data = np.genfromtxt(io.StringIO(text), delimiter=",", names=True)
    for col in (
        "intensity_pi_plus",
        "intensity_pi_minus",
        "intensity_sigma_plus",
        "intensity_sigma_minus",
    ):
        assert np.ptp(data[col]) == 0.0


# ---------------------------------------------------------------------------
# sweep

def test_sweep_zero_depth_exact_rows(tmp_path):
    code, text = run_main(
        [
            "sweep",
            "--set", "alpha0_L=0",
            "--var", "phi",
            "--from", "0",
            "--to", "1.0",
            "--steps", "3",
        ],
        tmp_path / "s.csv",
    )
    assert code == 0
    lines = text.strip().split("\n")
    assert lines[0] == SWEEP_HEADER
    assert len(lines) == 4
    for line in lines[1:]:
        cells = line.split(",")
        assert cells[1] == "0.00000000000000e+00"
        assert cells[2] == "1.00000000000000e+00"
        assert cells[6] == "0"


def test_sweep_needs_a_sweep(tmp_path):
    code, _ = run_main(["sweep"], tmp_path / "s.csv")
    assert code == 2


def test_sweep_flags_override_config(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text(
        "alpha0_L = 0.1\nsweep_variable = phi\nsweep_from = 0\n"
        "sweep_to = 1.0\nsweep_steps = 4\ngrid_points = 201\n"
    )
    code, text = run_main(
        ["sweep", "--config", str(cfg), "--steps", "6"], tmp_path / "s.csv"
    )
    assert code == 0
    assert len(text.strip().split("\n")) == 7


def test_sweep_over_depth_runs_pool(tmp_path):
    code, text = run_main(
        [
            "sweep",
            "--var", "alpha0_L",
            "--from", "0.05",
            "--to", "0.2",
            "--steps", "4",
            "--grid", "201",
        ],
        tmp_path / "s.csv",
    )
    assert code == 0
    data = np.genfromtxt(io.StringIO(text), delimiter=",", names=True)
    assert list(data["sweep_value"]) == pytest.approx([0.05, 0.1, 0.15, 0.2])
    # reflection grows with depth over this range
    assert np.all(np.diff(data["R"]) > 0.0)


def test_config_round_trip_bitwise_csv(tmp_path):
    cfg = RunConfig(
        alpha0_L=0.37,
        sweep_variable="phi",
        sweep_from=0.0,
        sweep_to=1.1,
        sweep_steps=5,
        grid_points=201,
    )
    path_a = tmp_path / "a.cfg"
    path_a.write_text(cfg.to_text())
    reparsed = parse_config_text((tmp_path / "a.cfg").read_text())
    path_b = tmp_path / "b.cfg"
    path_b.write_text(reparsed.to_text())
    _, text_a = run_main(["sweep", "--config", str(path_a)], tmp_path / "a.csv")
    _, text_b = run_main(["sweep", "--config", str(path_b)], tmp_path / "b.csv")
    assert text_a == text_b


# ---------------------------------------------------------------------------
# exit codes

def test_exit_code_config_error(tmp_path):
    code, _ = run_main(["propagate", "--set", "nope=1"], tmp_path / "x.csv")
    assert code == 2


def test_exit_code_node(tmp_path):
    code, _ = run_main(
        ["propagate", "--set", "omega_pi_minus_in=0.4"], tmp_path / "x.csv"
    )
    assert code == 4


def test_exit_code_no_convergence(tmp_path):
    code, _ = run_main(
        [
            "propagate",
            "--set", "alpha0_L=2.5",
            "--set", "max_newton_iter=2",
            "--grid", "201",
        ],
        tmp_path / "x.csv",
    )
    assert code == 3


# ---------------------------------------------------------------------------
# figures

def test_figure_fig3_shape(tmp_path):
    code, text = run_main(["figure", "fig3"], tmp_path / "f3.csv")
    assert code == 0
    lines = text.strip().split("\n")
    assert lines[0] == SWEEP_HEADER
    assert len(lines) == 129
    values = np.array([float(l.split(",")[0]) for l in lines[1:]])
    assert values[0] == 0.0
    assert values[64] == pytest.approx(math.pi, abs=1e-12)
    assert values[-1] < 2.0 * math.pi


def test_figure_fig7_emits_phase_prediction(tmp_path):
    code, text = run_main(["figure", "fig7", "--grid", "301"], tmp_path / "f7.csv")
    assert code == 0
    comments = [l for l in text.split("\n") if l.startswith("#")]
    assert len(comments) == 2
    match = re.search(r"phi_l = (\S+) rad", comments[1])
    assert match is not None
    assert float(match.group(1)) == pytest.approx(math.atan(0.5), rel=1e-10)


def test_figure_fig8_three_blocks(tmp_path):
    code, text = run_main(["figure", "fig8", "--grid", "101"], tmp_path / "f8.csv")
    assert code == 0
    lines = text.strip().split("\n")
    assert lines[0] == PROFILE_HEADER
    comments = [l for l in lines if l.startswith("#")]
    assert len(comments) == 3
    assert len(lines) == 1 + 3 + 3 * 101


def test_figure_deterministic(tmp_path):
    _, first = run_main(["figure", "fig4", "--grid", "201"], tmp_path / "r1.csv")
    _, second = run_main(["figure", "fig4", "--grid", "201"], tmp_path / "r2.csv")
    assert first == second


# ---------------------------------------------------------------------------
# oracle reports

def test_oracle_report_passes(tmp_path):
    code, text = run_main(["oracle", "dephasing"], tmp_path / "o.txt")
    assert code == 0
    assert "PASS" in text
    assert "FAIL" not in text


def test_stdout_default_matches_file_output(tmp_path):
    _, from_file = run_main(
        ["propagate", "--set", "grid_points=101"], tmp_path / "f.csv"
    )
    buffer = io.StringIO()
    with redirect_stdout(buffer):
        code = main(["propagate", "--set", "grid_points=101"])
    assert code == 0
    assert buffer.getvalue() == from_file
