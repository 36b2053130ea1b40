import pytest

from phasegrating import (
    BoundaryConditions,
    PhysicalParams,
    SolverOptions,
    solve_control_bvp,
)


@pytest.fixture(scope="session")
def bc():
    return BoundaryConditions()


@pytest.fixture(scope="session")
def options():
    return SolverOptions()


@pytest.fixture(scope="session")
def control_03(bc, options):
    """Converged control at depth 0.3, shared across the suite."""
    return solve_control_bvp(PhysicalParams(alpha0_L=0.3), bc, options)


@pytest.fixture(scope="session")
def control_06(bc, options):
    return solve_control_bvp(PhysicalParams(alpha0_L=0.6), bc, options)
