"""Exception types shared across the package."""


class SimulationError(Exception):
    """Base class for all errors raised by this package."""


class ConfigError(SimulationError):
    """Invalid parameter value, run configuration, or config file."""


class DegenerateField(SimulationError):
    """A field amplitude vanishes where a finite one is required."""


class NodeError(SimulationError):
    """The control standing wave develops a node (|r| reaches 1).

    At a node the total control intensity vanishes somewhere in the
    standing-wave period and the modulated-response expansion breaks down.
    """

    def __init__(self, y: float | None = None, message: str | None = None):
        self.y = y
        if message is None:
            where = "" if y is None else f" near y = {y:.6g}"
            message = f"control standing wave develops a node{where}"
        super().__init__(message)

    def __reduce__(self):
        # keeps the two-argument constructor picklable across worker pools
        return (NodeError, (self.y, str(self)))


class NoConvergence(SimulationError):
    """The shooting iteration failed to meet its residual target."""

    def __init__(self, iterations: int, residual: float, message: str | None = None):
        self.iterations = iterations
        self.residual = residual
        super().__init__(
            message
            or f"shooting did not converge after {iterations} iterations (residual {residual:.3e})"
        )

    def __reduce__(self):
        return (NoConvergence, (self.iterations, self.residual, str(self)))


class SingularSystem(SimulationError):
    """The probe boundary-matching system is singular."""


class SingularLiouvillian(SimulationError):
    """The steady state is not unique (Liouvillian null space has dimension > 1)."""
