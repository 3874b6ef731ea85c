"""Exception types shared across the package."""


class SpinlaxError(Exception):
    """Base class for all package errors."""


class StencilError(SpinlaxError):
    """Grid too small for the finite-difference stencil."""


class ParameterError(SpinlaxError):
    """A physics parameter is out of its admissible range (e.g. b = 0)."""


class BlowUpError(SpinlaxError):
    """A time step produced non-finite or runaway values."""

    def __init__(self, message, step=None, time=None):
        super().__init__(message)
        self.step = step
        self.time = time


class ReductionError(SpinlaxError):
    """Input to a 1+1 reduction varies along y beyond tolerance."""


class GaugeError(SpinlaxError):
    """Gauge precondition violated (surface gauge, singular gauge matrix, ...)."""


class MetricError(SpinlaxError):
    """Singular or non-positive-definite metric."""


class ImmersionError(SpinlaxError):
    """Surface patch fails the immersion condition |r_x ^ r_y| > 0."""


class BreakingError(SpinlaxError):
    """Characteristics crossed before the requested final time."""

    def __init__(self, message, t_break=None, y_break=None):
        super().__init__(message)
        self.t_break = t_break
        self.y_break = y_break


class InsufficientSnapshotsError(SpinlaxError):
    """Too few trajectory snapshots for a time-difference evaluation."""


class ConfigError(SpinlaxError):
    """Scenario configuration invalid; carries every violation found."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("invalid configuration:\n" + "\n".join(self.violations))
