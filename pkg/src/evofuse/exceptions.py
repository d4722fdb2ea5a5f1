"""Error taxonomy shared across the package."""


class EvofuseError(Exception):
    """Base class for all errors raised by this package."""


class ShapeError(EvofuseError, ValueError):
    """Array dimensions or shapes do not match what an operation requires."""


class ParameterError(EvofuseError, ValueError):
    """A scalar argument is outside its legal domain (even window size, bad sigma, ...)."""


class BoundsError(EvofuseError, ValueError):
    """A region (patch, box) does not lie inside its containing grid."""


class ConfigError(EvofuseError, ValueError):
    """A configuration object violates its invariants."""


class EvaluationError(EvofuseError, RuntimeError):
    """An objective evaluation failed; carries the offending genome."""

    def __init__(self, message, genome=None):
        super().__init__(message)
        self.genome = genome


class DivergenceError(EvofuseError, RuntimeError):
    """Inner optimization produced a non-finite loss; carries the step index."""

    def __init__(self, message, step):
        super().__init__(message)
        self.step = step
