"""Exception and warning types shared across the package."""


class InvalidParameterError(ValueError):
    """A constructor or operation was called with an out-of-range parameter."""


class DisconnectedGraphError(ValueError):
    """A distance- or resistance-based invariant was asked of a disconnected graph."""


class StructureError(ValueError):
    """A matrix did not have the block structure an operation requires."""


class RankAnomalyError(ValueError):
    """A positive semidefinite matrix had more near-zero eigenvalues than expected."""


class NumericFailureError(RuntimeError):
    """The eigensolver failed to converge. Carries the final off-diagonal residual."""

    def __init__(self, message: str, residual: float):
        super().__init__(message)
        self.residual = residual


class ConsistencyError(RuntimeError):
    """Two routes that must agree produced different values. Carries both."""


class PatternRegimeWarning(UserWarning):
    """Issued when a chain-length-1 prism is pushed through machinery whose
    degree pattern only describes chains of length two or more."""
