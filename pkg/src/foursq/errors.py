"""Exception hierarchy shared by all foursq modules."""


class FourSquareError(Exception):
    """Base class for all errors raised by this package."""


class OverflowCapError(FourSquareError):
    """An input or intermediate value exceeded the 2**40 arithmetic cap."""


class UnknownFormError(FourSquareError):
    """The ternary form is not in the closed-form exception catalog."""


class DslSyntaxError(FourSquareError):
    """Constraint text failed to parse; carries the offending position."""

    def __init__(self, message: str, position: int = -1):
        super().__init__(f"{message} (at position {position})" if position >= 0 else message)
        self.position = position


class DegreeError(DslSyntaxError):
    """A monomial exceeded the degree-4 cap."""


class HypothesisFailure(FourSquareError):
    """A conditional construction's arithmetic hypothesis failed for this n."""


class CheckpointMismatch(FourSquareError):
    """Checkpoint digest does not match the scan configuration."""


class CorruptCheckpoint(FourSquareError):
    """Checkpoint file is unreadable or structurally invalid."""


class NonContiguousRows(FourSquareError):
    """Sequence rows are not contiguous in n."""
