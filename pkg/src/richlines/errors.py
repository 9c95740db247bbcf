"""Exception types shared across the package."""


class RichLinesError(Exception):
    """Base class for all errors raised by this package."""


class DegenerateLineError(RichLinesError):
    """A line was requested through two equal points."""


class ZeroPolynomialError(RichLinesError):
    """An operation that needs a nonzero polynomial received the zero polynomial."""


class EndpointRootError(RichLinesError):
    """A root-counting bracket has a root at one of its endpoints."""


class CutNotFoundError(RichLinesError):
    """The bisecting-cut search exhausted every candidate without success."""


class InvariantBreachError(RichLinesError):
    """An exact inequality that must hold was violated; carries a witness."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class OracleTooLargeError(RichLinesError):
    """A brute-force oracle was asked to run above its instance-size cap."""


class AllJointsError(RichLinesError):
    """Every surviving point was a joint; carries the gradient audit report."""

    def __init__(self, message: str, audit=None):
        super().__init__(message)
        self.audit = audit


class PreconditionError(RichLinesError):
    """A documented precondition of an operation was violated."""
