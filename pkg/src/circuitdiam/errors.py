class CircuitDiamError(Exception):
    """Base class for all errors raised by this package."""


class ZeroVector(CircuitDiamError, ValueError):
    pass


class DimensionMismatch(CircuitDiamError, ValueError):
    pass


class InfeasiblePoint(CircuitDiamError, ValueError):
    pass


class InvalidPolyhedron(CircuitDiamError, ValueError):
    """Raised when an operation needs a validated polyhedron and gets something else."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class Unreachable(CircuitDiamError):
    pass


class EmptyFace(CircuitDiamError):
    pass


class UnusableDirection(CircuitDiamError):
    """A circuit cannot be used for a maximal step at the given point."""


class UnboundedDirection(UnusableDirection):
    pass


class BlockedDirection(UnusableDirection):
    pass


class InvalidFacet(CircuitDiamError, ValueError):
    pass


class PerturbationFailed(CircuitDiamError):
    pass


class Exhausted(CircuitDiamError):
    pass


class SharedFacet(CircuitDiamError, ValueError):
    pass


class AlreadyBounded(CircuitDiamError, ValueError):
    pass


class RankComplete(CircuitDiamError, ValueError):
    pass


class NotTransferable(CircuitDiamError):
    def __init__(self, message, step=None):
        super().__init__(message)
        self.step = step


class NotASpindle(CircuitDiamError, ValueError):
    pass


class TransferFailed(CircuitDiamError):
    pass


class VertexNotFound(CircuitDiamError, LookupError):
    pass


class HPolyParseError(CircuitDiamError, ValueError):
    def __init__(self, message, line=None, column=None):
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)
        self.line = line
        self.column = column


class DivisionByZeroDenominator(HPolyParseError):
    pass


class VerificationFailed(CircuitDiamError):
    def __init__(self, stage, message):
        super().__init__(f"{stage}: {message}")
        self.stage = stage
