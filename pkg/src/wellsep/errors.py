"""Exception hierarchy for wellsep."""


class WellSepError(Exception):
    """Base class for all toolkit errors."""


class NonConvergence(WellSepError, RuntimeError):
    """An iterative solver stopped before reaching its tolerance."""

    def __init__(self, message, achieved=None):
        super().__init__(message)
        self.achieved = achieved


class DegenerateDisc(WellSepError, ValueError):
    """Disc touches or contains the origin, so inversion is unbounded."""


class ZeroEigenvalue(WellSepError, ValueError):
    pass


class CoincidentCenter(WellSepError, ValueError):
    """Eigenvalue sits on a disc center; the entry bound is vacuous."""


class InvalidRegime(WellSepError, ValueError):
    """Condition-number bound requested outside its validity range."""


class ShiftCollision(WellSepError, ValueError):
    pass


class ParseError(WellSepError, ValueError):
    def __init__(self, reason, line=None):
        self.line = line
        self.reason = reason
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + reason)


class UnsupportedField(ParseError):
    pass


class DimensionMismatch(ParseError):
    pass


class TableIOError(WellSepError, OSError):
    pass
