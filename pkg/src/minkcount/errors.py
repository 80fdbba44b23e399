"""Exception types. CLI exit codes are attached as ``exit_code``."""


class MinkcountError(Exception):
    exit_code = 2


class NotFullDimensional(MinkcountError):
    exit_code = 3


class TooFewVertices(MinkcountError):
    exit_code = 3


class DegenerateCoincidence(MinkcountError):
    """Two distinct summand-vertex tuples sum to the same extreme point."""

    exit_code = 3


class NotGeneralOrientation(MinkcountError):
    """Summands are not in general orientations (some face is inexact)."""

    exit_code = 3

    def __init__(self, message, face=None):
        super().__init__(message)
        self.face = face


GeneralOrientationRequired = NotGeneralOrientation


class PoleCell(MinkcountError):
    """The cell contains a pole, so it has no western-most point."""

    exit_code = 3


class ExtremalSearchFailed(MinkcountError):
    exit_code = 3


class GenerationFailed(MinkcountError):
    exit_code = 3


class ClaimViolation(AssertionError):
    """A checked identity failed on a valid instance. Always a bug."""

    exit_code = 4
