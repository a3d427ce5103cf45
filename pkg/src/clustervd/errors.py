"""Exception types raised across the package."""


class ClusterVDError(Exception):
    """Base class for all package errors."""


class GraphFormatError(ClusterVDError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CotreeParseError(ClusterVDError):
    def __init__(self, message, position):
        self.position = position
        super().__init__(f"position {position}: {message}")


class CotreeStructureError(ClusterVDError):
    pass


class NotACographError(ClusterVDError):
    """The input contains an induced P4; ``witness`` certifies it."""

    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"graph is not a cograph: induced P4 on {list(witness.vertices)}")


class UnsupportedVariantError(ClusterVDError):
    pass


class NoSolutionError(ClusterVDError):
    """Requested a deletion set where the optimum is infinite."""


class OracleLimitError(ClusterVDError):
    pass


class VerificationError(ClusterVDError):
    """A set handed to a solution map failed verification."""

    def __init__(self, message, verdict=None):
        self.verdict = verdict
        super().__init__(message)


class ReductionError(ClusterVDError):
    def __init__(self, message, witness=None, flag=None):
        self.witness = witness
        self.flag = flag
        super().__init__(message)
