"""Domain errors. Each one carries the exit status the CLI reports for it."""


class LPBoundError(Exception):
    exit_code = 1

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail


class DimensionTooLargeError(LPBoundError):
    exit_code = 3


class DimensionMismatchError(LPBoundError, ValueError):
    exit_code = 2


class InvalidParameterError(LPBoundError, ValueError):
    exit_code = 2


class EntropyDomainError(LPBoundError, ValueError):
    exit_code = 2


class ParseError(LPBoundError, ValueError):
    exit_code = 2


class InfeasibleDualError(LPBoundError):
    exit_code = 4


class DegenerateCertificateError(LPBoundError):
    exit_code = 4


class NoFeasibleCertificateError(LPBoundError):
    exit_code = 4


class OracleLimitError(DimensionTooLargeError):
    exit_code = 3
