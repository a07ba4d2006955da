"""Exceptions and warnings raised by cyclolib."""


class CycloError(Exception):
    """Base class for all cyclolib errors."""


class CycloWarning(UserWarning):
    """Recoverable anomaly (truncated checkpoint, oversized oracle request)."""


# Input problems - reported as usage errors by the command line

class ValidationError(CycloError, ValueError):
    pass


class OrderingError(ValidationError):
    """Primes not given as p < q < r."""


class InvalidModulusError(ValidationError):
    pass


class NotInvertibleError(ValidationError):
    pass


class NoPrimesInClassError(ValidationError):
    """Residue class shares a factor with its modulus."""


# Failures while computing

class ComputationError(CycloError):
    pass


class ArithmeticOverflowError(ComputationError, OverflowError):
    pass


class BudgetExhaustedError(ComputationError):
    """A bounded search ran past its cap. A larger cap may still succeed."""


class TooLargeError(ComputationError):
    pass


class ConsistencyError(ComputationError):
    """An identity that must hold exactly did not."""


class OutputError(ComputationError, OSError):
    """A report or checkpoint could not be read or written."""


class CheckpointError(OutputError):
    pass


class CheckpointParseError(CheckpointError):
    def __init__(self, path, line_number, reason):
        self.path = path
        self.line_number = line_number
        super().__init__('{}:{}: {}'.format(path, line_number, reason))
