"""Exception hierarchy shared by every module of the package."""


class ElectionError(ValueError):
    """Base class for invalid elections and invalid requests on them."""


class UnknownCandidate(ElectionError):
    pass


class SeatsOutOfRange(ElectionError):
    pass


class VoterCountTooSmall(ElectionError):
    pass


class EmptyTargetSet(ElectionError):
    pass


class TargetSetTooLarge(ElectionError):
    pass


class NotLeastSupported(ElectionError):
    pass


class NoTightKernel(ElectionError):
    """The supplied witness does not attain the reported optimum."""


class SeatsMismatch(ElectionError):
    pass


class InstanceTooLarge(ElectionError):
    """A subset enumeration would exceed its configured cap."""


class NotClosedListShaped(ElectionError):
    pass


class PreconditionFailed(ElectionError):
    pass


class RuleCannotRun(ElectionError):
    pass


class ElectionSyntaxError(ElectionError):
    """Malformed election file; carries a 1-based line and column."""

    def __init__(self, message, line, col):
        super().__init__(f"line {line}, col {col}: {message}")
        self.line = line
        self.col = col


class DuplicateHeader(ElectionSyntaxError):
    pass
