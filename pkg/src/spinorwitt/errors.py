"""Exception hierarchy shared by every module of the package."""


class SpinorWittError(Exception):
    """Base class for all errors raised by spinorwitt."""


class DiagramError(SpinorWittError, ValueError):
    """A partition does not describe a valid diagram in the requested frame."""


class NotStrict(DiagramError):
    pass


class NotWeaklyDecreasing(DiagramError):
    pass


class ExceedsFrame(DiagramError):
    pass


class NonPositivePart(DiagramError):
    pass


class BoundExceeded(SpinorWittError, ValueError):
    """A brute-force routine was asked for an input beyond its practical bound."""


class ParityViolation(SpinorWittError, ValueError):
    """A rule was applied to a parameter of the wrong parity."""


class TwistCheckFailed(SpinorWittError):
    """A canonical-bundle twist that must be trivial mod squares is not."""


class NontrivialTwistUnresolved(SpinorWittError):
    """A decomposition left a twist that no later rule can discharge.

    The partially computed module and trace are attached so callers can
    report them instead of dropping the twist.
    """

    def __init__(self, message, module=None, trace=None):
        super().__init__(message)
        self.module = module
        self.trace = trace


class MismatchReport(SpinorWittError):
    """The rewrite engine and the diagram enumeration disagree."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
