"""Exception types raised by the library and the command-line driver."""


class DegenerateClosedForm(ValueError):
    """A closed-form expression is singular at the requested parameters.

    Callers should fall back to the numeric route (``numeric_spectrum`` or
    ``propagate``).
    """


class TruncationFailure(RuntimeError):
    """The Kraus series did not reach the requested completeness in time."""


class StepTooLarge(ValueError):
    """The fixed-step integrator was asked for a step beyond its stability guard."""


class NoDephasing(ValueError):
    """An asymptotic quantity was requested with ``gamma == 0``."""


class NotXState(ValueError):
    """A matrix expected to have the X pattern carries other nonzero entries."""


class InvalidScenario(ValueError):
    """A scenario is internally inconsistent."""


class ParseError(InvalidScenario):
    """A config file could not be parsed."""

    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class ValidationError(InvalidScenario):
    """A config value violates a documented constraint."""
