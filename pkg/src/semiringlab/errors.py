"""Exception types shared across the package."""


class StructureError(ValueError):
    """Malformed table, bad designation, or an input that fails required laws."""


class CapExceeded(RuntimeError):
    """A construction or enumeration would exceed a configured size cap."""


class HypothesesUnmet(ValueError):
    """An operation's stated preconditions do not hold for the given input."""


class TheoremViolation(AssertionError):
    """A theorem-backed postcondition failed.

    Raised when a verified-hypothesis computation contradicts a result the
    suite treats as certain. Any occurrence is a suite failure, never an
    expected outcome.
    """
