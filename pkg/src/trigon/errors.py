"""Exception types shared across the package."""


class TrigonError(Exception):
    pass


class DivisibilityError(TrigonError, ValueError):
    pass


class ZeroInversionError(TrigonError, ZeroDivisionError):
    pass


class MixedFieldError(TrigonError, ValueError):
    pass


class MixedContextError(TrigonError, ValueError):
    pass


class InternalInvariantError(TrigonError, AssertionError):
    pass


class NotFiniteError(TrigonError, ValueError):
    pass


class WordSyntaxError(TrigonError, ValueError):
    pass


class OrbifoldSyntaxError(TrigonError, ValueError):
    pass


class CapExceeded(TrigonError, RuntimeError):
    """Coset enumeration hit ``max_cosets``; ``high_water`` is the peak count."""

    def __init__(self, high_water, max_cosets):
        super().__init__(
            "coset enumeration exceeded %d cosets (high-water mark %d)"
            % (max_cosets, high_water))
        self.high_water = high_water
        self.max_cosets = max_cosets


class InconsistentCoverError(TrigonError, ValueError):
    pass


class IllegalFillError(TrigonError, ValueError):
    pass


class InvalidParams(TrigonError, ValueError):
    def __init__(self, violations):
        super().__init__("; ".join(violations))
        self.violations = list(violations)


class NotFoundWithinBounds(TrigonError, LookupError):
    def __init__(self, message, states_explored=0):
        super().__init__(message)
        self.states_explored = states_explored


class ReportedFailure(TrigonError, RuntimeError):
    def __init__(self, report):
        super().__init__("verification failed: " + ", ".join(report.failures))
        self.report = report
