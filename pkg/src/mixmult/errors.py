"""Exception hierarchy shared by every module of the package."""


class MixMultError(Exception):
    """Base class for all errors raised by mixmult."""


class ArityMismatch(MixMultError, ValueError):
    """Exponent vectors, multidegrees or rings of incompatible size."""


class NotMPrimary(MixMultError):
    """The ideal contains no power of some variable."""


class HypothesisViolation(MixMultError):
    """A precondition of the requested invariant does not hold."""


class EmptySupport(HypothesisViolation):
    """Supp_{++} of the module is empty, so the Hilbert polynomial is zero."""


class RankZero(HypothesisViolation):
    """The module has rank zero; the rank formulas do not apply."""


class Unstable(MixMultError):
    """Interpolation never validated within the retry budget."""


class DegreeMismatch(Unstable):
    """Interpolated degree differs from the degree predicted by dimension theory."""


class NonIntegral(MixMultError):
    """A normalized leading coefficient is not an integer."""


class Negative(MixMultError):
    """A normalized leading coefficient is negative."""


class NonIntegralQuotient(MixMultError):
    """An exact division that must produce an integer did not."""


class InfiniteLength(MixMultError):
    """A quotient that should have finite length does not."""


class ScenarioError(MixMultError):
    """Malformed or inconsistent scenario file."""
