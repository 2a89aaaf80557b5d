"""Exception types shared across the library."""


class PolystabError(Exception):
    """Base class for every error raised by polystab."""


class LengthMismatch(PolystabError):
    """Coefficient list length does not match the declared degree."""


class NonFiniteCoefficient(PolystabError):
    """A float-domain coefficient is NaN or infinite."""


class IndexOutOfRange(PolystabError):
    """Requested Hurwitz minor index lies outside 1..degree."""


class DegreeTooSmall(PolystabError):
    """Operation requires a polynomial of higher degree."""


class PreconditionUnmet(PolystabError):
    """The hypotheses of a conditional rule do not hold for this input."""


class NonPositiveBox(PolystabError):
    """Interval box admits non-positive coefficients."""


class NoConvergence(PolystabError):
    """Root iteration failed both the update and the residual criteria."""


class ParseError(PolystabError):
    """Malformed user input: coefficients, bounds file, or request fields."""
