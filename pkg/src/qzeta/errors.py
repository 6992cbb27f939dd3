"""Exception hierarchy shared by the qzeta modules."""


class QZetaError(Exception):
    """Base class for domain errors raised by qzeta."""


class EnumerationBoundError(QZetaError):
    """A finite group would exceed the configured enumeration bound."""


class NotSemiInvariant(QZetaError):
    """Two monomials of a germ carry different weights under the group."""


class NonIntegerExponent(QZetaError):
    """An operation needs integer keys but met a rational one."""


class NotAPolynomial(QZetaError):
    """Exact division left a nonzero remainder."""


class ConventionMismatch(QZetaError):
    """Z-form and Delta-form products were combined."""


class UnsupportedGerm(QZetaError):
    """The germ does not have the shape a pipeline can resolve."""


class ParseError(QZetaError, ValueError):
    def __init__(self, message, text="", position=None):
        self.text = text
        self.position = position
        if position is not None:
            message = f"{message} at position {position}"
            if text:
                message += f"\n  {text}\n  {' ' * position}^"
        super().__init__(message)
