"""Exception types shared across the package."""


class IharaError(Exception):
    """Base class for every error raised by this package."""


# graph construction / parsing
class GraphError(IharaError, ValueError):
    pass


class DisconnectedGraph(GraphError):
    pass


class IsolatedVertex(GraphError):
    pass


class GraphParseError(GraphError):
    def __init__(self, message, line=None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


# words
class NotLyndon(IharaError, ValueError):
    pass


class TooShort(IharaError, ValueError):
    pass


class GoodMonomial(IharaError, ValueError):
    """The involution is undefined on monomials without a repeated letter."""


class BrokenInvolution(IharaError):
    def __init__(self, message, monomial=None):
        self.monomial = monomial
        super().__init__(message)


# polynomials and matrices
class InexactDivision(IharaError, ArithmeticError):
    """Raised when a division that an identity guarantees to be exact is not.

    ``quotient`` and ``remainder`` satisfy ``dividend = quotient*divisor + remainder``
    so the failure can be inspected downstream.
    """

    def __init__(self, dividend, divisor, quotient=None, remainder=None, context=""):
        self.dividend = dividend
        self.divisor = divisor
        self.quotient = quotient
        self.remainder = remainder
        self.context = context
        msg = f"{dividend} is not divisible by {divisor}"
        if remainder is not None:
            msg += f" (remainder {remainder})"
        if context:
            msg += f" [{context}]"
        super().__init__(msg)


class NotSquare(IharaError, ValueError):
    pass


class SymbolicTooLarge(IharaError, ValueError):
    pass


class NonUnitConstantTerm(IharaError, ValueError):
    pass


class BadFactor(IharaError, ValueError):
    pass


class DimensionMismatch(IharaError, ValueError):
    pass


class ScaleGuard(IharaError, ValueError):
    """Requested parameters exceed the hard limits of a verifier."""
