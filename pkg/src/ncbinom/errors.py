"""Exception types shared across the package."""


class NcbinomError(Exception):
    """Base class for all package-specific errors."""


class ContextError(NcbinomError):
    """Mixing elements from different algebra contexts, or referencing an
    undeclared generator or parameter."""


class ParseError(NcbinomError):
    """Malformed expression text.

    Carries the zero-based character offset of the offending token in
    ``position``.
    """

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class DimensionError(NcbinomError):
    """Matrix operands whose shapes do not line up."""


class NumericError(NcbinomError):
    """Non-finite data where finite floating-point values are required."""


class SingularMatrixError(NcbinomError):
    """A linear solve against a singular (or numerically singular) matrix."""


class ConvergenceDomainError(NcbinomError):
    """A series evaluation requested outside its certified convergence domain.

    ``bound`` is the certified upper bound on the relevant spectral radius
    and ``abs_lambda`` the magnitude of the shift that failed the gate.
    """

    def __init__(self, bound, abs_lambda):
        super().__init__(
            f"spectral radius bound {bound:.6g} is not below |lambda| = "
            f"{abs_lambda:.6g}; series is not certified to converge"
        )
        self.bound = bound
        self.abs_lambda = abs_lambda
