"""Exception types shared across the solver modules."""


class DomainError(ValueError):
    """Input outside the mathematical domain of an operation."""


class SingularPointError(ArithmeticError):
    """Evaluation requested at (or too close to) a pole or zero."""


class OrderingError(ValueError):
    """No valid turning-point ordering 0 < x1 < x2 at the given x2."""


class BracketError(RuntimeError):
    """Root bracketing failed: no sign change in the scanned range."""


class NonConvergenceError(RuntimeError):
    """An iterative scheme failed to reach its tolerance."""


class NoValidRootError(RuntimeError):
    """Every candidate branch failed the post-condition checks."""


class DegenerateDifferenceError(ValueError):
    """Consecutive values coincide; a convergence rate is undefined."""


class UnsupportedOrderError(ValueError):
    """Quantization orders beyond j = 1 are not implemented."""
