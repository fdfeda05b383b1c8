"""Exception types shared across the package."""


class ProtographValidationError(ValueError):
    """A protograph document or sub-block violates a structural constraint.

    ``constraint`` carries the name of the first violated check (e.g.
    "Eq.15a"), which the JSON loader surfaces verbatim.
    """

    def __init__(self, constraint, detail):
        self.constraint = constraint
        super().__init__(f"{constraint}: {detail}")


class ThresholdSearchError(RuntimeError):
    """A threshold bisection detected a non-monotone predicate."""


class NonConvergenceError(RuntimeError):
    """An iteration failed to converge; carries the last two iterates."""

    def __init__(self, message, last=None, prev=None):
        self.last = last
        self.prev = prev
        super().__init__(message)
