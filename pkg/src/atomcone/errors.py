"""Exception types shared across the package."""


class SingularConfigError(ValueError):
    """A parameter combination sits exactly on a singular configuration."""


class UndefinedStateError(ValueError):
    """The requested state has zero norm, so no concurrence is defined."""


class QuadratureError(RuntimeError):
    """A quadrature failed to meet its error target.

    Carries the achieved error estimate in ``estimate``.
    """

    def __init__(self, message: str, estimate: float):
        super().__init__(message)
        self.estimate = estimate
