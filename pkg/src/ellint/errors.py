class DomainError(ValueError):
    """Argument outside the domain where the function is defined or supported."""


class ConvergenceError(ArithmeticError):
    """A series hit its term cap before reaching the requested tolerance."""


class WitnessNotFound(LookupError):
    """No violation of a perturbed inequality inside the search grid."""
