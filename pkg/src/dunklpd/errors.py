"""Exception and warning types shared across the package."""


class ConfigurationError(ValueError):
    """Invalid dimension, multiplicity vector, or catalog parameter."""


class DomainError(ValueError):
    """Argument outside the mathematical domain of an operation."""


class InputError(ValueError):
    """Structurally invalid user input (duplicate points, bad CSV, ...)."""


class NotInCatalogError(ConfigurationError):
    """Requested a closed-form result for a function that has none registered."""


class AccuracyWarning(UserWarning):
    """Quadrature resolution check suggests the result may be underresolved."""
