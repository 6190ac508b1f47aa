"""Exception types shared across the package."""


class CapExceeded(ValueError):
    """A requested instance is larger than the configured degree cap."""


class NotACharacter(ValueError):
    """A class function decomposed with a negative or non-integral multiplicity."""


class StructuralError(RuntimeError):
    """A module model is ill formed, e.g. an action does not preserve the relations."""
