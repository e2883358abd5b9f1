class InputError(ValueError):
    """Malformed or out-of-contract input."""


class ValidationError(InputError):
    """A structure failed validation (complex, group, model...)."""


class ConsistencyError(AssertionError):
    """Two independent computations disagree.  Indicates a bug."""
