class InputError(ValueError):
    """Malformed or out-of-contract input."""


class ResourceLimitError(RuntimeError):
    """An enumeration cap would be exceeded; raise instead of running unbounded."""
