class InvalidObjectError(ValueError):
    """An input object violates one of its defining invariants."""
