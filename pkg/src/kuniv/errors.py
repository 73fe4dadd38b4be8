class CapacityError(RuntimeError):
    """The instance exceeds a configured size bound of an exponential algorithm."""
