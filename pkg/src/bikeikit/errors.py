class BikeiKitError(Exception):
    """Base class for domain errors raised by this package."""


class InputError(BikeiKitError, ValueError):
    """Malformed input: wrong dimensions, out-of-range entries, bad syntax."""


class WorkBoundError(BikeiKitError):
    """A search was refused because it exceeds its configured work bound."""


class Rejection(BikeiKitError):
    """A construction whose defining conditions fail."""

    def __init__(self, message: str, label: str | None = None, witness: tuple = ()):
        super().__init__(message)
        self.label = label
        self.witness = witness
