"""Package-wide exception types."""


class VerificationError(Exception):
    """A property that should hold was found violated during a run."""
