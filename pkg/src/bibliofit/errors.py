"""Exceptions shared across the package."""


class ValidationError(ValueError):
    """Input data violates a schema rule or field invariant.

    Raised by ingestion, index computation and fitting when the problem lies
    in the data (as opposed to programmer error); the CLI maps it to exit
    code 1.
    """


class UnreachableHError(ValidationError):
    """Requested h exceeds every citation count in the distribution."""
