"""Exception types shared by every module of the toolkit."""


class DomainError(ValueError):
    """An input lies outside the domain of an operation."""


class CatalogLookupError(KeyError):
    """A knot or CFK record is missing from the catalog."""


class InternalAssertionError(AssertionError):
    """An internal consistency check failed (oracle mismatch, non-square-zero map, ...)."""
