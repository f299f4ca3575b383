"""Exception types shared across the package."""


class CubeMedianError(Exception):
    """Base class for all package errors."""


class InvalidInputError(CubeMedianError, ValueError):
    """Malformed or out-of-domain input.

    Raised for bad generator symbols, mismatched presentations, paths
    that are not edge paths, non-median explicit graphs handed to wall
    machinery, and similar caller mistakes.
    """


class ResourceCapError(CubeMedianError):
    """A configured resource cap was exceeded.

    Ball materialization and convex-hull closure refuse to silently
    truncate; they raise this instead.
    """


class InternalCheckError(CubeMedianError):
    """An internal consistency check failed.

    These checks guard facts that are theorems for valid inputs (for
    example, projections of adjacent vertices are equal or adjacent).
    Seeing this exception means a provider or this library has a bug,
    not that the input was wrong.
    """
