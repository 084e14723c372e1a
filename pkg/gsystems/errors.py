"""
Root of the gsystems exception hierarchy. Every sub-package defines its own
errors next to the code that raises them and derives them from GSystemsError,
so callers can catch everything the library raises with a single clause.
"""

__all__ = ("GSystemsError",)


class GSystemsError(Exception):
    """
    Base class for every error raised by gsystems.
    """
