"""
Custom exceptions for the Oracle Layer module.
"""


class OracleError(Exception):
    """Base exception for Oracle Layer module."""
    pass


class RecursionDepthError(OracleError):
    """Raised when commuting a generator through a monomial exceeds the depth guard."""
    pass


class ModeWindowError(OracleError):
    """Raised when requested modes fall outside a usable window."""
    pass
