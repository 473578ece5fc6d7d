"""
Custom exceptions for the Correlator Layer module.
"""


class CorrelatorLayerError(Exception):
    """Base exception for Correlator Layer module."""
    pass


class PoleError(CorrelatorLayerError):
    """Raised when a denominator factor vanishes at the evaluation point."""
    pass


class ExpansionDomainError(CorrelatorLayerError):
    """Raised when a term cannot be expanded in the declared domain."""
    pass


class TruncationError(CorrelatorLayerError):
    """Raised when a coefficient beyond the truncation bound is requested."""
    pass
