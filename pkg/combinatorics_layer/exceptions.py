"""
Custom exceptions for the Combinatorics Layer module.
"""


class CombinatoricsError(Exception):
    """Base exception for Combinatorics Layer module."""
    pass


class InvalidDerangementError(CombinatoricsError):
    """Raised when a permutation is malformed or has a fixed point."""
    pass


class InvalidDiagramError(CombinatoricsError):
    """Raised when an edge set is not a perfect matching without within-pair edges."""
    pass


class UndefinedContractionError(CombinatoricsError):
    """Raised when the diagram-to-derangement map is requested for fewer than two pairs."""
    pass
