"""
Custom exceptions for the Algebra Layer module.
"""


class AlgebraLayerError(Exception):
    """Base exception for Algebra Layer module."""
    pass


class ScalarParseError(AlgebraLayerError):
    """Raised when a value cannot be read as an exact rational."""
    pass


class DimensionMismatchError(AlgebraLayerError):
    """Raised when vectors or tensors of different dimensions are combined."""
    pass


class DegenerateFormError(AlgebraLayerError):
    """Raised when a Gram matrix is not symmetric or not invertible."""
    pass
