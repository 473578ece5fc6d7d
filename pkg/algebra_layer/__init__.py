"""
Algebra Layer Module

Exact arithmetic and the type-B Jordan algebra:
- Rationals over QQ and polynomials in the central parameter r
- The bilinear space (h, (.,.)) given by a non-degenerate Gram matrix
- Rank-one tensors in h⊗h, the associative product, Jordan product and trace
"""

from .models.scalars import (
    CENTRAL_RING,
    CentralPoly,
    PolyOp,
    Rational,
    cpoly_arith,
    cpoly_eval,
    format_rational,
    parse_rational,
    to_rational,
)
from .models.jordan_types import BilinearSpace, Vector, TensorTerm, TensorElement
from .core.jordan_algebra import (
    expand_coordinates,
    jordan_generator,
    jordan_product,
    pairing,
    tensor_product,
    trace,
    trace_of_product,
)
from .exceptions import AlgebraLayerError, ScalarParseError, DimensionMismatchError, DegenerateFormError

__version__ = "1.0.0"
__all__ = [
    "CENTRAL_RING",
    "CentralPoly",
    "PolyOp",
    "Rational",
    "cpoly_arith",
    "cpoly_eval",
    "format_rational",
    "parse_rational",
    "to_rational",
    "BilinearSpace",
    "Vector",
    "TensorTerm",
    "TensorElement",
    "expand_coordinates",
    "jordan_generator",
    "jordan_product",
    "pairing",
    "tensor_product",
    "trace",
    "trace_of_product",
    "AlgebraLayerError",
    "ScalarParseError",
    "DimensionMismatchError",
    "DegenerateFormError",
]
