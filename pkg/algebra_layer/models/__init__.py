"""
Data models for the Algebra Layer.
"""

from .scalars import Rational, CentralPoly, PolyOp, to_rational, format_rational, parse_rational, cpoly_arith, cpoly_eval
from .jordan_types import BilinearSpace, Vector, TensorTerm, TensorElement
