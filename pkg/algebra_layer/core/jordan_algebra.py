"""
Tensor algebra on h⊗h and the type-B Jordan algebra of symmetric tensors.

Products follow the rank-one rule (a⊗b)(u⊗v) = (b,u) a⊗v and the trace is
Tr(a⊗b) = (a,b). Only the bilinear form ever enters, so non-orthonormal Gram
matrices are supported throughout.
"""

import logging
from typing import Dict, List, Sequence, Tuple

from sympy.polys.domains import QQ

from ..models.scalars import Rational
from ..models.jordan_types import BilinearSpace, TensorElement, TensorTerm, Vector
from ..exceptions import DimensionMismatchError

logger = logging.getLogger(__name__)

HALF = QQ(1, 2)


def pairing(a: Vector, b: Vector, space: BilinearSpace) -> Rational:
    """
    Evaluate the bilinear form (a, b) = aᵀ G b.

    Raises:
        DimensionMismatchError: If a vector does not live in the space
    """
    space.check_vector(a)
    space.check_vector(b)
    total = QQ.zero
    gram = space.gram
    for i, ai in a.support():
        row = gram[i]
        for j, bj in b.support():
            if row[j]:
                total += ai * row[j] * bj
    return total


def jordan_generator(a: Vector, b: Vector) -> TensorElement:
    """Return L_{a,b} = a⊗b + b⊗a as a two-term tensor."""
    if a.dim != b.dim:
        raise DimensionMismatchError("L_{a,b} needs vectors of equal dimension")
    return TensorElement((TensorTerm(QQ.one, a, b), TensorTerm(QQ.one, b, a)))


def _collect(terms: List[TensorTerm]) -> TensorElement:
    """Merge terms with identical (left, right) and prune zero coefficients."""
    merged: Dict[Tuple[Vector, Vector], Rational] = {}
    for term in terms:
        key = (term.left, term.right)
        merged[key] = merged.get(key, QQ.zero) + term.coeff
    return TensorElement(tuple(
        TensorTerm(coeff, left, right)
        for (left, right), coeff in merged.items()
        if coeff and not left.is_zero() and not right.is_zero()
    ))


def _check_element(x: TensorElement, space: BilinearSpace) -> None:
    for term in x.terms:
        space.check_vector(term.left)
        space.check_vector(term.right)


def tensor_product(x: TensorElement, y: TensorElement, space: BilinearSpace) -> TensorElement:
    """
    Associative product on h⊗h, the bilinear extension of (a⊗b)(u⊗v) = (b,u) a⊗v.

    Raises:
        DimensionMismatchError: If a factor does not live in the space
    """
    _check_element(x, space)
    _check_element(y, space)
    products = []
    for s in x.terms:
        for t in y.terms:
            weight = pairing(s.right, t.left, space)
            if weight:
                products.append(TensorTerm(s.coeff * t.coeff * weight, s.left, t.right))
    return _collect(products)


def jordan_product(x: TensorElement, y: TensorElement, space: BilinearSpace) -> TensorElement:
    """Jordan product x∘y = ½(xy + yx)."""
    return _collect(list((tensor_product(x, y, space) + tensor_product(y, x, space)).scale(HALF).terms))


def trace(x: TensorElement, space: BilinearSpace) -> Rational:
    """Tr(Σ c·a⊗b) = Σ c·(a, b)."""
    _check_element(x, space)
    total = QQ.zero
    for term in x.terms:
        total += term.coeff * pairing(term.left, term.right, space)
    return total


def trace_of_product(factors: Sequence[TensorElement], space: BilinearSpace) -> Rational:
    """
    Trace of the ordered product of the factors.

    The empty product is the identity of h⊗h, whose trace is dim h.
    """
    if not factors:
        return QQ(space.dim)
    product = factors[0]
    for factor in factors[1:]:
        product = tensor_product(product, factor, space)
        if not product.terms:
            return QQ.zero
    return trace(product, space)


def expand_coordinates(x: TensorElement, dim: int) -> Tuple[Tuple[Rational, ...], ...]:
    """Coordinate matrix M with x = Σ M[i][j] e_i⊗e_j (used to compare representations)."""
    matrix = [[QQ.zero] * dim for _ in range(dim)]
    for term in x.terms:
        if term.left.dim != dim or term.right.dim != dim:
            raise DimensionMismatchError("Tensor term does not match the requested dimension")
        for i, li in term.left.support():
            for j, rj in term.right.support():
                matrix[i][j] += term.coeff * li * rj
    return tuple(tuple(row) for row in matrix)
