"""
Data type definitions for the bilinear space (h, (.,.)) and tensors in h⊗h.
"""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Dict, Iterable, List, Sequence, Tuple

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from .scalars import Rational, to_rational, format_rational
from ..exceptions import DegenerateFormError, DimensionMismatchError


@dataclass(frozen=True)
class Vector:
    """Coordinates of an element of h in the chosen basis."""
    coords: Tuple[Rational, ...]

    @classmethod
    def of(cls, values: Iterable[Any]) -> "Vector":
        return cls(tuple(to_rational(v) for v in values))

    @classmethod
    def basis(cls, dim: int, index: int) -> "Vector":
        """Return e_index (0-based) of a dim-dimensional space."""
        if not 0 <= index < dim:
            raise DimensionMismatchError(f"Basis index {index} out of range for dimension {dim}")
        return cls(tuple(QQ.one if i == index else QQ.zero for i in range(dim)))

    @classmethod
    def zero(cls, dim: int) -> "Vector":
        return cls(tuple(QQ.zero for _ in range(dim)))

    @property
    def dim(self) -> int:
        return len(self.coords)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def support(self) -> List[Tuple[int, Rational]]:
        """Nonzero (index, coordinate) pairs."""
        return [(i, c) for i, c in enumerate(self.coords) if c]

    def to_json(self) -> List[str]:
        return [format_rational(c) for c in self.coords]


@dataclass(frozen=True)
class BilinearSpace:
    """
    The space h with a non-degenerate symmetric bilinear form given by its Gram matrix.

    Symmetry and non-degeneracy are checked at construction.
    """
    gram: Tuple[Tuple[Rational, ...], ...]

    def __post_init__(self):
        size = len(self.gram)
        if size == 0:
            raise DegenerateFormError("The space must have positive dimension")
        if any(len(row) != size for row in self.gram):
            raise DegenerateFormError("Gram matrix must be square")
        for i in range(size):
            for j in range(i + 1, size):
                if self.gram[i][j] != self.gram[j][i]:
                    raise DegenerateFormError(f"Gram matrix is not symmetric at ({i}, {j})")
        if not self._domain_matrix().det():
            raise DegenerateFormError("Gram matrix is singular; the form must be non-degenerate")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Any]]) -> "BilinearSpace":
        return cls(tuple(tuple(to_rational(v) for v in row) for row in rows))

    @classmethod
    def identity(cls, dim: int) -> "BilinearSpace":
        return cls(tuple(
            tuple(QQ.one if i == j else QQ.zero for j in range(dim)) for i in range(dim)
        ))

    @property
    def dim(self) -> int:
        return len(self.gram)

    def _domain_matrix(self) -> DomainMatrix:
        return DomainMatrix([list(row) for row in self.gram], (len(self.gram), len(self.gram)), QQ)

    @cached_property
    def inverse_gram(self) -> Tuple[Tuple[Rational, ...], ...]:
        """Entries of G^-1, used for the Virasoro element and the weight operator."""
        inverse = self._domain_matrix().inv().to_Matrix()
        return tuple(
            tuple(QQ.from_sympy(inverse[i, j]) for j in range(self.dim))
            for i in range(self.dim)
        )

    def basis_vector(self, index: int) -> Vector:
        return Vector.basis(self.dim, index)

    def check_vector(self, vector: Vector) -> None:
        if vector.dim != self.dim:
            raise DimensionMismatchError(
                f"Vector of dimension {vector.dim} used in a space of dimension {self.dim}"
            )

    def to_json(self) -> Dict[str, Any]:
        return {
            "dim": self.dim,
            "gram": [[format_rational(v) for v in row] for row in self.gram],
        }


@dataclass(frozen=True)
class TensorTerm:
    """One weighted rank-one tensor coeff * (left ⊗ right)."""
    coeff: Rational
    left: Vector
    right: Vector


@dataclass(frozen=True)
class TensorElement:
    """
    A finite sum of weighted rank-one tensors in h⊗h.

    The representation is not canonical; compare elements through traces or
    ``expand_coordinates``.
    """
    terms: Tuple[TensorTerm, ...] = field(default_factory=tuple)

    @classmethod
    def rank_one(cls, left: Vector, right: Vector, coeff: Any = 1) -> "TensorElement":
        return cls((TensorTerm(to_rational(coeff), left, right),))

    def scale(self, factor: Any) -> "TensorElement":
        factor = to_rational(factor)
        if not factor:
            return TensorElement()
        return TensorElement(tuple(
            TensorTerm(t.coeff * factor, t.left, t.right) for t in self.terms
        ))

    def __add__(self, other: "TensorElement") -> "TensorElement":
        return TensorElement(self.terms + other.terms)

    def __len__(self) -> int:
        return len(self.terms)
