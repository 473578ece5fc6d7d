"""
Data type definitions for the quadratic Lie algebra 𝔏 = 𝔅 ⊕ ℂc and its module M_r.

Generators L_{e_i,e_j}(m,n) = ½:e_i(m)e_j(n): carry basis indices of h. Since
L_{a,b}(m,n) = L_{b,a}(n,m), every generator is stored with (i, m) ≤ (j, n).
"""

from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Mapping, Optional, Tuple

from algebra_layer import CentralPoly


@dataclass(frozen=True, order=True)
class QuadGenerator:
    """L_{e_i,e_j}(m,n) in canonical orientation."""
    i: int
    m: int
    j: int
    n: int

    @classmethod
    def make(cls, i: int, m: int, j: int, n: int) -> "QuadGenerator":
        if (i, m) <= (j, n):
            return cls(i, m, j, n)
        return cls(j, n, i, m)

    @property
    def is_creation(self) -> bool:
        """True for 𝔅₋ (both modes negative); everything else lies in 𝔅₊."""
        return self.m < 0 and self.n < 0

    @property
    def shift(self) -> int:
        """Applying the generator lowers the degree by m + n."""
        return self.m + self.n

    def to_json(self) -> List[int]:
        return [self.i, self.m, self.j, self.n]

    def __str__(self) -> str:
        return f"L(e{self.i + 1},e{self.j + 1})({self.m},{self.n})"


# A PBW monomial of creation generators, kept sorted (𝔅₋ is abelian)
Monomial = Tuple[QuadGenerator, ...]


def monomial_degree(monomial: Monomial) -> int:
    return -sum(g.shift for g in monomial)


def insert_generator(monomial: Monomial, generator: QuadGenerator) -> Monomial:
    return tuple(sorted(monomial + (generator,)))


@dataclass(frozen=True)
class QuadElement:
    """An element Σ coeff·gen + central·c of 𝔏, with generators sorted and zero terms pruned."""
    quad: Tuple[Tuple[QuadGenerator, CentralPoly], ...] = ()
    central: CentralPoly = field(default_factory=CentralPoly.zero)

    @classmethod
    def from_parts(cls, quad: Mapping[QuadGenerator, CentralPoly],
                   central: Optional[CentralPoly] = None) -> "QuadElement":
        return cls(
            tuple(sorted((g, c) for g, c in quad.items() if c)),
            central if central is not None else CentralPoly.zero(),
        )

    @classmethod
    def generator(cls, gen: QuadGenerator, coeff: Any = 1) -> "QuadElement":
        return cls.from_parts({gen: CentralPoly.constant(coeff) if not isinstance(coeff, CentralPoly) else coeff})

    def as_dict(self) -> Dict[QuadGenerator, CentralPoly]:
        return dict(self.quad)

    def scale(self, factor: Any) -> "QuadElement":
        return QuadElement.from_parts(
            {g: c * factor for g, c in self.quad},
            self.central * factor,
        )

    def __add__(self, other: "QuadElement") -> "QuadElement":
        merged = self.as_dict()
        for g, c in other.quad:
            merged[g] = merged.get(g, CentralPoly.zero()) + c
        return QuadElement.from_parts(merged, self.central + other.central)

    def __neg__(self) -> "QuadElement":
        return self.scale(-1)

    def __bool__(self) -> bool:
        return bool(self.quad) or bool(self.central)

    def to_json(self) -> Dict[str, Any]:
        return {
            "quad": [{"gen": g.to_json(), "coeff": c.to_json()} for g, c in self.quad],
            "central": self.central.to_json(),
        }


@dataclass(frozen=True)
class FockState:
    """
    A finite combination of PBW monomials applied to the vacuum.

    The empty monomial is the vacuum 1. Coefficients are polynomials in r and are
    never zero.
    """
    terms: Mapping[Monomial, CentralPoly] = field(default_factory=dict)

    @classmethod
    def from_terms(cls, terms: Mapping[Monomial, CentralPoly]) -> "FockState":
        return cls({mono: coeff for mono, coeff in terms.items() if coeff})

    @classmethod
    def vacuum(cls) -> "FockState":
        return cls({(): CentralPoly.one()})

    @classmethod
    def zero(cls) -> "FockState":
        return cls({})

    @classmethod
    def monomial(cls, generators: Iterable[QuadGenerator], coeff: Any = 1) -> "FockState":
        mono = tuple(sorted(generators))
        if any(not g.is_creation for g in mono):
            raise ValueError("PBW monomials only contain generators with both modes negative")
        value = coeff if isinstance(coeff, CentralPoly) else CentralPoly.constant(coeff)
        return cls.from_terms({mono: value})

    def degree(self) -> int:
        """Largest monomial degree; -1 for the zero state."""
        return max((monomial_degree(mono) for mono in self.terms), default=-1)

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def vacuum_coeff(self) -> CentralPoly:
        return self.terms.get((), CentralPoly.zero())

    def __add__(self, other: "FockState") -> "FockState":
        merged = dict(self.terms)
        for mono, coeff in other.terms.items():
            merged[mono] = merged.get(mono, CentralPoly.zero()) + coeff
        return FockState.from_terms(merged)

    def __sub__(self, other: "FockState") -> "FockState":
        return self + other.scale(-1)

    def scale(self, factor: Any) -> "FockState":
        return FockState.from_terms({mono: coeff * factor for mono, coeff in self.terms.items()})

    def __len__(self) -> int:
        return len(self.terms)

    def to_json(self) -> List[Dict[str, Any]]:
        return [
            {"monomial": [g.to_json() for g in mono], "coeff": coeff.to_json()}
            for mono, coeff in sorted(self.terms.items())
        ]


@dataclass
class Prop1Report:
    """Outcome of comparing commutators with the closed commutation formulas."""
    checked: int = 0
    mismatches: int = 0
    first_discrepancy: Optional[Dict[str, Any]] = None

    @property
    def passed(self) -> bool:
        return self.mismatches == 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "checked": self.checked,
            "mismatches": self.mismatches,
            "passed": self.passed,
            "first_discrepancy": self.first_discrepancy,
        }
