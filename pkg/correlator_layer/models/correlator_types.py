"""
Data type definitions for correlator term lists and their Laurent expansions.

Variables follow one convention throughout: z_i belongs to the endpoint a_i and w_i
to the endpoint b_i of the i-th pair.
"""

import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from algebra_layer import (
    BilinearSpace,
    CentralPoly,
    Rational,
    TensorElement,
    Vector,
    format_rational,
    jordan_generator,
)
from combinatorics_layer import Derangement, Diagram, Endpoint, Side
from ..exceptions import CorrelatorLayerError, ExpansionDomainError, TruncationError


class VariableKind(Enum):
    """Formal variable attached to side A (z) or side B (w) of a pair."""
    Z = "z"
    W = "w"


@dataclass(frozen=True)
class VariableTag:
    """A formal variable z_i or w_i."""
    kind: VariableKind
    index: int

    @classmethod
    def z(cls, index: int) -> "VariableTag":
        return cls(VariableKind.Z, index)

    @classmethod
    def w(cls, index: int) -> "VariableTag":
        return cls(VariableKind.W, index)

    @classmethod
    def for_endpoint(cls, endpoint: Endpoint) -> "VariableTag":
        kind = VariableKind.Z if endpoint.side is Side.A else VariableKind.W
        return cls(kind, endpoint.pair)

    @classmethod
    def parse(cls, name: str) -> "VariableTag":
        match = re.fullmatch(r"([zw])(\d+)", name.strip())
        if not match:
            raise ExpansionDomainError(f"Unknown variable name: {name!r}")
        return cls(VariableKind(match.group(1)), int(match.group(2)))

    @property
    def name(self) -> str:
        return f"{self.kind.value}{self.index}"

    @property
    def sort_key(self) -> Tuple[int, int]:
        return (self.index, 0 if self.kind is VariableKind.Z else 1)

    def __str__(self) -> str:
        return self.name


def theorem1_domain(n: int) -> Tuple[VariableTag, ...]:
    """The domain |z_1| > ... > |z_n| of the single-variable correlator."""
    return tuple(VariableTag.z(i) for i in range(1, n + 1))


def prop2_domain(n: int) -> Tuple[VariableTag, ...]:
    """Operator-order domain (z_1, w_1, z_2, w_2, ...) of the two-variable correlator."""
    return tuple(tag for i in range(1, n + 1) for tag in (VariableTag.z(i), VariableTag.w(i)))


@dataclass(frozen=True)
class SqDiffFactor:
    """The factor 1/(left - right)^(2·multiplicity)."""
    left: VariableTag
    right: VariableTag
    multiplicity: int = 1

    def __post_init__(self):
        if self.left == self.right:
            raise CorrelatorLayerError(f"Squared difference of {self.left} with itself")
        if self.multiplicity < 1:
            raise CorrelatorLayerError("Factor multiplicity must be positive")

    @property
    def power(self) -> int:
        return 2 * self.multiplicity

    @property
    def key(self) -> frozenset:
        """Unordered variable pair; the sign of the difference never matters."""
        return frozenset((self.left, self.right))

    def to_json(self) -> List[Any]:
        return [self.left.name, self.right.name, self.power]

    def __str__(self) -> str:
        return f"({self.left}-{self.right})^{self.power}"


def merge_factors(factors: Iterable[SqDiffFactor]) -> Tuple[SqDiffFactor, ...]:
    """Merge factors over the same variable pair, keeping first orientation and order."""
    merged: Dict[frozenset, SqDiffFactor] = {}
    for factor in factors:
        known = merged.get(factor.key)
        if known is None:
            merged[factor.key] = factor
        else:
            merged[factor.key] = SqDiffFactor(known.left, known.right, known.multiplicity + factor.multiplicity)
    return tuple(merged.values())


@dataclass(frozen=True)
class PairSequence:
    """The sequence T = (a_1, b_1) ... (a_n, b_n) of vector pairs in one space."""
    space: BilinearSpace
    pairs: Tuple[Tuple[Vector, Vector], ...]

    def __post_init__(self):
        for a, b in self.pairs:
            self.space.check_vector(a)
            self.space.check_vector(b)

    @classmethod
    def virasoro(cls, n: int, norm: Any = 1) -> "PairSequence":
        """d = 1 data with every pair equal to (e, e); (e, e) = norm."""
        space = BilinearSpace.from_rows([[norm]])
        e = Vector.of([1])
        return cls(space, tuple((e, e) for _ in range(n)))

    @property
    def n(self) -> int:
        return len(self.pairs)

    def pair(self, index: int) -> Tuple[Vector, Vector]:
        """The 1-based pair (a_i, b_i)."""
        return self.pairs[index - 1]

    def vector(self, endpoint: Endpoint) -> Vector:
        a, b = self.pair(endpoint.pair)
        return a if endpoint.side is Side.A else b

    def generator(self, index: int) -> TensorElement:
        """L_{a_i, b_i} for the 1-based pair index."""
        a, b = self.pair(index)
        return jordan_generator(a, b)

    def permuted(self, order: Sequence[int]) -> "PairSequence":
        """The sequence whose k-th pair is the order[k]-th pair of this one (1-based labels)."""
        return PairSequence(self.space, tuple(self.pair(i) for i in order))

    def to_json(self) -> Dict[str, Any]:
        data = self.space.to_json()
        data["pairs"] = [[a.to_json(), b.to_json()] for a, b in self.pairs]
        return data


@dataclass(frozen=True)
class CorrelatorTerm:
    """
    One summand coefficient / ∏ (left - right)^(2·multiplicity).

    ``label`` carries the cycle notation of the derangement the term belongs to, and
    ``diagram`` the diagram for two-variable terms.
    """
    coefficient: CentralPoly
    denominator: Tuple[SqDiffFactor, ...]
    label: str = ""
    diagram: Optional[Diagram] = None

    @property
    def r_power(self) -> Optional[int]:
        monomial = self.coefficient.as_monomial()
        return monomial[1] if monomial else None

    @property
    def variables(self) -> List[VariableTag]:
        found: Dict[VariableTag, None] = {}
        for factor in self.denominator:
            found.setdefault(factor.left)
            found.setdefault(factor.right)
        return list(found)

    def merged_denominator(self) -> Tuple[SqDiffFactor, ...]:
        return merge_factors(self.denominator)

    def substitute(self, renames: Dict[VariableTag, VariableTag]) -> "CorrelatorTerm":
        """Rename variables, e.g. w_i -> z_i on the diagonal."""
        return CorrelatorTerm(
            self.coefficient,
            tuple(
                SqDiffFactor(renames.get(f.left, f.left), renames.get(f.right, f.right), f.multiplicity)
                for f in self.denominator
            ),
            self.label,
            self.diagram,
        )

    def to_json(self) -> Dict[str, Any]:
        monomial = self.coefficient.as_monomial()
        data: Dict[str, Any] = {"cycles": self.label}
        if monomial is not None:
            data["r_power"] = monomial[1]
            data["coefficient"] = format_rational(monomial[0])
        else:
            data["r_power"] = None
            data["coefficient"] = self.coefficient.to_json()
        data["denominator"] = [factor.to_json() for factor in self.merged_denominator()]
        if self.diagram is not None:
            data["diagram"] = self.diagram.to_json()
        return data


@dataclass(frozen=True)
class SymbolicTerm:
    """A derangement-sum summand with its traces left unevaluated."""
    derangement: Derangement
    prefactor: Rational
    r_power: int
    trace_words: Tuple[Tuple[int, ...], ...]

    def denominator(self) -> Tuple[SqDiffFactor, ...]:
        sigma = self.derangement
        return merge_factors(
            SqDiffFactor(VariableTag.z(i), VariableTag.z(sigma(i)))
            for cycle in sigma.cycles for i in cycle
        )

    def trace_text(self) -> str:
        return "".join(
            "Tr(" + "".join(f"L{i}" for i in word) + ")" for word in self.trace_words
        )

    def to_json(self) -> Dict[str, Any]:
        return {
            "cycles": self.derangement.notation,
            "r_power": self.r_power,
            "coefficient": format_rational(self.prefactor),
            "traces": [list(word) for word in self.trace_words],
            "denominator": [factor.to_json() for factor in self.denominator()],
        }


class EdgeKind(Enum):
    """Edge functions of a diagram: K carries only the denominator, Q the pairing too."""
    K = "K"
    Q = "Q"


@dataclass(frozen=True)
class EdgeWeight:
    """coefficient / (left - right)^2 for one edge."""
    coefficient: Rational
    factor: SqDiffFactor


def cut_degree(exponents: Sequence[int], multiplicities: Sequence[int]) -> int:
    """
    Largest suffix sum of e_v + μ_v over the domain order.

    For a correlator this is the largest grading met by the intermediate states, so it
    is the truncation measure of ``iota_expand``; the empty suffix counts as 0.
    """
    best = 0
    running = 0
    for exponent, mu in zip(reversed(exponents), reversed(multiplicities)):
        running += exponent + mu
        best = max(best, running)
    return best


@dataclass
class LaurentSeries:
    """
    Truncated ι-expansion in the domain |v_1| > |v_2| > ... of the listed variables.

    ``coeffs`` holds every nonzero coefficient whose exponent tuple has cut degree at
    most ``bound``; inside the bound an absent tuple is an exact zero.
    """
    variables: Tuple[VariableTag, ...]
    multiplicities: Tuple[int, ...]
    bound: int
    coeffs: Dict[Tuple[int, ...], CentralPoly] = field(default_factory=dict)

    def cut_degree(self, exponents: Sequence[int]) -> int:
        return cut_degree(exponents, self.multiplicities)

    def within_bound(self, exponents: Sequence[int]) -> bool:
        return self.cut_degree(exponents) <= self.bound

    def coefficient(self, exponents: Sequence[int]) -> CentralPoly:
        """
        Exact coefficient of ∏ v^e.

        Raises:
            ExpansionDomainError: If the tuple length does not match the domain
            TruncationError: If the tuple lies beyond the truncation bound
        """
        exponents = tuple(exponents)
        if len(exponents) != len(self.variables):
            raise ExpansionDomainError(
                f"Exponent tuple of length {len(exponents)} for {len(self.variables)} variables"
            )
        if not self.within_bound(exponents):
            raise TruncationError(
                f"Coefficient at {exponents} is beyond truncation bound {self.bound} (unknown)"
            )
        return self.coeffs.get(exponents, CentralPoly.zero())

    def items(self) -> List[Tuple[Tuple[int, ...], CentralPoly]]:
        return sorted(self.coeffs.items())

    def __len__(self) -> int:
        return len(self.coeffs)

    def to_json(self) -> Dict[str, Any]:
        return {
            "variables": [v.name for v in self.variables],
            "bound": self.bound,
            "terms": [
                {"exponents": list(exponents), "coeff": coeff.to_json()}
                for exponents, coeff in self.items()
            ],
        }
