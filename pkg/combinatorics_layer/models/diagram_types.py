"""
Data type definitions for derangements, diagrams and signs over a sequence of pairs.

Pairs are labelled 1..n. The endpoints of pair i are a_i (side A) and b_i (side B).
"""

import re
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Any, Dict, Iterable, List, Sequence, Tuple

from sympy.combinatorics import Permutation

from ..exceptions import InvalidDerangementError, InvalidDiagramError


class Side(Enum):
    """Which member of a pair an endpoint is."""
    A = "a"
    B = "b"

    @property
    def other(self) -> "Side":
        return Side.B if self is Side.A else Side.A


class Sign(Enum):
    """Sign of an endpoint: + for annihilating modes, - for creating modes."""
    PLUS = "+"
    MINUS = "-"


@dataclass(frozen=True)
class Endpoint:
    """One vertex a_i or b_i of a diagram."""
    pair: int
    side: Side

    @classmethod
    def parse(cls, label: str) -> "Endpoint":
        match = re.fullmatch(r"([ab])(\d+)", label.strip())
        if not match:
            raise InvalidDiagramError(f"Invalid endpoint label: {label!r}")
        return cls(int(match.group(2)), Side(match.group(1)))

    @property
    def key(self) -> Tuple[int, int]:
        """Sort key: a_1 < b_1 < a_2 < b_2 < ..."""
        return (self.pair, 0 if self.side is Side.A else 1)

    @property
    def mate(self) -> "Endpoint":
        """The other endpoint of the same pair."""
        return Endpoint(self.pair, self.side.other)

    @property
    def label(self) -> str:
        return f"{self.side.value}{self.pair}"

    def __str__(self) -> str:
        return self.label


def _cycle_text(cycle: Sequence[int], separated: bool) -> str:
    if separated:
        return "(" + ",".join(str(i) for i in cycle) + ")"
    return "(" + "".join(str(i) for i in cycle) + ")"


@dataclass(frozen=True)
class Derangement:
    """
    A fixed-point-free permutation of {1..n}.

    ``image[i - 1]`` is σ(i). ``cycles`` is the disjoint-cycle decomposition with each
    cycle rotated to start at its smallest label and cycles sorted by that label.
    """
    image: Tuple[int, ...]
    cycles: Tuple[Tuple[int, ...], ...]

    @classmethod
    def from_image(cls, image: Sequence[int]) -> "Derangement":
        """
        Build from the one-line notation σ(1) ... σ(n).

        Raises:
            InvalidDerangementError: If the image is not a permutation or has a fixed point
        """
        image = tuple(int(v) for v in image)
        n = len(image)
        if sorted(image) != list(range(1, n + 1)):
            raise InvalidDerangementError(f"Not a permutation of 1..{n}: {image}")
        fixed = [i for i in range(1, n + 1) if image[i - 1] == i]
        if fixed:
            raise InvalidDerangementError(f"Permutation has fixed points {fixed}")
        if n == 0:
            return cls((), ())
        cyclic = Permutation([v - 1 for v in image]).cyclic_form
        cycles = tuple(tuple(i + 1 for i in cycle) for cycle in cyclic)
        return cls(image, cycles)

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], n: int) -> "Derangement":
        image = list(range(1, n + 1))
        for cycle in cycles:
            for position, label in enumerate(cycle):
                if not 1 <= label <= n:
                    raise InvalidDerangementError(f"Label {label} out of range 1..{n}")
                image[label - 1] = cycle[(position + 1) % len(cycle)]
        return cls.from_image(image)

    @property
    def n(self) -> int:
        return len(self.image)

    @property
    def cycle_count(self) -> int:
        return len(self.cycles)

    def __call__(self, label: int) -> int:
        return self.image[label - 1]

    @property
    def notation(self) -> str:
        """Cycle notation such as "(12)(3564)"; labels are comma-separated when n ≥ 10."""
        separated = self.n >= 10
        return "".join(_cycle_text(cycle, separated) for cycle in self.cycles)

    @property
    def inverse(self) -> "Derangement":
        image = [0] * self.n
        for i, j in enumerate(self.image, start=1):
            image[j - 1] = i
        return Derangement.from_image(image)

    @property
    def is_involution(self) -> bool:
        return all(len(cycle) == 2 for cycle in self.cycles)

    def cycle_type(self) -> Tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles), reverse=True))

    def to_dict(self) -> Dict[str, Any]:
        return {"image": list(self.image), "cycles": self.notation}

    def __str__(self) -> str:
        return self.notation


Edge = Tuple[Endpoint, Endpoint]


def _normalize_edge(u: Endpoint, v: Endpoint) -> Edge:
    return (u, v) if u.key < v.key else (v, u)


@dataclass(frozen=True)
class Diagram:
    """
    A perfect matching on the 2n endpoints with no edge inside a pair.

    Edges are stored normalized (smaller endpoint first) and sorted.
    """
    n: int
    edges: Tuple[Edge, ...]

    def __post_init__(self):
        normalized = tuple(sorted(
            (_normalize_edge(u, v) for u, v in self.edges),
            key=lambda e: (e[0].key, e[1].key),
        ))
        object.__setattr__(self, "edges", normalized)
        if len(normalized) != self.n:
            raise InvalidDiagramError(f"A diagram over {self.n} pairs needs {self.n} edges, got {len(normalized)}")
        seen = set()
        for u, v in normalized:
            for endpoint in (u, v):
                if not 1 <= endpoint.pair <= self.n:
                    raise InvalidDiagramError(f"Endpoint {endpoint} outside pairs 1..{self.n}")
                if endpoint in seen:
                    raise InvalidDiagramError(f"Endpoint {endpoint} is covered twice")
                seen.add(endpoint)
            if u.pair == v.pair:
                raise InvalidDiagramError(f"Edge {{{u},{v}}} joins two endpoints of the same pair")

    @classmethod
    def from_labels(cls, n: int, edges: Iterable[Sequence[str]]) -> "Diagram":
        """Build from edges written as label pairs, e.g. [["a1", "b2"], ...]."""
        return cls(n, tuple((Endpoint.parse(u), Endpoint.parse(v)) for u, v in edges))

    @cached_property
    def partner(self) -> Dict[Endpoint, Endpoint]:
        """Endpoint -> the endpoint it is matched with."""
        matched: Dict[Endpoint, Endpoint] = {}
        for u, v in self.edges:
            matched[u] = v
            matched[v] = u
        return matched

    def edges_between(self, i: int, j: int) -> List[Edge]:
        return [e for e in self.edges if {e[0].pair, e[1].pair} == {i, j}]

    def to_json(self) -> List[List[str]]:
        return [[u.label, v.label] for u, v in self.edges]

    def __str__(self) -> str:
        return "{" + ", ".join(f"{{{u},{v}}}" for u, v in self.edges) + "}"


@dataclass(frozen=True)
class SignAssignment:
    """A sign (ε_i, δ_i) for the endpoints (a_i, b_i) of every pair."""
    signs: Tuple[Tuple[Sign, Sign], ...]

    @classmethod
    def parse(cls, text: str) -> "SignAssignment":
        """Parse the "(++)(-+)..." notation (a typographic minus is accepted)."""
        cleaned = text.replace("−", "-").replace(" ", "")
        groups = re.findall(r"\(([+-])([+-])\)", cleaned)
        if "".join(f"({e}{d})" for e, d in groups) != cleaned:
            raise InvalidDiagramError(f"Invalid sign notation: {text!r}")
        return cls(tuple((Sign(e), Sign(d)) for e, d in groups))

    @property
    def n(self) -> int:
        return len(self.signs)

    def sign_of(self, endpoint: Endpoint) -> Sign:
        epsilon, delta = self.signs[endpoint.pair - 1]
        return epsilon if endpoint.side is Side.A else delta

    @property
    def notation(self) -> str:
        return "".join(f"({e.value}{d.value})" for e, d in self.signs)

    def plus_count(self) -> int:
        return sum((e is Sign.PLUS) + (d is Sign.PLUS) for e, d in self.signs)

    def __str__(self) -> str:
        return self.notation
