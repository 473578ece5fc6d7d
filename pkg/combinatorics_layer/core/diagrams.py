"""
Diagrams over a sequence of pairs, their signs, and the contraction map D -> σ_D.

A diagram is a perfect matching on a_1, b_1, ..., a_n, b_n without within-pair
edges. Contracting every pair to a node turns it into a disjoint union of cycles;
orienting each cycle from its smallest label i₁ along the edge at a_{i₁} gives σ_D.
"""

import logging
from functools import lru_cache
from itertools import product
from typing import Dict, Iterator, List, Optional, Tuple

from ..models.diagram_types import Derangement, Diagram, Endpoint, Side, Sign, SignAssignment
from ..exceptions import InvalidDiagramError, UndefinedContractionError

logger = logging.getLogger(__name__)


def _endpoints(n: int) -> List[Endpoint]:
    return [Endpoint(i, side) for i in range(1, n + 1) for side in (Side.A, Side.B)]


def _matchings(free: List[Endpoint], sign: Optional[SignAssignment]) -> Iterator[List[Tuple[Endpoint, Endpoint]]]:
    """
    Backtracking over perfect matchings of ``free`` (kept in endpoint order).

    The within-pair exclusion and, when given, the sign condition (the earlier endpoint
    of an edge is +, the later one -) are applied while searching.
    """
    if not free:
        yield []
        return
    first, rest = free[0], free[1:]
    if sign is not None and sign.sign_of(first) is not Sign.PLUS:
        # every endpoint of an earlier pair is already matched
        return
    for index, candidate in enumerate(rest):
        if candidate.pair == first.pair:
            continue
        if sign is not None and sign.sign_of(candidate) is not Sign.MINUS:
            continue
        for matching in _matchings(rest[:index] + rest[index + 1:], sign):
            yield [(first, candidate)] + matching


@lru_cache(maxsize=None)
def _diagrams(n: int) -> Tuple[Diagram, ...]:
    found = tuple(Diagram(n, tuple(m)) for m in _matchings(_endpoints(n), None))
    logger.debug("Enumerated %d diagrams over %d pairs", len(found), n)
    return found


def enumerate_diagrams(n: int) -> List[Diagram]:
    """All diagrams over n pairs in backtracking (lexicographic) order; n = 0 gives the empty diagram."""
    if n < 0:
        raise InvalidDiagramError("n must be non-negative")
    return list(_diagrams(n))


def induced_sign(diagram: Diagram) -> SignAssignment:
    """The unique sign compatible with the diagram: + on the earlier endpoint of each edge."""
    signs: Dict[Endpoint, Sign] = {}
    for u, v in diagram.edges:
        signs[u] = Sign.PLUS
        signs[v] = Sign.MINUS
    return SignAssignment(tuple(
        (signs[Endpoint(i, Side.A)], signs[Endpoint(i, Side.B)])
        for i in range(1, diagram.n + 1)
    ))


def diagrams_for_sign(n: int, sign: SignAssignment) -> List[Diagram]:
    """Diagrams over n pairs compatible with the sign; possibly empty."""
    if sign.n != n:
        raise InvalidDiagramError(f"Sign of length {sign.n} used for {n} pairs")
    if sign.plus_count() != n:
        return []
    return [Diagram(n, tuple(m)) for m in _matchings(_endpoints(n), sign)]


def all_signs(n: int) -> Iterator[SignAssignment]:
    """The 4ⁿ signs over n pairs, lexicographic with + before -."""
    choices = [(e, d) for e in (Sign.PLUS, Sign.MINUS) for d in (Sign.PLUS, Sign.MINUS)]
    for combination in product(choices, repeat=n):
        yield SignAssignment(tuple(combination))


def diagram_to_derangement(diagram: Diagram) -> Derangement:
    """
    Contract pairs to nodes and orient every cycle to read off σ_D.

    Raises:
        UndefinedContractionError: If the diagram has fewer than two pairs
    """
    if diagram.n < 2:
        raise UndefinedContractionError("σ_D is only defined for diagrams over n ≥ 2 pairs")
    partner = diagram.partner
    image = [0] * diagram.n
    for start in range(1, diagram.n + 1):
        if image[start - 1]:
            continue
        # leave the start node through a_{i₁}; afterwards leave through the mate of the entry point
        exit_point = Endpoint(start, Side.A)
        node = start
        while True:
            entry = partner[exit_point]
            image[node - 1] = entry.pair
            node = entry.pair
            if node == start:
                break
            exit_point = entry.mate
    return Derangement.from_image(image)


def fibre(sigma: Derangement, n: int) -> List[Diagram]:
    """
    All diagrams D with σ_D = σ, built cycle by cycle.

    Walking a cycle i₁ → i₂ → ... → i_t from a_{i₁}, each intermediate pair can be
    entered through a or b while the return to i₁ must land on b_{i₁}, so a cycle of
    length t contributes 2^{t-1} choices and the fibre has 2^{n - c(σ)} diagrams.
    """
    if n < 2 or sigma.n != n:
        raise UndefinedContractionError("The fibre of σ needs a derangement of n ≥ 2 labels")
    per_cycle: List[List[List[Tuple[Endpoint, Endpoint]]]] = []
    for cycle in sigma.cycles:
        options = []
        for entries in product((Side.A, Side.B), repeat=len(cycle) - 1):
            edges = []
            exit_point = Endpoint(cycle[0], Side.A)
            for label, side in zip(cycle[1:], entries):
                entry = Endpoint(label, side)
                edges.append((exit_point, entry))
                exit_point = entry.mate
            edges.append((exit_point, Endpoint(cycle[0], Side.B)))
            options.append(edges)
        per_cycle.append(options)
    diagrams = [
        Diagram(n, tuple(edge for edges in choice for edge in edges))
        for choice in product(*per_cycle)
    ]
    return sorted(diagrams, key=lambda d: [(u.key, v.key) for u, v in d.edges])


def class_fibre(sigma: Derangement, n: int) -> List[Diagram]:
    """
    fibre(σ) together with fibre(σ⁻¹): the diagrams whose unoriented cycles are those of σ.

    A single fibre fixes the edge at a_{i₁} of every cycle, so its Γ-sum is a bilinear
    form in (a_{i₁}, b_{i₁}) that is only symmetric for cycles of length 2. The class
    fibre is the set whose Γ-sum equals Γ(σ,T) + Γ(σ⁻¹,T).
    """
    diagrams = fibre(sigma, n)
    if not sigma.is_involution:
        diagrams = diagrams + fibre(sigma.inverse, n)
    return diagrams


def _merged_pair(survivor_i: Endpoint, survivor_j: Endpoint) -> Tuple[Endpoint, Endpoint]:
    """Order the two survivors of a merge as (new a, new b)."""
    if survivor_i.side is Side.B and survivor_j.side is Side.A:
        return survivor_j, survivor_i
    return survivor_i, survivor_j


def delete_edge(diagram: Diagram, i: int) -> Diagram:
    """
    D - e for the single edge e joining pairs i and i+1.

    The two surviving endpoints form the new i-th pair and later pairs shift down by
    one; for e = {a_i, b_{i+1}} the new pair is (a_{i+1}, b_i).

    Raises:
        InvalidDiagramError: If pairs i and i+1 are not joined by exactly one edge
    """
    between = diagram.edges_between(i, i + 1)
    if len(between) != 1:
        raise InvalidDiagramError(f"Pairs {i} and {i + 1} must share exactly one edge, found {len(between)}")
    removed = between[0]
    u, v = removed
    new_a, new_b = _merged_pair(u.mate, v.mate)
    renames = {new_a: Endpoint(i, Side.A), new_b: Endpoint(i, Side.B)}

    def move(endpoint: Endpoint) -> Endpoint:
        if endpoint in renames:
            return renames[endpoint]
        if endpoint.pair > i + 1:
            return Endpoint(endpoint.pair - 1, endpoint.side)
        return endpoint

    return Diagram(diagram.n - 1, tuple(
        (move(a), move(b)) for a, b in diagram.edges if (a, b) != removed
    ))


def delete_edge_pair(diagram: Diagram, i: int) -> Diagram:
    """
    D - e₁ - e₂ for the two edges joining pairs i and i+1 (a 2-cycle of σ_D).

    Raises:
        InvalidDiagramError: If pairs i and i+1 are not joined by two edges
    """
    between = diagram.edges_between(i, i + 1)
    if len(between) != 2:
        raise InvalidDiagramError(f"Pairs {i} and {i + 1} must share two edges, found {len(between)}")

    def move(endpoint: Endpoint) -> Endpoint:
        if endpoint.pair > i + 1:
            return Endpoint(endpoint.pair - 2, endpoint.side)
        return endpoint

    return Diagram(diagram.n - 2, tuple(
        (move(u), move(v)) for u, v in diagram.edges if (u, v) not in between
    ))
