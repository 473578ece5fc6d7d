"""
The diagram sum for the two-variable correlator of the series L_{a_i,b_i}(z_i, w_i).

A diagram D contributes R(D;Z,W) = Γ(D) 2^{-n} r^{c(σ_D)} ∏_e K(e;Z,W), which is
r^{c(σ_D)} ∏_e Q(e;Z,W). Restricting to the diagrams compatible with a sign gives the
signed correlators, and putting w_i = z_i collapses the sum onto the derangement sum
once the terms of σ and σ⁻¹ are merged.
"""

import logging
from typing import List, Optional, Sequence

from sympy.polys.domains import QQ

from algebra_layer import CentralPoly, Rational, pairing
from combinatorics_layer import (
    Diagram,
    SignAssignment,
    diagram_to_derangement,
    diagrams_for_sign,
    enumerate_diagrams,
)
from combinatorics_layer.models.diagram_types import Edge
from ..models.correlator_types import CorrelatorTerm, EdgeKind, EdgeWeight, PairSequence, SqDiffFactor, VariableTag
from ..exceptions import CorrelatorLayerError
from .derangement_sum import merge_inverse_pairs

logger = logging.getLogger(__name__)

HALF = QQ(1, 2)


def edge_weight(edge: Edge, T: PairSequence, kind: EdgeKind = EdgeKind.K) -> EdgeWeight:
    """
    K(e;Z,W) = 1/(x - y)² or Q(e;Z,W) = ½(u,v)/(x - y)² for an edge e = {u, v}.

    The variable of an endpoint is z_i for a_i and w_i for b_i.

    Raises:
        CorrelatorLayerError: If the edge joins two endpoints of the same pair
    """
    u, v = edge
    if u.pair == v.pair:
        raise CorrelatorLayerError(f"Edge {{{u},{v}}} joins two endpoints of the same pair")
    factor = SqDiffFactor(VariableTag.for_endpoint(u), VariableTag.for_endpoint(v))
    if kind is EdgeKind.K:
        return EdgeWeight(QQ.one, factor)
    return EdgeWeight(HALF * pairing(T.vector(u), T.vector(v), T.space), factor)


def diagram_gamma(diagram: Diagram, T: PairSequence) -> Rational:
    """Γ(D): the product of the pairings (u, v) over the edges."""
    value = QQ.one
    for u, v in diagram.edges:
        value *= pairing(T.vector(u), T.vector(v), T.space)
        if not value:
            return QQ.zero
    return value


def _diagram_term(diagram: Diagram, T: PairSequence) -> Optional[CorrelatorTerm]:
    if diagram.n == 0:
        return CorrelatorTerm(CentralPoly.one(), (), "", diagram)
    weights = [edge_weight(edge, T, EdgeKind.Q) for edge in diagram.edges]
    coefficient = QQ.one
    for weight in weights:
        coefficient *= weight.coefficient
    if not coefficient:
        return None
    sigma = diagram_to_derangement(diagram)
    return CorrelatorTerm(
        CentralPoly.monomial(coefficient, sigma.cycle_count),
        tuple(weight.factor for weight in weights),
        sigma.notation,
        diagram,
    )


def _terms_for(diagrams: Sequence[Diagram], T: PairSequence) -> List[CorrelatorTerm]:
    terms = []
    for diagram in diagrams:
        if diagram.n != T.n:
            raise CorrelatorLayerError(f"Diagram over {diagram.n} pairs used with {T.n} pairs")
        term = _diagram_term(diagram, T)
        if term is not None:
            terms.append(term)
    return terms


def prop2_terms(T: PairSequence) -> List[CorrelatorTerm]:
    """One term per diagram over T; n = 0 gives the single constant term 1."""
    terms = _terms_for(enumerate_diagrams(T.n), T)
    logger.debug("Diagram sum over %d pairs has %d nonzero terms", T.n, len(terms))
    return terms


def lemma2_terms(T: PairSequence, sign: SignAssignment) -> List[CorrelatorTerm]:
    """The signed correlator: the diagram sum restricted to diagrams compatible with the sign."""
    return _terms_for(diagrams_for_sign(T.n, sign), T)


def fibre_gamma_sum(diagrams: Sequence[Diagram], T: PairSequence) -> Rational:
    """Σ_D Γ(D) 2^{-n} over the given diagrams, e.g. ``class_fibre(σ, n)``."""
    total = QQ.zero
    for diagram in diagrams:
        total += diagram_gamma(diagram, T)
    return total * QQ(1, 2 ** T.n)


def diagonal_collapse(terms: Sequence[CorrelatorTerm]) -> List[CorrelatorTerm]:
    """
    Put w_i := z_i in diagram-sum terms and merge them by denominator.

    On the diagonal every diagram of σ_D ∈ {σ, σ⁻¹} has the denominator ∏_i (z_i - z_{σ(i)})²,
    so terms are merged per class {σ, σ⁻¹}. The result equals
    ``merge_inverse_pairs(theorem1_terms(T), n)``; a single fibre alone does not
    reproduce Γ(σ,T) once σ has a cycle of length three or more.
    """
    n = 0
    for term in terms:
        if term.diagram is None:
            raise CorrelatorLayerError("Only diagram-sum terms can be collapsed onto the diagonal")
        n = term.diagram.n
    return merge_inverse_pairs(terms, n)
