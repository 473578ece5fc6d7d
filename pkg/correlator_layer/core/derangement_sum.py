"""
The derangement sum for the genus-zero correlator of the fields L_{a_i,b_i}(z_i).

Each derangement σ of the pairs contributes

    Γ(σ,T) · r^{c(σ)} / ∏_i (z_i - z_{σ(i)})²,   Γ(σ,T) = 2^{-c(σ)-n} ∏_cycles Tr(L ... L),

with the traces taken along the cycles of σ.
"""

import logging
from typing import Dict, List, Sequence, Tuple

from sympy.polys.domains import QQ

from algebra_layer import CentralPoly, Rational, trace_of_product
from combinatorics_layer import Derangement, class_representative, enumerate_derangements, parse_cycle_notation
from ..models.correlator_types import CorrelatorTerm, PairSequence, SqDiffFactor, SymbolicTerm, VariableTag
from ..exceptions import CorrelatorLayerError

logger = logging.getLogger(__name__)


def derangement_denominator(sigma: Derangement) -> Tuple[SqDiffFactor, ...]:
    """The n factors (z_i - z_{σ(i)})², listed cycle by cycle."""
    return tuple(
        SqDiffFactor(VariableTag.z(i), VariableTag.z(sigma(i)))
        for cycle in sigma.cycles for i in cycle
    )


def _cycle_trace(cycle: Tuple[int, ...], T: PairSequence, cache: Dict[Tuple[int, ...], Rational]) -> Rational:
    if cycle not in cache:
        cache[cycle] = trace_of_product([T.generator(i) for i in cycle], T.space)
    return cache[cycle]


def _gamma(sigma: Derangement, T: PairSequence, cache: Dict[Tuple[int, ...], Rational]) -> Rational:
    if sigma.n != T.n:
        raise CorrelatorLayerError(f"Derangement of {sigma.n} labels used with {T.n} pairs")
    value = QQ(1, 2 ** (sigma.cycle_count + sigma.n))
    for cycle in sigma.cycles:
        value *= _cycle_trace(cycle, T, cache)
        if not value:
            return QQ.zero
    return value


def gamma_sigma_T(sigma: Derangement, T: PairSequence) -> Rational:
    """
    Γ(σ,T) = 2^{-s-n} times the product over cycles of the trace along the cycle.

    Args:
        sigma: Derangement of the n pair labels
        T: Pair sequence of length n

    Returns:
        The exact coefficient

    Raises:
        CorrelatorLayerError: If σ and T have different sizes
        DimensionMismatchError: If a vector does not live in the space of T
    """
    return _gamma(sigma, T, {})


def theorem1_terms(T: PairSequence) -> List[CorrelatorTerm]:
    """One term per derangement of the pairs, in enumeration order; zero terms are dropped."""
    cache: Dict[Tuple[int, ...], Rational] = {}
    terms = []
    for sigma in enumerate_derangements(T.n):
        coefficient = _gamma(sigma, T, cache)
        if not coefficient:
            continue
        terms.append(CorrelatorTerm(
            CentralPoly.monomial(coefficient, sigma.cycle_count),
            derangement_denominator(sigma),
            sigma.notation,
        ))
    logger.debug("Derangement sum over %d pairs has %d nonzero terms", T.n, len(terms))
    return terms


def theorem1_symbolic(n: int) -> List[SymbolicTerm]:
    """The derangement sum with traces kept as words of pair labels."""
    return [
        SymbolicTerm(
            derangement=sigma,
            prefactor=QQ(1, 2 ** (sigma.cycle_count + n)),
            r_power=sigma.cycle_count,
            trace_words=sigma.cycles,
        )
        for sigma in enumerate_derangements(n)
    ]


def merge_inverse_pairs(terms: Sequence[CorrelatorTerm], n: int) -> List[CorrelatorTerm]:
    """
    Merge the terms of σ and σ⁻¹, which share the denominator ∏_i (z_i - z_{σ(i)})².

    The merged term carries the label and denominator of the class representative;
    terms that cancel are dropped and the result is ordered by representative.
    """
    grouped: Dict[Tuple[int, ...], CentralPoly] = {}
    representatives: Dict[Tuple[int, ...], Derangement] = {}
    for term in terms:
        representative = class_representative(parse_cycle_notation(term.label, n))
        key = representative.image
        representatives[key] = representative
        grouped[key] = grouped.get(key, CentralPoly.zero()) + term.coefficient
    return [
        CorrelatorTerm(coefficient, derangement_denominator(representatives[key]), representatives[key].notation)
        for key, coefficient in sorted(grouped.items())
        if coefficient
    ]
