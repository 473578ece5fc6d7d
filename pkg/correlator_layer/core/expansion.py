"""
ι-expansion of correlator term lists into truncated multivariate Laurent series.

A factor (u - v)^{-2m} with u before v in the domain expands in |u| > |v| as

    Σ_{j ≥ 0} C(j + 2m - 1, 2m - 1) v^j u^{-2m-j}.

Truncation is by cut degree (see ``cut_degree``). Every variable of a term must occur
in the same number of factors across the whole term list, and a factor whose two
variables are split by a suffix adds j + m to that suffix, so a tuple of cut degree B
only receives contributions with j ≤ B - m. The bounded expansion is therefore exact
on every tuple it reports.
"""

import logging
from itertools import product
from math import comb
from typing import Dict, List, Sequence, Tuple

from algebra_layer import CentralPoly
from ..models.correlator_types import CorrelatorTerm, LaurentSeries, VariableTag, cut_degree
from ..exceptions import ExpansionDomainError, TruncationError

logger = logging.getLogger(__name__)


def _positions(domain: Sequence[VariableTag]) -> Dict[VariableTag, int]:
    positions: Dict[VariableTag, int] = {}
    for index, tag in enumerate(domain):
        if tag in positions:
            raise ExpansionDomainError(f"Variable {tag} listed twice in the expansion domain")
        positions[tag] = index
    return positions


def _oriented_factors(term: CorrelatorTerm, positions: Dict[VariableTag, int]) -> List[Tuple[int, int, int]]:
    """(dominant position, other position, multiplicity) for every factor of the term."""
    oriented = []
    for factor in term.denominator:
        for tag in (factor.left, factor.right):
            if tag not in positions:
                raise ExpansionDomainError(f"Variable {tag} is missing from the expansion domain")
        first, second = positions[factor.left], positions[factor.right]
        oriented.append((min(first, second), max(first, second), factor.multiplicity))
    return oriented


def _multiplicities(factors: List[Tuple[int, int, int]], size: int) -> Tuple[int, ...]:
    counts = [0] * size
    for u, v, m in factors:
        counts[u] += m
        counts[v] += m
    return tuple(counts)


def _expand_term(factors: List[Tuple[int, int, int]], multiplicities: Tuple[int, ...],
                 size: int, bound: int) -> Dict[Tuple[int, ...], int]:
    """Integer expansion weights of ∏ (u - v)^{-2m} on tuples within the bound."""
    weights: Dict[Tuple[int, ...], int] = {}
    ranges = [range(0, bound - m + 1) for _, _, m in factors]
    for indices in product(*ranges):
        exponents = [0] * size
        weight = 1
        for (u, v, m), j in zip(factors, indices):
            exponents[v] += j
            exponents[u] -= 2 * m + j
            weight *= comb(j + 2 * m - 1, 2 * m - 1)
        if cut_degree(exponents, multiplicities) > bound:
            continue
        key = tuple(exponents)
        weights[key] = weights.get(key, 0) + weight
    return weights


def iota_expand(terms: Sequence[CorrelatorTerm], domain: Sequence[VariableTag], bound: int) -> LaurentSeries:
    """
    Expand the term list in the domain |v_1| > |v_2| > ... up to cut degree ``bound``.

    Args:
        terms: Correlator terms whose variables all occur in the domain
        domain: Variables in decreasing order of dominance (operator order)
        bound: Truncation bound on the cut degree

    Returns:
        The exact series on every exponent tuple of cut degree at most ``bound``

    Raises:
        ExpansionDomainError: If a variable is missing or terms disagree on how often a variable occurs
        TruncationError: If the bound is negative
    """
    if bound < 0:
        raise TruncationError("Truncation bound must be non-negative")
    domain = tuple(domain)
    positions = _positions(domain)
    size = len(domain)
    multiplicities = None
    accumulated: Dict[Tuple[int, ...], CentralPoly] = {}
    for index, term in enumerate(terms):
        factors = _oriented_factors(term, positions)
        term_multiplicities = _multiplicities(factors, size)
        if multiplicities is None:
            multiplicities = term_multiplicities
        elif term_multiplicities != multiplicities:
            counts = ", ".join(f"{tag}:{count}" for tag, count in zip(domain, term_multiplicities))
            expected = ", ".join(f"{tag}:{count}" for tag, count in zip(domain, multiplicities))
            raise ExpansionDomainError(
                f"Term {index} ({term.label or 'unlabelled'}) has factor counts {counts} per variable, "
                f"but the first term has {expected}; cut degree is undefined"
            )
        for exponents, weight in _expand_term(factors, multiplicities, size, bound).items():
            accumulated[exponents] = accumulated.get(exponents, CentralPoly.zero()) + term.coefficient * weight
    coeffs = {exponents: coeff for exponents, coeff in accumulated.items() if coeff}
    logger.debug("Expanded %d terms to %d coefficients (bound %d)", len(terms), len(coeffs), bound)
    return LaurentSeries(domain, multiplicities or tuple([0] * size), bound, coeffs)
