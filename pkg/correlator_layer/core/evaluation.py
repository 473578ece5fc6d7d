"""
Exact point evaluation of correlator term lists.
"""

import logging
from typing import Any, Mapping, Optional, Sequence, Union

from sympy.polys.domains import QQ

from algebra_layer import CentralPoly, Rational, to_rational
from ..models.correlator_types import CorrelatorTerm, VariableTag
from ..exceptions import CorrelatorLayerError, PoleError

logger = logging.getLogger(__name__)


def _as_tag(key: Union[str, VariableTag]) -> VariableTag:
    return key if isinstance(key, VariableTag) else VariableTag.parse(key)


def evaluate_terms(terms: Sequence[CorrelatorTerm],
                   assignment: Mapping[Union[str, VariableTag], Any],
                   r0: Optional[Any] = None) -> Union[CentralPoly, Rational]:
    """
    Evaluate Σ coefficient / ∏ (left - right)^power at a rational point.

    Args:
        terms: Term list from the derangement or diagram sum
        assignment: Value for every variable used in a denominator ("z1" or VariableTag keys)
        r0: Value of r, or None to keep r symbolic

    Returns:
        A polynomial in r when r0 is None, otherwise a rational

    Raises:
        PoleError: If a denominator factor vanishes at the point
        CorrelatorLayerError: If a used variable has no value
    """
    values = {_as_tag(key): to_rational(value) for key, value in assignment.items()}
    total = CentralPoly.zero()
    for term in terms:
        denominator = QQ.one
        for factor in term.denominator:
            try:
                difference = values[factor.left] - values[factor.right]
            except KeyError as e:
                raise CorrelatorLayerError(f"No value assigned to variable {e.args[0]}") from e
            if not difference:
                raise PoleError(f"pole at evaluation point: {factor.left} = {factor.right}")
            denominator *= difference ** factor.power
        total += term.coefficient * (QQ.one / denominator)
    if r0 is None:
        return total
    return total.evaluate(r0)
