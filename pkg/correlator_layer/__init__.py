"""
Correlator Layer Module

Closed forms of the genus-zero correlators:
- The derangement sum for the fields L_{a,b}(z) and its symbolic display
- The diagram sum for the two-variable series, signed restrictions and diagonal collapse
- Exact point evaluation and truncated ι-expansion into Laurent series
"""

from .models.correlator_types import (
    CorrelatorTerm,
    EdgeKind,
    EdgeWeight,
    LaurentSeries,
    PairSequence,
    SqDiffFactor,
    SymbolicTerm,
    VariableKind,
    VariableTag,
    cut_degree,
    merge_factors,
    prop2_domain,
    theorem1_domain,
)
from .core.derangement_sum import (
    derangement_denominator,
    gamma_sigma_T,
    merge_inverse_pairs,
    theorem1_symbolic,
    theorem1_terms,
)
from .core.diagram_sum import (
    diagonal_collapse,
    diagram_gamma,
    edge_weight,
    fibre_gamma_sum,
    lemma2_terms,
    prop2_terms,
)
from .core.evaluation import evaluate_terms
from .core.expansion import iota_expand
from .exceptions import CorrelatorLayerError, PoleError, ExpansionDomainError, TruncationError

__version__ = "1.0.0"
__all__ = [
    "CorrelatorTerm",
    "EdgeKind",
    "EdgeWeight",
    "LaurentSeries",
    "PairSequence",
    "SqDiffFactor",
    "SymbolicTerm",
    "VariableKind",
    "VariableTag",
    "cut_degree",
    "merge_factors",
    "prop2_domain",
    "theorem1_domain",
    "derangement_denominator",
    "gamma_sigma_T",
    "merge_inverse_pairs",
    "theorem1_symbolic",
    "theorem1_terms",
    "diagonal_collapse",
    "diagram_gamma",
    "edge_weight",
    "fibre_gamma_sum",
    "lemma2_terms",
    "prop2_terms",
    "evaluate_terms",
    "iota_expand",
    "CorrelatorLayerError",
    "PoleError",
    "ExpansionDomainError",
    "TruncationError",
]
