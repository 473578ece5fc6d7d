"""
Core term builders, evaluation and expansion of the Correlator Layer.
"""

from .derangement_sum import (
    derangement_denominator,
    gamma_sigma_T,
    merge_inverse_pairs,
    theorem1_symbolic,
    theorem1_terms,
)
from .diagram_sum import (
    diagonal_collapse,
    diagram_gamma,
    edge_weight,
    fibre_gamma_sum,
    lemma2_terms,
    prop2_terms,
)
from .evaluation import evaluate_terms
from .expansion import iota_expand
