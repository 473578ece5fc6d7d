"""Data models for the Correlator Layer module."""

from .correlator_types import (
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
]
