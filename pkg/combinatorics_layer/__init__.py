"""
Combinatorics Layer Module

Derangements and matching diagrams over a sequence of pairs:
- Enumeration of derangements with their cycle structure
- Diagrams (perfect matchings without within-pair edges) and compatible signs
- The contraction map D -> σ_D, its fibres, and edge deletion
"""

from .models.diagram_types import Side, Sign, Endpoint, Derangement, Diagram, SignAssignment
from .core.derangements import (
    class_representative,
    cycle_count,
    cycle_notation,
    enumerate_derangements,
    inverse_classes,
    parse_cycle_notation,
)
from .core.diagrams import (
    all_signs,
    class_fibre,
    delete_edge,
    delete_edge_pair,
    diagram_to_derangement,
    diagrams_for_sign,
    enumerate_diagrams,
    fibre,
    induced_sign,
)
from .exceptions import (
    CombinatoricsError,
    InvalidDerangementError,
    InvalidDiagramError,
    UndefinedContractionError,
)

__version__ = "1.0.0"
__all__ = [
    "Side",
    "Sign",
    "Endpoint",
    "Derangement",
    "Diagram",
    "SignAssignment",
    "class_representative",
    "cycle_count",
    "cycle_notation",
    "enumerate_derangements",
    "inverse_classes",
    "parse_cycle_notation",
    "all_signs",
    "class_fibre",
    "delete_edge",
    "delete_edge_pair",
    "diagram_to_derangement",
    "diagrams_for_sign",
    "enumerate_diagrams",
    "fibre",
    "induced_sign",
    "CombinatoricsError",
    "InvalidDerangementError",
    "InvalidDiagramError",
    "UndefinedContractionError",
]
