"""
Core enumerations of the Combinatorics Layer.
"""

from .derangements import (
    class_representative,
    cycle_count,
    cycle_notation,
    enumerate_derangements,
    inverse_classes,
    parse_cycle_notation,
)
from .diagrams import (
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
