"""
Data models for the Combinatorics Layer.
"""

from .diagram_types import Side, Sign, Endpoint, Derangement, Diagram, SignAssignment
