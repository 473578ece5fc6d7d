"""Data models for the Oracle Layer module."""

from .fock_types import (
    FockState,
    Monomial,
    Prop1Report,
    QuadElement,
    QuadGenerator,
    insert_generator,
    monomial_degree,
)

__all__ = [
    "FockState",
    "Monomial",
    "Prop1Report",
    "QuadElement",
    "QuadGenerator",
    "insert_generator",
    "monomial_degree",
]
