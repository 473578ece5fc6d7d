"""
Derangements of {1..n} with their canonical cycle decomposition.
"""

import logging
import re
from functools import lru_cache
from typing import List, Tuple

from sympy.utilities.iterables import generate_derangements

from ..models.diagram_types import Derangement
from ..exceptions import InvalidDerangementError

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def _derangements(n: int) -> Tuple[Derangement, ...]:
    if n == 0:
        return (Derangement((), ()),)
    found = tuple(sorted(
        (Derangement.from_image(image) for image in generate_derangements(list(range(1, n + 1)))),
        key=lambda sigma: sigma.image,
    ))
    logger.debug("Enumerated %d derangements of %d labels", len(found), n)
    return found


def enumerate_derangements(n: int) -> List[Derangement]:
    """
    All fixed-point-free permutations of {1..n}, lexicographic by image.

    n = 0 yields the single empty permutation, whose correlator term is the constant 1.
    """
    if n < 0:
        raise InvalidDerangementError("n must be non-negative")
    return list(_derangements(n))


def class_representative(sigma: Derangement) -> Derangement:
    """The lexicographically smaller of σ and σ⁻¹; both have the same cycles up to orientation."""
    inverse = sigma.inverse
    return inverse if inverse.image < sigma.image else sigma


def inverse_classes(n: int) -> List[Tuple[Derangement, ...]]:
    """
    The derangements of {1..n} grouped into classes {σ, σ⁻¹}.

    Classes are ordered by representative; an involution forms a class of its own.
    """
    classes = []
    for sigma in enumerate_derangements(n):
        if class_representative(sigma) != sigma:
            continue
        classes.append((sigma,) if sigma.is_involution else (sigma, sigma.inverse))
    return classes


def cycle_count(sigma: Derangement) -> int:
    """Number of disjoint cycles c(σ)."""
    return sigma.cycle_count


def parse_cycle_notation(text: str, n: int) -> Derangement:
    """
    Parse "(12)(3564)" or "(1,10)(2,3,...)" back into a derangement of {1..n}.

    Raises:
        InvalidDerangementError: If the text is malformed or leaves a label fixed
    """
    cleaned = text.replace(" ", "")
    if not re.fullmatch(r"(\([0-9,]+\))*", cleaned):
        raise InvalidDerangementError(f"Invalid cycle notation: {text!r}")
    cycles = []
    for body in re.findall(r"\(([0-9,]+)\)", cleaned):
        if "," in body:
            cycles.append([int(v) for v in body.split(",") if v])
        else:
            cycles.append([int(v) for v in body])
    return Derangement.from_cycles(cycles, n)


def cycle_notation(sigma: Derangement) -> str:
    return sigma.notation
