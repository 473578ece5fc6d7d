"""
Readers for the job inputs: the pair-sequence JSON and the --points string.

Input JSON has the form {"dim": d, "gram": [[...], ...], "pairs": [[a, b], ...]} with
every entry an integer or a "p/q" string.
"""

import json
import logging
import re
from pathlib import Path
from typing import Any, Dict, Optional

from algebra_layer import AlgebraLayerError, BilinearSpace, Rational, Vector, to_rational
from correlator_layer import CorrelatorLayerError, PairSequence, VariableTag
from .exceptions import InputFormatError

logger = logging.getLogger(__name__)

POINT_PATTERN = re.compile(r"^\s*([zw]\d+)\s*=\s*(\S+)\s*$")


def read_input_file(path: str) -> Dict[str, Any]:
    """
    Load the JSON object of an input file.

    Raises:
        InputFormatError: If the file is missing or not a JSON object
    """
    file_path = Path(path)
    if not file_path.exists():
        raise InputFormatError(f"Input file not found: {path}")
    try:
        with open(file_path, "r", encoding="utf-8") as f:
            data = json.load(f)
    except json.JSONDecodeError as e:
        raise InputFormatError(f"Invalid JSON in input file {path}: {e}") from e
    if not isinstance(data, dict):
        raise InputFormatError("Input must be a JSON object with 'dim', 'gram' and 'pairs'")
    return data


def _vector(coords: Any, dim: int, where: str) -> Vector:
    if not isinstance(coords, list) or len(coords) != dim:
        raise InputFormatError(f"{where} must be a list of {dim} coordinates")
    return Vector.of(coords)


def parse_pair_sequence(data: Dict[str, Any]) -> PairSequence:
    """
    Build the pair sequence T from a parsed input object.

    Raises:
        InputFormatError: If a field is missing, has the wrong shape, or the form is degenerate
    """
    for key in ("dim", "gram", "pairs"):
        if key not in data:
            raise InputFormatError(f"Input is missing the '{key}' field")
    dim = data["dim"]
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise InputFormatError("'dim' must be a positive integer")
    gram = data["gram"]
    if not isinstance(gram, list) or len(gram) != dim or any(
        not isinstance(row, list) or len(row) != dim for row in gram
    ):
        raise InputFormatError(f"'gram' must be a {dim}x{dim} matrix")
    pairs = data["pairs"]
    if not isinstance(pairs, list):
        raise InputFormatError("'pairs' must be a list of [a, b] coordinate pairs")
    try:
        space = BilinearSpace.from_rows(gram)
        sequence = []
        for index, pair in enumerate(pairs, start=1):
            if not isinstance(pair, list) or len(pair) != 2:
                raise InputFormatError(f"Pair {index} must be [a-coords, b-coords]")
            sequence.append((
                _vector(pair[0], dim, f"a_{index}"),
                _vector(pair[1], dim, f"b_{index}"),
            ))
        T = PairSequence(space, tuple(sequence))
    except AlgebraLayerError as e:
        raise InputFormatError(f"Invalid input data: {e}") from e
    logger.debug("Loaded %d pairs in dimension %d", T.n, dim)
    return T


def load_pair_sequence(path: Optional[str] = None, data: Optional[Dict[str, Any]] = None) -> PairSequence:
    """Pair sequence from an inline object or, failing that, a file path."""
    if data is None:
        if path is None:
            raise InputFormatError("No input given: pass an input file")
        data = read_input_file(path)
    return parse_pair_sequence(data)


def parse_points(text: str) -> Dict[str, Rational]:
    """
    Parse "z1=1,z2=0,w1=1/2" into a variable assignment.

    Raises:
        InputFormatError: If an entry is malformed, repeated or not rational
    """
    points: Dict[str, Rational] = {}
    for entry in text.split(","):
        if not entry.strip():
            continue
        match = POINT_PATTERN.match(entry)
        if not match:
            raise InputFormatError(f"Malformed point assignment {entry.strip()!r}; expected e.g. z1=1/2")
        name, raw = match.groups()
        try:
            name = VariableTag.parse(name).name
            value = to_rational(raw)
        except (AlgebraLayerError, CorrelatorLayerError) as e:
            raise InputFormatError(f"Invalid point assignment {entry.strip()!r}: {e}") from e
        if name in points:
            raise InputFormatError(f"Variable {name} assigned twice")
        points[name] = value
    if not points:
        raise InputFormatError("No points given")
    return points
