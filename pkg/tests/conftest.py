"""Shared fixtures: spaces, seeded generators and pair sequences."""

import json
import random
from pathlib import Path

import pytest
from sympy.polys.domains import QQ

from algebra_layer import BilinearSpace, DegenerateFormError, Vector
from correlator_layer import PairSequence
from jobs import parse_pair_sequence

SAMPLE_DIR = Path(__file__).parent.parent / "sample_inputs"


def random_rational(rng, span=3, denominators=2):
    return QQ(rng.randint(-span, span), rng.randint(1, denominators))


def random_space(rng, dim):
    while True:
        rows = [[QQ.zero] * dim for _ in range(dim)]
        for i in range(dim):
            for j in range(i, dim):
                rows[i][j] = rows[j][i] = random_rational(rng)
        try:
            return BilinearSpace.from_rows(rows)
        except DegenerateFormError:
            continue


def random_vector(rng, dim):
    while True:
        coordinates = [random_rational(rng) for _ in range(dim)]
        if any(coordinates):
            return Vector.of(coordinates)


def random_sequence(rng, n, dim, space=None):
    space = space or random_space(rng, dim)
    return PairSequence(space, tuple((random_vector(rng, dim), random_vector(rng, dim)) for _ in range(n)))


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def plane():
    """A non-orthonormal, indefinite form on a 2-dimensional space."""
    return BilinearSpace.from_rows([["2", "1/2"], ["1/2", "-1"]])


@pytest.fixture
def line():
    return BilinearSpace.identity(1)


@pytest.fixture
def generic_sequence():
    with open(SAMPLE_DIR / "generic_n3_d2.json", encoding="utf-8") as f:
        data = json.load(f)
    return parse_pair_sequence(data)


@pytest.fixture
def write_json(tmp_path):
    """Write an object to a JSON file in the test directory and return its path."""
    def write(name, data):
        path = tmp_path / name
        path.write_text(json.dumps(data), encoding="utf-8")
        return str(path)
    return write


@pytest.fixture
def virasoro_input():
    def build(n):
        return {"dim": 1, "gram": [["1"]], "pairs": [[["1"], ["1"]] for _ in range(n)]}
    return build
