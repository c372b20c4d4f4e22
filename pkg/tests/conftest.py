import random
from fractions import Fraction
from pathlib import Path

import pytest

from baric import algfile
from baric.algebra import Element
from baric.numberfield import FieldElement

FIXTURE_DIR = Path(__file__).resolve().parent.parent / "fixtures"

ALL_FIXTURES = ("example", "gametic", "bernstein3", "euv", "euvw", "nonassoc2")
DEG6_FIXTURES = ("example", "gametic", "bernstein3", "euv", "euvw")

# the worked fixture with e2*e2 redirected to e2, breaking product rule ii
MUTATED_EXAMPLE = """
dim = 3
basis = e1 e2 e3
product e1 e1 = e1 + e3
product e1 e2 = 1/2*e2 + e3
product e1 e3 = l*e3
product e2 e2 = e2
weight e1 = 1
weight e2 = 0
weight e3 = 0
element idem = e1 + (1/4 + 1/4*l)*e3
"""


def fixture_path(name: str) -> Path:
    return FIXTURE_DIR / f"{name}.alg"


def load_fixture(name: str) -> algfile.LoadedAlgebra:
    return algfile.load(fixture_path(name))


@pytest.fixture(scope="session")
def fixtures() -> dict:
    return {name: load_fixture(name) for name in ALL_FIXTURES}


def rand_rational(rng: random.Random, mag: int = 10, max_den: int = 10) -> Fraction:
    den = rng.randint(1, max_den)
    return Fraction(rng.randint(-mag * den, mag * den), den)


def rand_fe(rng: random.Random, mag: int = 10, max_den: int = 10) -> FieldElement:
    return FieldElement(rand_rational(rng, mag, max_den), rand_rational(rng, mag, max_den))


def rand_element(dim: int, rng: random.Random, mag: int = 5, max_den: int = 4) -> Element:
    return Element([rand_fe(rng, mag, max_den) for _ in range(dim)])
