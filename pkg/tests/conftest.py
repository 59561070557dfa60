import random
import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from homleibniz.algebra import Element, HomAlgebra, zero_algebra  # noqa: E402
from homleibniz.constructions import catalog, catalog_entry, fuzz_corpus  # noqa: E402
from homleibniz.identities import check_left_hom_leibniz  # noqa: E402


def arbitrary_algebra(seed: int, dim: int | None = None, density: float = 0.4) -> HomAlgebra:
    """Unconstrained random algebra, usually neither Leibniz nor multiplicative."""
    rng = random.Random(seed)
    n = dim or rng.randint(1, 3)
    structure = [
        [Element(tuple(rng.choice([-1, 0, 1, 2]) if rng.random() < density else 0 for _ in range(n)))
         for _ in range(n)]
        for _ in range(n)
    ]
    twist = [[rng.choice([0, 1, -1, 2]) for _ in range(n)] for _ in range(n)]
    return HomAlgebra.unchecked(n, structure, twist, name=f"arbitrary-{seed}")


def random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-9, 9), rng.randint(1, 5))


def random_element(rng: random.Random, n: int) -> Element:
    return Element(tuple(random_rational(rng) for _ in range(n)))


@pytest.fixture(scope="session")
def entries():
    return {e.name: e for e in catalog()}


@pytest.fixture(scope="session")
def L2():
    return catalog_entry("L2").algebra


@pytest.fixture(scope="session")
def L3():
    return catalog_entry("L3").algebra


@pytest.fixture(scope="session")
def A2():
    return catalog_entry("A2").algebra


@pytest.fixture(scope="session")
def heis():
    return catalog_entry("Heisenberg").algebra


@pytest.fixture(scope="session")
def nonleib():
    return catalog_entry("NonLeib").algebra


@pytest.fixture(scope="session")
def zero3():
    return zero_algebra(3)


@pytest.fixture(scope="session")
def fuzzed():
    return fuzz_corpus(50)


@pytest.fixture(scope="session")
def arbitrary():
    return [arbitrary_algebra(s) for s in range(50)]


@pytest.fixture(scope="session")
def hom_leibniz_instances(fuzzed):
    cat = [e.algebra for e in catalog() if check_left_hom_leibniz(e.algebra).holds]
    return cat + fuzzed
