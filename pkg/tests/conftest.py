import math
import random

import pytest

from hyperline import generate_hypergraph

import helpers


def corpus_params(seed: int) -> tuple[int, int]:
    rng = random.Random(seed)
    n = rng.randint(4, 10)
    lo = max(1, math.ceil((n - 1) / 4))
    hi = min(7, (3 * n) // 4)
    return n, rng.randint(lo, hi)


@pytest.fixture(scope="session")
def corpus():
    """500 seeded random simple connected hypergraphs (n<=10, m<=7, cards 2..5)."""
    out = []
    for seed in range(500):
        n, m = corpus_params(seed)
        out.append(generate_hypergraph(n=n, m=m, max_card=5, seed=seed))
    return out


@pytest.fixture(scope="session")
def trio():
    return helpers.trio()


@pytest.fixture(scope="session")
def collar3():
    return helpers.collar3()


@pytest.fixture(scope="session")
def skew_family():
    return helpers.skew_edge_regular_family()


@pytest.fixture(scope="session")
def equality_family():
    return helpers.uniform_edge_regular_family()
