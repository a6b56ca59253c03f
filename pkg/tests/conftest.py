import random
from itertools import combinations

import pytest

from xclique.graphs import from_edges

DEFAULT_SEED = 20240817


def random_graph(rng: random.Random, n: int, p: float = 0.5):
    return from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def random_two_connected(rng: random.Random, n: int, p: float = 0.5):
    from xclique.invariants import is_two_connected

    while True:
        g = random_graph(rng, n, p)
        if is_two_connected(g):
            return g


@pytest.fixture
def rng():
    return random.Random(DEFAULT_SEED)
