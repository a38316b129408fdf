import random

import pytest
from hypothesis import strategies as st

from bijfact.core import BijectiveMap, parse_map

# the four-label diagonal 6->1, 5->2, (3 4) with its six arrays anchored at 1
SHARP_D = "6->1; 5->2; (3 4)"
SHARP_T3 = ["1 2 3 4 / 5 4 3 6", "1 2 4 3 / 5 3 4 6", "1 3 4 2 / 4 3 5 6", "1 4 3 2 / 3 4 5 6"]
SHARP_T2 = ["1 3 2 4 / 4 5 3 6", "1 4 2 3 / 3 5 4 6"]


@pytest.fixture
def sharp_d():
    return parse_map(SHARP_D)


@st.composite
def bijective_maps(draw, max_n=8):
    """A bijection between two random label sets of equal size drawn from 1..2n."""
    n = draw(st.integers(1, max_n))
    pool = list(range(1, 2 * n + 1))
    A = draw(st.permutations(pool))[:n]
    B = draw(st.permutations(pool))[:n]
    return BijectiveMap(dict(zip(A, B)))


def random_map(rng: random.Random, n: int) -> BijectiveMap:
    pool = list(range(1, 2 * n + 1))
    A = rng.sample(pool, n)
    B = rng.sample(pool, n)
    return BijectiveMap(dict(zip(A, B)))
