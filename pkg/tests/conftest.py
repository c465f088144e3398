import itertools
import math
import random

import pytest
from hypothesis import strategies as st

from petalknots.permutation import PetalPermutation

STEVEDORE = (1, 3, 5, 2, 8, 4, 6, 9, 7)
TREFOIL = (1, 3, 5, 2, 4)
FIGURE_EIGHT = (1, 3, 5, 2, 7, 4, 6)


@st.composite
def petal_permutations(draw, min_p=5, max_p=11):
    p = draw(st.sampled_from([p for p in range(min_p, max_p + 1, 2)]))
    return PetalPermutation(tuple(draw(st.permutations(range(1, p + 1)))))


def leibniz_det(m):
    """Determinant by summing over all permutations; tiny matrices only."""
    n = len(m)
    total = 0
    for sigma in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if sigma[i] > sigma[j])
        total += (-1) ** inversions * math.prod(m[i][sigma[i]] for i in range(n))
    return total


@pytest.fixture
def rng():
    return random.Random(12345)
