import math
import random

import numpy as np
import pytest

from monopath.coloring import OrderedColoring


def random_coloring(k: int, q: int, n: int, seed: int) -> OrderedColoring:
    rng = random.Random(seed)
    m = math.comb(n, k)
    return OrderedColoring(
        k, q, n, np.array([rng.randint(1, q) for _ in range(m)], dtype=np.int32)
    )


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)
