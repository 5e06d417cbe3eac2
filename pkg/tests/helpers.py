import numpy as np

from selfdea.model import DecisionMatrix


def random_matrix(rng: np.random.Generator, n=None, m=None, s=None) -> DecisionMatrix:
    n = n or int(rng.integers(2, 9))
    m = m or int(rng.integers(1, 4))
    s = s or int(rng.integers(1, 4))
    return DecisionMatrix.from_arrays(rng.uniform(1, 100, (n, m)), rng.uniform(1, 100, (n, s)))
