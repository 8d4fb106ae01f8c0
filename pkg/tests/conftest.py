"""
Shared fixtures: seeded generators, small marked spaces and random divisors.
"""

import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).resolve().parents[1]))

from src.combin import MarkedSpace, stable_bipartitions  # noqa: E402
from src.ucurve import DivisorSpec  # noqa: E402

SEED = 20240611


def make_space(g: int, n: int) -> MarkedSpace:
    return MarkedSpace(g, tuple(str(k) for k in range(1, n + 1)))


def random_divisor(rng: np.random.Generator, space: MarkedSpace, low: int = -3, high: int = 3,
                   density: float = 0.5) -> DivisorSpec:
    """ell, d_p and a random sparse a, all drawn from [low, high]."""
    ell = int(rng.integers(low, high + 1))
    d = {p: int(rng.integers(low, high + 1)) for p in space.markings}
    a = {}
    for bip in stable_bipartitions(space):
        if rng.random() < density:
            a[bip] = int(rng.integers(low, high + 1))
    return DivisorSpec(space, ell, d, a)


@pytest.fixture
def rng():
    return np.random.default_rng(SEED)


@pytest.fixture
def space_g2p2():
    return make_space(2, 2)


@pytest.fixture
def space_g2p3():
    return make_space(2, 3)


@pytest.fixture
def divisor_factory(rng):
    def factory(space: MarkedSpace, **kwargs) -> DivisorSpec:
        return random_divisor(rng, space, **kwargs)
    return factory
