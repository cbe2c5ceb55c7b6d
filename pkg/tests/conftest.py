import random

import pytest

from quintic.mpfield import PrecisionCtx


@pytest.fixture(scope="session")
def ctx50():
    return PrecisionCtx(digits=50)


@pytest.fixture(scope="session")
def ctx100():
    return PrecisionCtx(digits=100)


@pytest.fixture(scope="session")
def ctx200():
    return PrecisionCtx(digits=200)


def random_mpc(rng: random.Random, ctx, magnitude=10.0):
    """Uniform square sample, exact at double precision on entry."""
    return ctx.mpc(rng.uniform(-magnitude, magnitude), rng.uniform(-magnitude, magnitude))


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)
