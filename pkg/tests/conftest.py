import numpy as np
import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "xorsat",
    deadline=None,
    derandomize=True,
    max_examples=40,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("xorsat")


@pytest.fixture
def rng():
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(20240645)))


def random_dense(rng, rows, cols, p=0.5):
    return (rng.random((rows, cols)) < p).astype(np.uint8)
