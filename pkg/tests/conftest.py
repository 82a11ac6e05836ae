from __future__ import annotations

import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

seeds = st.integers(min_value=0, max_value=2**32 - 1)


def rng_for(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)
