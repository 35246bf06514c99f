import numpy as np
import pytest

from bernconv import cdf, transfer_measure


@pytest.fixture(scope="session")
def hist_cache():
    """Session-wide memo for transfer histograms; many tests reuse (t, N)."""
    cache = {}

    def get(t, n, tol=1e-10):
        key = (round(t, 15), n, tol)
        if key not in cache:
            cache[key] = transfer_measure(t, n, tol=tol)
        return cache[key]

    return get


@pytest.fixture(scope="session")
def cdf_cache(hist_cache):
    cache = {}

    def get(t, n):
        key = (round(t, 15), n)
        if key not in cache:
            cache[key] = cdf(hist_cache(t, n))
        return cache[key]

    return get


@pytest.fixture
def rng():
    return np.random.default_rng(20260811)
