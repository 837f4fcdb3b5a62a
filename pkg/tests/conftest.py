import numpy as np
import pytest

from sympent import random_symplectic


def random_valid_covariance(n, seed, sigma_range=(0.5, 3.0)):
    """Random physical covariance matrix with known symplectic spectrum."""
    rng = np.random.default_rng(seed)
    sigmas = np.sort(rng.uniform(*sigma_range, size=n))[::-1]
    s = random_symplectic(n, seed + 10_000)
    d = np.diag(np.concatenate([sigmas, sigmas]))
    return s @ d @ s.T, sigmas


def embed_symplectic(s_sub, modes, n):
    """Embed a symplectic acting on the given 1-based modes into n modes."""
    k = len(modes)
    assert s_sub.shape == (2 * k, 2 * k)
    out = np.eye(2 * n)
    idx = [m - 1 for m in modes] + [n + m - 1 for m in modes]
    out[np.ix_(idx, idx)] = s_sub
    return out


@pytest.fixture
def rng():
    return np.random.default_rng(20240917)
