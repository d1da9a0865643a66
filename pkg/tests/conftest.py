"""Shared generators for the test suite."""

import numpy as np
import pytest


def random_matrix(rng, n, m, complex_=False):
    a = rng.uniform(-1.0, 1.0, (n, m))
    if complex_:
        a = a + 1j * rng.uniform(-1.0, 1.0, (n, m))
    return a


def random_full_rank(rng, n, m, complex_=False, metric_cond_limit=1e3, max_tries=2000):
    """Entries uniform in [-1, 1], redrawn until cond(V†V) is acceptable."""
    for _ in range(max_tries):
        a = random_matrix(rng, n, m, complex_)
        sv = np.linalg.svd(a, compute_uv=False)
        if sv[-1] > 0.0 and (sv[0] / sv[-1]) ** 2 <= metric_cond_limit:
            return a
    raise AssertionError(f"no well-conditioned {n}x{m} draw in {max_tries} tries")


def random_unitary(rng, n, complex_=False):
    a = rng.standard_normal((n, n))
    if complex_:
        a = a + 1j * rng.standard_normal((n, n))
    q, r = np.linalg.qr(a)
    diag = np.diagonal(r)
    return q * (diag / np.abs(diag))


@pytest.fixture
def rng():
    return np.random.default_rng(20260808)
