"""Shared fixtures and the external dense oracle.

Library code never touches scipy; tests use scipy.linalg.expm as an
independent reference for everything exponential.
"""

import numpy as np
import pytest
import scipy.linalg

from sunbch import algebra_matrix, cached_algebra, random_coords


def dense_exp(basis, coords):
    """Oracle exp(-i coords . generators) via scipy, not package code."""
    return scipy.linalg.expm(-1j * algebra_matrix(basis, coords))


def dense_conjugate(basis, m, nvec):
    """Oracle exp(-iM) N exp(iM) via scipy."""
    u = dense_exp(basis, m)
    return u @ algebra_matrix(basis, nvec) @ u.conj().T


@pytest.fixture(params=[2, 3, 4], ids=lambda n: f"n{n}")
def any_algebra(request):
    return cached_algebra(request.param)


@pytest.fixture
def algebra2():
    return cached_algebra(2)


@pytest.fixture
def algebra3():
    return cached_algebra(3)


@pytest.fixture
def algebra4():
    return cached_algebra(4)


def seeded_samples(basis, seed, count, **kwargs):
    rng = np.random.default_rng(seed)
    return [random_coords(basis, rng, **kwargs) for _ in range(count)]
