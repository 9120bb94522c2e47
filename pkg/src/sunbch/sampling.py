"""Seeded generation of well-conditioned algebra elements for checks.

Components are drawn uniformly from [-1, 1] and the vector is rescaled so
the spectral radius of m . L equals a uniform draw from (0, cap].  Draws
whose scaled eigenvalue gaps fall below ``min_gap`` are rejected, honoring
the nondegeneracy assumption the analytic formulas rest on.  Everything is
a pure function of the generator state, so seeded runs are reproducible.
"""

from __future__ import annotations

import numpy as np

from .algebra import GeneratorBasis, algebra_matrix
from .spectral import _min_gap, eig_hermitian

DEFAULT_SPECTRAL_CAP = 0.9 * np.pi
DEFAULT_MIN_GAP = 1e-6
_MAX_TRIES = 128


def random_coords(
    basis: GeneratorBasis,
    rng: np.random.Generator,
    spectral_cap: float = DEFAULT_SPECTRAL_CAP,
    min_gap: float = DEFAULT_MIN_GAP,
) -> np.ndarray:
    if spectral_cap <= 0:
        raise ValueError(f"spectral_cap must be positive, got {spectral_cap}")
    for _ in range(_MAX_TRIES):
        raw = rng.uniform(-1.0, 1.0, basis.dim)
        target = spectral_cap * (1.0 - rng.uniform())  # lands in (0, cap]
        vals = eig_hermitian(algebra_matrix(basis, raw)).eigenvalues
        radius = float(np.max(np.abs(vals)))
        if radius == 0.0:
            continue
        scale = target / radius
        if _min_gap(vals * scale) >= min_gap:
            return raw * scale
    raise RuntimeError(f"no acceptable draw within {_MAX_TRIES} tries")
