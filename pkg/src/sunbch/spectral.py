"""Spectral machinery for the small dense matrices the package works with.

Everything here is self-contained: eigendecompositions use cyclic Jacobi
rotations, characteristic polynomials come from the Faddeev-LeVerrier
recurrence, and linear solves go through the in-package LU kernel.  The
matrices are desk scale (N <= 8), so clarity wins over asymptotics.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linsolve
from .errors import (
    ConvergenceError,
    DegenerateSpectrumError,
    IllConditionedError,
    SingularMatrixError,
)

HERMITIAN_TOL = 1e-10
UNITARY_TOL = 1e-8
JACOBI_OFF_TOL = 1e-13
JACOBI_MAX_SWEEPS = 100
GAP_TOL = 1e-9
VANDERMONDE_COND_LIMIT = 1e12
# Eigenvalues of (u + u')/2 closer than this share an eigenspace and are
# split by the skew part instead.
COS_CLUSTER_TOL = 1e-6


@dataclass(frozen=True)
class SpectralDecomposition:
    """Eigenvalues with matching orthonormal eigenvector columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @property
    def n(self) -> int:
        return self.eigenvalues.shape[0]


@dataclass(frozen=True)
class CharPoly:
    """Monic characteristic polynomial, coefficients[k] multiplying x**k."""

    coefficients: np.ndarray

    @property
    def degree(self) -> int:
        return self.coefficients.shape[0] - 1


def _square(m: np.ndarray) -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    return m


def eig_hermitian(m: np.ndarray) -> SpectralDecomposition:
    """Diagonalize a Hermitian matrix by cyclic Jacobi rotations.

    Each (p, q) pivot applies the unitary plane rotation that annihilates
    the off-diagonal pair; sweeps repeat until the off-diagonal Frobenius
    norm falls below JACOBI_OFF_TOL (relative to the input scale).
    Eigenvalues are returned real, ascending.
    """
    m = _square(m)
    if np.max(np.abs(m - m.conj().T)) >= HERMITIAN_TOL:
        raise ValueError("matrix is not Hermitian within 1e-10")
    n = m.shape[0]
    a = m.copy()
    vecs = np.eye(n, dtype=complex)
    tol = JACOBI_OFF_TOL * max(1.0, float(np.sqrt((np.abs(a) ** 2).sum())))
    skip = tol / (4.0 * n * n)
    # Sum off-diagonal squares directly: subtracting the diagonal part from
    # the total Frobenius norm cancels catastrophically near convergence.
    offdiag = ~np.eye(n, dtype=bool)
    for _ in range(JACOBI_MAX_SWEEPS):
        off = float(np.sqrt((np.abs(a[offdiag]) ** 2).sum()))
        if off <= tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                g = a[p, q]
                absg = abs(g)
                if absg <= skip:
                    continue
                phase = g / absg
                zeta = (a[q, q].real - a[p, p].real) / (2.0 * absg)
                sgn = 1.0 if zeta >= 0.0 else -1.0
                t = sgn / (abs(zeta) + np.hypot(1.0, zeta))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                rot = np.array([[c * phase, s * phase], [-s, c]])
                a[:, [p, q]] = a[:, [p, q]] @ rot
                a[[p, q], :] = rot.conj().T @ a[[p, q], :]
                a[p, q] = a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
                vecs[:, [p, q]] = vecs[:, [p, q]] @ rot
    else:
        raise ConvergenceError(
            f"Jacobi sweep budget ({JACOBI_MAX_SWEEPS}) exhausted, off-norm {off:.3e}"
        )
    vals = np.diag(a).real.copy()
    order = np.argsort(vals, kind="stable")
    return SpectralDecomposition(vals[order], vecs[:, order])


def eig_unitary(u: np.ndarray) -> SpectralDecomposition:
    """Eigendecompose a unitary matrix via its commuting Hermitian parts.

    (u + u')/2 and (u - u')/2i are simultaneously diagonalizable; the
    first is diagonalized outright and each of its near-degenerate
    eigenvalue clusters is then split by the second on that subspace.
    Eigenvalues come back on the unit circle, ordered by principal phase.
    Repeated eigenvalues are fine: any orthonormal basis of the shared
    eigenspace gives a valid decomposition.
    """
    u = _square(u)
    n = u.shape[0]
    if np.max(np.abs(u.conj().T @ u - np.eye(n))) >= UNITARY_TOL:
        raise ValueError("matrix is not unitary within 1e-8")
    cos_part = (u + u.conj().T) / 2.0
    sin_part = (u - u.conj().T) / 2j
    base = eig_hermitian(cos_part)
    vecs = base.eigenvectors.copy()
    cos_vals = base.eigenvalues
    start = 0
    while start < n:
        stop = start + 1
        while stop < n and cos_vals[stop] - cos_vals[stop - 1] < COS_CLUSTER_TOL:
            stop += 1
        if stop - start > 1:
            block = vecs[:, start:stop]
            sub = block.conj().T @ sin_part @ block
            sub = (sub + sub.conj().T) / 2.0
            split = eig_hermitian(sub)
            vecs[:, start:stop] = block @ split.eigenvectors
        start = stop
    vals = np.einsum("ak,ab,bk->k", vecs.conj(), u, vecs)
    vals = vals / np.abs(vals)
    order = np.argsort(np.angle(vals), kind="stable")
    return SpectralDecomposition(vals[order], vecs[:, order])


def char_poly(m: np.ndarray) -> CharPoly:
    """Monic characteristic polynomial by the Faddeev-LeVerrier recurrence.

    coefficients[N] = 1 and coefficients[0] = (-1)**N det(m); a traceless
    input has coefficients[N-1] = 0 up to rounding.
    """
    m = _square(m)
    n = m.shape[0]
    if n > 8:
        raise ValueError(f"characteristic polynomial supported for N <= 8, got {n}")
    coeff = np.zeros(n + 1, dtype=complex)
    coeff[n] = 1.0
    b = np.eye(n, dtype=complex)
    for k in range(1, n + 1):
        if k > 1:
            b = m @ b + coeff[n - k + 1] * np.eye(n)
        coeff[n - k] = -np.trace(m @ b) / k
    return CharPoly(coeff)


def _min_gap(values: np.ndarray) -> float:
    values = np.asarray(values)
    gap = np.inf
    for i in range(values.shape[0] - 1):
        gap = min(gap, float(np.min(np.abs(values[i + 1:] - values[i]))))
    return gap


def _require_simple_spectrum(eigenvalues: np.ndarray) -> None:
    radius = float(np.max(np.abs(eigenvalues)))
    if _min_gap(eigenvalues) <= GAP_TOL * radius:
        raise DegenerateSpectrumError(
            f"eigenvalue gap below {GAP_TOL:g} of the spectral radius {radius:.3e}"
        )


def lagrange_projectors(m: np.ndarray, spec: SpectralDecomposition) -> list[np.ndarray]:
    """Spectral projectors P_k = prod_{n != k} (m - m_n I)/(m_k - m_n)."""
    m = _square(m)
    vals = spec.eigenvalues
    _require_simple_spectrum(vals)
    eye = np.eye(m.shape[0], dtype=complex)
    projectors = []
    for k in range(spec.n):
        p = eye
        for j in range(spec.n):
            if j != k:
                p = p @ (m - vals[j] * eye) / (vals[k] - vals[j])
        projectors.append(p)
    return projectors


def apply_spectral(spec: SpectralDecomposition, fn) -> np.ndarray:
    """f(M) = sum_k f(m_k) v_k v_k' from an eigendecomposition."""
    fvals = np.asarray([fn(v) for v in spec.eigenvalues], dtype=complex)
    v = spec.eigenvectors
    return np.einsum("k,ak,bk->ab", fvals, v, v.conj())


def expansion_coeffs(spec: SpectralDecomposition, fn) -> np.ndarray:
    """Coefficients f_n with f(M) = sum_n f_n M**n, n = 0..N-1.

    Solves the Vandermonde system sum_n f_n m_k**n = f(m_k) over the
    eigenvalues.  Requires a simple spectrum and a usable condition
    number; both guards signal clustered eigenvalues.
    """
    vals = np.asarray(spec.eigenvalues, dtype=complex)
    _require_simple_spectrum(vals)
    vander = np.vander(vals, increasing=True)
    fvals = np.asarray([fn(v) for v in spec.eigenvalues], dtype=complex)
    try:
        if linsolve.condition_number(vander) > VANDERMONDE_COND_LIMIT:
            raise IllConditionedError(
                "Vandermonde condition number exceeds 1e12 (clustered eigenvalues)"
            )
        return linsolve.solve(vander, fvals)
    except SingularMatrixError as exc:
        raise DegenerateSpectrumError(f"singular Vandermonde system: {exc}") from exc


def expansion_coeffs_derivative(
    spec: SpectralDecomposition, char: CharPoly, fn
) -> np.ndarray:
    """Same coefficients by a second, independent route.

    Uses the inverse eigenvalue-gap weights

        delta_n = prod_{k != n} (m_n - m_k)**-1

    to form the moments D_q = sum_n delta_n m_n**q f(m_n) (the weighted
    divided differences of x**q f(x)), then folds in the characteristic
    polynomial by synthetic division:

        f_n = sum_{q=0}^{N-1-n} a_{n+1+q} D_q.

    Shares no solver with expansion_coeffs, which makes the pairwise
    agreement of the two routes a meaningful check.
    """
    vals = np.asarray(spec.eigenvalues, dtype=complex)
    n = vals.shape[0]
    if char.degree != n:
        raise ValueError(f"characteristic polynomial degree {char.degree} != {n}")
    _require_simple_spectrum(vals)
    delta = np.array(
        [1.0 / np.prod(vals[k] - np.delete(vals, k)) for k in range(n)]
    )
    fvals = np.asarray([fn(v) for v in spec.eigenvalues], dtype=complex)
    moments = np.array([np.sum(delta * vals**q * fvals) for q in range(n)])
    a = char.coefficients
    return np.array(
        [np.sum(a[k + 1: n + 1] * moments[: n - k]) for k in range(n)]
    )
