"""Linearization of matrix functions over su(N), and its inverse for exp.

Any smooth function of an algebra element collapses to an affine form,

    f(m . L) = f0 I + fvec . L,

because powers of m . L reduce through the product rule.  The power table
carries the reduction: with mu_n the coordinates of (m . L)**n,

    mu0_{n+1} = (2/N) mu_n . m
    mu_{n+1}  = mu0_n m + mu_n (.) m

The cross-product term of the full product rule drops out identically
(every row lies in the commutative family generated by m under (.)), and
that vanishing is asserted at each step.

``delinearize_exp`` inverts the exponential case: given group-element
coordinates it recovers m with exp(-i m . L) equal to the input, choosing
eigenphases on the principal branch and restoring tracelessness by the
2 pi shift rule documented at ``log_coords``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import (
    GeneratorBasis,
    LinearElement,
    StructureTensors,
    _check_coords,
    algebra_matrix,
    cross,
    dot_sym,
    from_matrix,
    to_matrix,
)
from .errors import BranchCutError, ConstraintViolationError, DegenerateSpectrumError
from .spectral import apply_spectral, eig_hermitian, eig_unitary, expansion_coeffs
from . import linsolve

CROSS_RESIDUAL_TOL = 1e-10
BRANCH_GAP = 1e-9
UNIT_GROUP_TOL = 1e-8
REALITY_TOL = 1e-9


def exp_minus_i(x):
    """exp(-i x), the group-element function used throughout."""
    return np.exp(-1j * x)


def exp_plus_i(x):
    """exp(+i x), the conjugate exponential used by the adjoint kernel."""
    return np.exp(1j * x)


@dataclass(frozen=True)
class PowerTable:
    """Coordinates of (m . L)**k for k = 0 .. max_power.

    scalars[k] and vectors[k] satisfy
    (m . L)**k = scalars[k] I + vectors[k] . L.
    """

    scalars: np.ndarray
    vectors: np.ndarray

    @property
    def rows(self) -> int:
        return self.scalars.shape[0]


def power_table(t: StructureTensors, m: np.ndarray, max_power: int) -> PowerTable:
    """Tabulate reduced powers of m . L up to ``max_power`` (<= N)."""
    (m,) = _check_coords(t.dim, m)
    if not 0 <= max_power <= t.n:
        raise ValueError(
            f"max_power must lie in 0..{t.n} (higher powers reduce), got {max_power}"
        )
    rows = max_power + 1
    scalars = np.zeros(rows, dtype=complex)
    vectors = np.zeros((rows, t.dim), dtype=complex)
    scalars[0] = 1.0
    if rows > 1:
        vectors[1] = m
    for k in range(2, rows):
        residual = np.max(np.abs(cross(t, vectors[k - 1], m)))
        if residual >= CROSS_RESIDUAL_TOL:
            raise ConstraintViolationError(
                f"cross term of power {k} reached {residual:.3e}; "
                "the commutative-family reduction no longer holds"
            )
        scalars[k] = (2.0 / t.n) * np.dot(vectors[k - 1], m)
        vectors[k] = scalars[k - 1] * m + dot_sym(t, vectors[k - 1], m)
    return PowerTable(scalars, vectors)


def linearize_fn(
    t: StructureTensors, basis: GeneratorBasis, m: np.ndarray, fn
) -> LinearElement:
    """Coordinates (f0, fvec) of f(m . L) = f0 I + fvec . L.

    The expansion coefficients come from the eigenvalues of the dense
    matrix; the coordinate structure comes from the power table.  The
    all-matrix route (apply_spectral then from_matrix) reproduces the
    same element and serves as the oracle in the test suite.
    """
    (m,) = _check_coords(t.dim, m)
    if not np.any(m):
        # The zero element is exact: f(0 . L) = f(0) I.
        return LinearElement(complex(fn(0.0)), np.zeros(t.dim, dtype=complex))
    spec = eig_hermitian(algebra_matrix(basis, m))
    coeffs = expansion_coeffs(spec, fn)
    table = power_table(t, m, t.n - 1)
    return LinearElement(
        complex(np.sum(coeffs * table.scalars)), coeffs @ table.vectors
    )


def f0_trace(basis: GeneratorBasis, m: np.ndarray, fn) -> complex:
    """Identity coefficient the cheap way: f0 = (1/N) sum_k f(m_k)."""
    spec = eig_hermitian(algebra_matrix(basis, m))
    return complex(np.mean([fn(v) for v in spec.eigenvalues]))


def exp_matrix(basis: GeneratorBasis, m: np.ndarray) -> np.ndarray:
    """Dense unitary exp(-i m . L)."""
    return apply_spectral(eig_hermitian(algebra_matrix(basis, m)), exp_minus_i)


def log_coords(basis: GeneratorBasis, u: np.ndarray) -> np.ndarray:
    """Coordinates m with exp(-i m . L) = u, for unitary u with det 1.

    Eigenphases are taken in (-pi, pi].  Their sum is 2 pi s for an
    integer s; tracelessness is restored by shifting 2 pi off the s
    largest phases (s > 0) or onto the |s| smallest (s < 0), ties broken
    by eigenvalue index.  Phases within BRANCH_GAP of the cut at pi, or a
    shift boundary falling inside a phase tie, are refused as ambiguous.
    """
    spec = eig_unitary(u)
    theta = np.angle(spec.eigenvalues)
    if np.any(np.pi - np.abs(theta) < BRANCH_GAP):
        raise BranchCutError(
            "an eigenphase lies within 1e-9 of the branch cut at pi"
        )
    shift = int(np.round(theta.sum() / (2.0 * np.pi)))
    if shift > 0:
        order = np.argsort(-theta, kind="stable")
        if theta[order[shift - 1]] - theta[order[shift]] < BRANCH_GAP:
            raise DegenerateSpectrumError(
                "the 2 pi shift boundary falls inside an eigenphase tie"
            )
        theta[order[:shift]] -= 2.0 * np.pi
    elif shift < 0:
        order = np.argsort(theta, kind="stable")
        if theta[order[-shift]] - theta[order[-shift - 1]] < BRANCH_GAP:
            raise DegenerateSpectrumError(
                "the 2 pi shift boundary falls inside an eigenphase tie"
            )
        theta[order[:-shift]] += 2.0 * np.pi
    v = spec.eigenvectors
    log_m = np.einsum("k,ak,bk->ab", -theta.astype(complex), v, v.conj())
    elem = from_matrix(basis, log_m)
    residue = float(np.max(np.abs(elem.vector.imag)))
    if residue > REALITY_TOL:
        raise ConstraintViolationError(
            f"recovered coordinates have imaginary residue {residue:.3e}"
        )
    return elem.vector.real


def delinearize_exp(basis: GeneratorBasis, g: LinearElement) -> np.ndarray:
    """Invert g = (g0, gvec) with g0 I + gvec . L = exp(-i m . L) for m."""
    u = to_matrix(basis, g)
    n = basis.n
    if np.max(np.abs(u.conj().T @ u - np.eye(n))) >= UNIT_GROUP_TOL:
        raise ValueError("element is not unitary within 1e-8")
    if abs(linsolve.determinant(u) - 1.0) >= UNIT_GROUP_TOL:
        raise ValueError("element does not have unit determinant within 1e-8")
    return log_coords(basis, u)
