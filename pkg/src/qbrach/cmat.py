"""Complex 2x2 linear algebra.

Every matrix is a ``(2, 2)`` ``numpy.complex128`` array. Operations are pure
and never mutate their inputs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernels

#: Default absolute tolerance for entrywise matrix equality.
DEFAULT_TOL = 1e-12
#: Below this eigenvalue gap the spectrum is treated as degenerate.
DEGENERACY_GAP = 1e-12


def _frozen(a):
    a = np.array(a, dtype=np.complex128)
    a.setflags(write=False)
    return a


IDENTITY = _frozen([[1, 0], [0, 1]])
SIGMA_X = _frozen([[0, 1], [1, 0]])
SIGMA_Y = _frozen([[0, -1j], [1j, 0]])
SIGMA_Z = _frozen([[1, 0], [0, -1]])
PAULIS = (SIGMA_X, SIGMA_Y, SIGMA_Z)


class NonHermitianError(ValueError):
    """Raised when a Hermitian matrix was required."""

    def __init__(self, residual, tol):
        self.residual = residual
        super().__init__(
            f"matrix is not Hermitian: max|M - M^dag| = {residual:.3e} > {tol:.1e}"
        )


class NonUnitaryError(ValueError):
    """Raised when a unitary matrix was required."""

    def __init__(self, residual, tol):
        self.residual = residual
        super().__init__(
            f"matrix is not unitary: max|M M^dag - I| = {residual:.3e} > {tol:.1e}"
        )


def mat2(a, b, c, d):
    """Build [[a, b], [c, d]]."""
    return np.array([[a, b], [c, d]], dtype=np.complex128)


def as_mat2(m):
    """Validate and convert to a finite (2, 2) complex array."""
    m = np.asarray(m, dtype=np.complex128)
    if m.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix has non-finite entries")
    return m


def dagger(m):
    return np.conj(np.asarray(m)).T


def max_abs(m):
    """Entrywise max-abs norm."""
    return float(np.max(np.abs(m)))


def hermitian_residual(m):
    m = np.asarray(m)
    return max_abs(m - dagger(m))


def unitarity_residual(m):
    m = np.asarray(m)
    return max_abs(m @ dagger(m) - IDENTITY)


def check_hermitian(m, tol=DEFAULT_TOL):
    res = hermitian_residual(m)
    if res > tol:
        raise NonHermitianError(res, tol)


def check_unitary(m, tol=1e-10):
    res = unitarity_residual(m)
    if res > tol:
        raise NonUnitaryError(res, tol)


@dataclass(frozen=True)
class PauliDecomposition:
    """Coefficients of M = a0 I + ax X + ay Y + az Z."""

    a0: complex
    ax: complex
    ay: complex
    az: complex

    def compose(self):
        return pauli_compose(self)

    @property
    def vector(self):
        return (self.ax, self.ay, self.az)


def pauli_decompose(m):
    m = as_mat2(m)
    m00, m01, m10, m11 = m[0, 0], m[0, 1], m[1, 0], m[1, 1]
    return PauliDecomposition(
        a0=complex(0.5 * (m00 + m11)),
        ax=complex(0.5 * (m01 + m10)),
        ay=complex(0.5j * (m01 - m10)),
        az=complex(0.5 * (m00 - m11)),
    )


def pauli_compose(dec):
    return mat2(
        dec.a0 + dec.az,
        dec.ax - 1j * dec.ay,
        dec.ax + 1j * dec.ay,
        dec.a0 - dec.az,
    )


def expm2(m):
    """Matrix exponential via the Cayley-Hamilton closed form.

    exp(M) = exp(a0) (cosh r I + sinh(r)/r (M - a0 I)) with r^2 the sum of
    squared Pauli coefficients; a short series replaces sinh(r)/r for
    |r| < 1e-6.
    """
    m = as_mat2(m)
    e = kernels.expm2_entries(
        complex(m[0, 0]), complex(m[0, 1]), complex(m[1, 0]), complex(m[1, 1])
    )
    return mat2(*e)


def commutator(a, b):
    a = np.asarray(a)
    b = np.asarray(b)
    return a @ b - b @ a


def _phase_fix(v):
    for comp in v:
        if abs(comp) > 1e-14:
            return v * (abs(comp) / comp)
    return v


def eig_hermitian2(m, tol=DEFAULT_TOL):
    """Eigen-decomposition of a Hermitian 2x2 matrix.

    Returns ``(W, eigenvalues)`` with eigenvalues in descending order and the
    columns of ``W`` the matching unit eigenvectors. Each column is rephased
    so that its first nonzero component is real and positive. Degenerate
    spectra return the canonical basis.

    Raises
    ------
    NonHermitianError
        If ``max|M - M^dag|`` exceeds ``tol``.
    """
    m = as_mat2(m)
    check_hermitian(m, tol)
    a0 = 0.5 * (m[0, 0].real + m[1, 1].real)
    nz = 0.5 * (m[0, 0].real - m[1, 1].real)
    off = 0.5 * (m[1, 0] + np.conj(m[0, 1]))
    nx, ny = off.real, off.imag
    rho = math.hypot(nx, ny, nz)
    evals = np.array([a0 + rho, a0 - rho])
    if 2.0 * rho < DEGENERACY_GAP:
        return IDENTITY.copy(), evals
    if nz >= 0:
        vp = np.array([rho + nz, nx + 1j * ny])
        vm = np.array([nx - 1j * ny, -(rho + nz)])
    else:
        vp = np.array([nx - 1j * ny, rho - nz])
        vm = np.array([rho - nz, -(nx + 1j * ny)])
    vp = _phase_fix(vp / np.linalg.norm(vp))
    vm = _phase_fix(vm / np.linalg.norm(vm))
    return np.column_stack([vp, vm]).astype(np.complex128), evals


def gate_fidelity(a, b, tol=1e-10):
    """Global-phase-insensitive overlap |Tr(A^dag B)| / 2 of two unitaries."""
    a = as_mat2(a)
    b = as_mat2(b)
    check_unitary(a, tol)
    check_unitary(b, tol)
    return min(1.0, float(abs(np.trace(dagger(a) @ b))) / 2.0)


def metric_residual(m, eta):
    """M eta M^dag - eta; zero iff M preserves the Hermitian form eta."""
    m = as_mat2(m)
    eta = as_mat2(eta)
    return m @ eta @ dagger(m) - eta
