"""DC and AC Stark two-level systems."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .cmat import (
    DEGENERACY_GAP,
    IDENTITY,
    SIGMA_X,
    SIGMA_Y,
    SIGMA_Z,
    eig_hermitian2,
    expm2,
    mat2,
)


class DegenerateSpectrumError(ValueError):
    """The Hamiltonian has a doubly degenerate eigenvalue at this instant."""


def _check_finite(**values):
    for name, v in values.items():
        if not math.isfinite(v):
            raise ValueError(f"{name} must be finite, got {v!r}")


@dataclass(frozen=True)
class DcStarkParams:
    E: float = 0.0
    Delta: float = 0.0
    V: float = 0.0
    phi: float = 0.0

    def __post_init__(self):
        _check_finite(E=self.E, Delta=self.Delta, V=self.V, phi=self.phi)

    @property
    def Omega(self):
        """Half the level splitting, sqrt(Delta^2 + V^2)."""
        return math.hypot(self.Delta, self.V)


@dataclass(frozen=True)
class AcStarkParams:
    E: float = 1.0
    V: float = 0.0
    phi: float = 0.0
    omega_drive: float = 1.0

    def __post_init__(self):
        _check_finite(E=self.E, V=self.V, phi=self.phi, omega_drive=self.omega_drive)
        if self.omega_drive <= 0:
            raise ValueError("omega_drive must be positive")

    @property
    def period(self):
        return 2.0 * math.pi / self.omega_drive


def dc_hamiltonian(p):
    coupling = p.V * cmath.exp(-1j * p.phi)
    return mat2(p.E + p.Delta, coupling, coupling.conjugate(), p.E - p.Delta)


def dc_eigensystem(p):
    """Orthonormal eigenmatrix W and diagonal L = diag(E + Omega, E - Omega).

    When Omega = 0 the Hamiltonian is E * I and W = I.
    """
    if p.Omega * 2.0 < DEGENERACY_GAP:
        return IDENTITY.copy(), p.E * IDENTITY
    w, evals = eig_hermitian2(dc_hamiltonian(p))
    return w, np.diag(evals).astype(np.complex128)


def dc_propagator(p, t):
    """exp(-i H t), unitary, global phase exp(-i E t) included."""
    return expm2(-1j * t * dc_hamiltonian(p))


def dc_propagator_closed_form(p, t):
    """e^{-iEt} [cos(Omega t) I - i sin(Omega t)/Omega (n . sigma)], with n = (V cos phi, V sin phi, Delta)."""
    om = p.Omega
    sinc = t if om == 0 else math.sin(om * t) / om
    n_sigma = (
        p.V * math.cos(p.phi) * SIGMA_X
        + p.V * math.sin(p.phi) * SIGMA_Y
        + p.Delta * SIGMA_Z
    )
    return cmath.exp(-1j * p.E * t) * (math.cos(om * t) * IDENTITY - 1j * sinc * n_sigma)


def dc_propagator_printed(p, t):
    """The propagator matrix in its printed form (no global phase,
    + sign on the lower-left entry); kept only for the claim ledger."""
    om = p.Omega
    c = math.cos(om * t)
    s = math.sin(om * t) / om
    return mat2(
        c - 1j * p.Delta * s,
        -1j * p.V * cmath.exp(-1j * p.phi) * s,
        1j * p.V * cmath.exp(1j * p.phi) * s,
        c + 1j * p.Delta * s,
    )


def dc_eigenmatrix_printed(p):
    om = p.Omega
    ve = p.V * cmath.exp(-1j * p.phi)
    return mat2(-ve / (p.Delta - om), -ve / (p.Delta + om), 1, 1) / math.sqrt(2)


def dc_eigenmatrix_inverse_printed(p):
    om = p.Omega
    ve = p.V * cmath.exp(1j * p.phi)
    return mat2(-ve, -(p.Delta - om), ve, p.Delta + om) / (math.sqrt(2) * om)


def ac_hamiltonian(p, t):
    coupling = p.V * cmath.exp(-1j * p.phi) * math.cos(p.omega_drive * t)
    return mat2(p.E, coupling, coupling.conjugate(), -p.E)


def ac_generator(p):
    return lambda t: ac_hamiltonian(p, t)


def ac_eigenvalue(p, t):
    """lambda(t) = sqrt(E^2 + V^2 cos^2(omega t))."""
    return math.hypot(p.E, p.V * math.cos(p.omega_drive * t))


def ac_eigensystem(p, t):
    """Instantaneous eigenmatrix W(t) and eigenvalue magnitude lambda(t).

    The columns of W(t) belong to +lambda and -lambda. Instants where E = 0
    and cos(omega t) = 0 are degenerate and rejected.
    """
    lam = ac_eigenvalue(p, t)
    if 2.0 * lam < DEGENERACY_GAP:
        raise DegenerateSpectrumError(
            f"AC Stark Hamiltonian is degenerate at t={t!r} (E=0, cos(omega t)=0)"
        )
    w, _ = eig_hermitian2(ac_hamiltonian(p, t))
    return w, lam


def ac_eigenmatrix_printed(p, t):
    lam = ac_eigenvalue(p, t)
    vc = p.V * cmath.exp(-1j * p.phi) * math.cos(p.omega_drive * t)
    return mat2(-vc / (p.E - lam), -vc / (p.E + lam), 1, 1) / math.sqrt(2)


def ac_eigenmatrix_inverse_printed(p, t):
    lam = ac_eigenvalue(p, t)
    vc = p.V * cmath.exp(1j * p.phi) * math.cos(p.omega_drive * t)
    return mat2(-vc, -(p.E - lam), vc, p.E + lam) / (math.sqrt(2) * lam)
