"""The quantum brachistochrone and its fundamental qubit solution."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .cmat import (
    IDENTITY,
    SIGMA_Z,
    check_hermitian,
    commutator,
    dagger,
    mat2,
)

DEFAULT_FD_STEP = 1e-4

Generator = Callable[[float], np.ndarray]


@dataclass(frozen=True)
class ControlSystem:
    """A Hamiltonian H(t), a constraint F(t) and the isotropy constant k."""

    H: Generator
    F: Generator
    k: float = 0.0


@dataclass(frozen=True)
class OptimalQubitParams:
    """Amplitude R, frame frequency omega and constraint strength Omega.

    Omega defaults to omega, which is the brachistochrone solution.
    """

    R: float = 1.0
    omega: float = 1.0
    Omega: float | None = field(default=None)

    def __post_init__(self):
        if self.Omega is None:
            object.__setattr__(self, "Omega", self.omega)
        for name in ("R", "omega", "Omega"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")


@dataclass(frozen=True)
class QubitState:
    c0: complex
    c1: complex

    def __post_init__(self):
        norm = abs(self.c0) ** 2 + abs(self.c1) ** 2
        if abs(norm - 1.0) > 1e-12:
            raise ValueError(f"state is not normalized (|c0|^2+|c1|^2 = {norm!r})")

    @property
    def vector(self):
        return np.array([self.c0, self.c1], dtype=np.complex128)


def constant(m):
    m = np.array(m, dtype=np.complex128)
    return lambda t: m


def brach_residual(sys, t, h=DEFAULT_FD_STEP):
    """i d/dt (H + F) - [H, F] at time t, derivative by central difference."""
    if not h > 0:
        raise ValueError("finite-difference step must be positive")
    ahead = sys.H(t + h) + sys.F(t + h)
    behind = sys.H(t - h) + sys.F(t - h)
    return 1j * (ahead - behind) / (2.0 * h) - commutator(sys.H(t), sys.F(t))


def trace_constraints(sys, t):
    """(Tr(H F), Tr(H^2)/2) at time t; real parts only."""
    h = sys.H(t)
    tr_hf = np.trace(h @ sys.F(t)).real
    iso = 0.5 * np.trace(h @ h).real
    return float(tr_hf), float(iso)


def energy_dispersion(psi, H):
    """sqrt(<H^2> - <H>^2) in the state psi."""
    v = psi.vector if isinstance(psi, QubitState) else np.asarray(psi, dtype=np.complex128)
    norm = float(np.vdot(v, v).real)
    if abs(norm - 1.0) > 1e-12:
        raise ValueError(f"state is not normalized (norm^2 = {norm!r})")
    H = np.asarray(H, dtype=np.complex128)
    check_hermitian(H)
    hv = H @ v
    mean = np.vdot(v, hv).real
    var = np.vdot(hv, hv).real - mean * mean
    if var < -1e-12:
        raise ValueError(f"negative energy variance {var!r}")
    return math.sqrt(max(var, 0.0))


def optimal_hamiltonian(p, t):
    e = cmath.exp(2j * p.omega * t)
    return p.R * mat2(0, e, e.conjugate(), 0)


def optimal_constraint(p):
    return p.Omega * SIGMA_Z


def optimal_system(p):
    F = optimal_constraint(p)
    return ControlSystem(
        H=lambda t: optimal_hamiltonian(p, t),
        F=lambda t: F,
        k=p.R ** 2,
    )


def optimal_eigenmatrix(p, t):
    e = cmath.exp(2j * p.omega * t)
    return mat2(e, -e, 1, 1) / math.sqrt(2)


def eigenframe_propagator(p, t, s):
    """W(t) W^dag(s) = diag(e^{2i phi}, 1), phi = omega (t - s)."""
    return mat2(cmath.exp(2j * p.omega * (t - s)), 0, 0, 1)


def eigenframe_generator(p):
    """Constant generator -omega (I + sigma_z) whose Schrodinger propagator
    coincides with the eigenframe propagator."""
    return -p.omega * (IDENTITY + SIGMA_Z)


def eigenmatrix_ode_residual(p, t, h=DEFAULT_FD_STEP):
    """i dW/dt - H_opt(t) W(t), derivative by central difference."""
    if not h > 0:
        raise ValueError("finite-difference step must be positive")
    dw = (optimal_eigenmatrix(p, t + h) - optimal_eigenmatrix(p, t - h)) / (2.0 * h)
    return 1j * dw - optimal_hamiltonian(p, t) @ optimal_eigenmatrix(p, t)


def eigenmatrix_effective_generator(p, t, h=DEFAULT_FD_STEP):
    """i (dW/dt) W^dag: the generator W actually obeys."""
    dw = (optimal_eigenmatrix(p, t + h) - optimal_eigenmatrix(p, t - h)) / (2.0 * h)
    return 1j * dw @ dagger(optimal_eigenmatrix(p, t))
