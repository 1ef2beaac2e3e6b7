"""Numerical propagators used as independent oracles for the closed forms."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.integrate import simpson

from . import kernels
from .cmat import dagger, expm2, mat2, max_abs, unitarity_residual


@dataclass(frozen=True)
class IntegratorConfig:
    """Adaptive integrator settings.

    ``initial_step=None`` means (t1 - t0) / 256.
    """

    initial_step: float | None = None
    tolerance: float = 1e-10
    max_steps: int = 1_000_000

    def __post_init__(self):
        if self.initial_step is not None and not self.initial_step > 0:
            raise ValueError("initial_step must be positive")
        if not self.tolerance > 0:
            raise ValueError("tolerance must be positive")
        if self.max_steps < 1:
            raise ValueError("max_steps must be at least 1")


@dataclass(frozen=True)
class PropagationResult:
    U: np.ndarray
    unitarity_drift: float
    steps_taken: int
    accepted: bool


def _entries(generator):
    def hfun(t):
        return np.asarray(generator(t), dtype=np.complex128).ravel().tolist()

    return hfun


def schrodinger_propagate(generator, t0, t1, cfg=None):
    """Time-ordered solution of i dU/dt = H(t) U with U(t0) = I.

    Substeps are midpoint exponentials exp(-i h H(t + h/2)), each exactly
    unitary; the local error is estimated by step doubling and the step is
    halved until it drops below ``cfg.tolerance``. If ``cfg.max_steps``
    attempts are exhausted the partial result comes back with
    ``accepted=False``.
    """
    cfg = cfg or IntegratorConfig()
    h0 = cfg.initial_step
    if h0 is None:
        h0 = abs(t1 - t0) / 256.0 or 1.0
    *u, steps, _attempts, ok = kernels.propagate(
        _entries(generator), float(t0), float(t1), float(h0),
        float(cfg.tolerance), int(cfg.max_steps),
    )
    U = mat2(*u)
    return PropagationResult(
        U=U,
        unitarity_drift=unitarity_residual(U),
        steps_taken=int(steps),
        accepted=bool(ok),
    )


def naive_integral_exponential(generator, t0, t1, quad_steps=256):
    """exp(-i * integral of H over [t0, t1]), composite Simpson quadrature.

    Equals the time-ordered propagator only when the H(t) mutually commute.
    """
    if quad_steps < 2:
        raise ValueError("quad_steps must be >= 2")
    n = quad_steps + (quad_steps % 2)
    ts = np.linspace(t0, t1, n + 1)
    samples = np.array([generator(t) for t in ts], dtype=np.complex128)
    integral = simpson(samples, x=ts, axis=0)
    return expm2(-1j * integral)


def compare_propagators(a, b):
    """(max entrywise |A - B|, 1 - |Tr(A^dag B)|/2)."""
    a = np.asarray(a)
    b = np.asarray(b)
    overlap = min(1.0, float(abs(np.trace(dagger(a) @ b))) / 2.0)
    return max_abs(a - b), 1.0 - overlap
