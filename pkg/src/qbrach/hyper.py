"""Hyperbolic (imaginary-time) counterpart of the S-frame brachistochrone."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .brach import DEFAULT_FD_STEP
from .cmat import SIGMA_Y, SIGMA_Z, commutator, mat2

#: The indefinite Hermitian form preserved by the unscaled propagator.
METRIC = SIGMA_Z


@dataclass(frozen=True)
class HyperbolicParams:
    R: float = 1.0
    omega: float = 1.0

    def __post_init__(self):
        if not (math.isfinite(self.R) and math.isfinite(self.omega)):
            raise ValueError("R and omega must be finite")


def _hyperbolic_pair(x):
    try:
        return math.cosh(x), math.sinh(x)
    except OverflowError:
        raise OverflowError(
            f"cosh({x!r}) is not representable; |2 omega t| must stay below ~710"
        ) from None


def wick_hamiltonian(p, t):
    """H_S(it) = R [[-cosh 2wt, i sinh 2wt], [i sinh 2wt, cosh 2wt]]."""
    ch, sh = _hyperbolic_pair(2.0 * p.omega * t)
    return p.R * mat2(-ch, 1j * sh, 1j * sh, ch)


def continued_frame_hamiltonian(p, z):
    """The S-frame Hamiltonian R [[-cos 2wz, sin 2wz], [sin 2wz, cos 2wz]] at complex z."""
    c = cmath.cos(2.0 * p.omega * z)
    s = cmath.sin(2.0 * p.omega * z)
    return p.R * mat2(-c, s, s, c)


def continued_frame_eigenmatrix(p, z):
    """W_S(z) = (1/sqrt 2) [[e^{2iwz}, i], [i e^{2iwz}, 1]] at complex z."""
    e = cmath.exp(2j * p.omega * z)
    return mat2(e, 1j, 1j * e, 1) / math.sqrt(2)


def hyper_propagator(p, t, s, scaled=True):
    """e^{-w tau} [[cosh w tau, i sinh w tau], [-i sinh w tau, cosh w tau]], tau = t - s.

    ``scaled=False`` drops the e^{-w tau} factor, leaving the pseudo-unitary
    SU(1,1) element that preserves :data:`METRIC`.
    """
    x = p.omega * (t - s)
    if scaled:
        # e^{-x} cosh x and e^{-x} sinh x from e^{-2x}: no overflow for large x
        ch = 0.5 * (1.0 + math.exp(-2.0 * x))
        sh = -0.5 * math.expm1(-2.0 * x)
    else:
        ch, sh = _hyperbolic_pair(x)
    return mat2(ch, 1j * sh, -1j * sh, ch)


def vilenkin_u2(theta):
    """[[cosh theta/2, i sinh theta/2], [-i sinh theta/2, cosh theta/2]]."""
    ch, sh = _hyperbolic_pair(0.5 * theta)
    return mat2(ch, 1j * sh, -1j * sh, ch)


def hyper_constraint(omega_c):
    return omega_c * SIGMA_Y


def hyper_brach_residual(p, Omega, t, h=DEFAULT_FD_STEP):
    """-d/dt (H + F) - [H, F] with F = Omega sigma_y; zero iff Omega = -omega."""
    if not h > 0:
        raise ValueError("finite-difference step must be positive")
    F = hyper_constraint(Omega)
    dh = (wick_hamiltonian(p, t + h) - wick_hamiltonian(p, t - h)) / (2.0 * h)
    return -dh - commutator(wick_hamiltonian(p, t), F)


def hyper_isotropy(p, t):
    """Tr(H^2)/2 for the hyperbolic Hamiltonian: R^2 (cosh^2 - sinh^2) = R^2.

    Raises OverflowError where cosh(2wt) itself is not representable.
    """
    _hyperbolic_pair(2.0 * p.omega * t)
    return float(p.R) ** 2


def hyper_isotropy_entrywise(p, t):
    """Tr(H^2)/2 straight from the matrix entries.

    Rounding error grows like eps * R^2 cosh^2(2wt); a cross-check only.
    """
    m = wick_hamiltonian(p, t)
    return float(0.5 * np.trace(m @ m).real)
