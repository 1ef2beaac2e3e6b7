"""The full verification ledger: frame identities plus the Stark, brachistochrone,
hyperbolic and adjoint cross-checks, all as :class:`~qbrach.frames.IdentityClaim`."""

from __future__ import annotations

import math

import numpy as np

from . import adjoint, brach, frames, hyper, propnum, stark
from .brach import OptimalQubitParams
from .cmat import IDENTITY, SIGMA_X, SIGMA_Y, SIGMA_Z, dagger, expm2, metric_residual
from .frames import DEVIATES, HOLDS, IdentityClaim
from .hyper import HyperbolicParams
from .stark import AcStarkParams, DcStarkParams

FD_TOL = 1e-6
NUMERIC_TOL = 1e-9
#: Deviating numerical comparisons must exceed this to count as a deviation.
DISCRIMINATION_TOL = 1e-3
#: Time-ordered comparisons are costly; they use at most this many samples.
MAX_PROPAGATION_SAMPLES = 8


def fd_tol(peak_third_derivative, scale, h=brach.DEFAULT_FD_STEP):
    """FD_TOL, widened to ten times the central-difference error bound
    (h^2/6 times the peak third derivative, plus eps * scale / h) when that is larger."""
    bound = h * h / 6.0 * peak_third_derivative + np.finfo(float).eps * scale / h
    return max(FD_TOL, 10.0 * bound)


def rounding_tol(tol, scale):
    """``tol`` unless entries of size ``scale`` make rounding exceed it."""
    return max(tol, 16.0 * np.finfo(float).eps * scale)


def _zero(t):
    return np.zeros((2, 2), dtype=np.complex128)


def _const(m):
    return lambda t: m


def _thin(times, limit=MAX_PROPAGATION_SAMPLES):
    times = tuple(times)
    if len(times) <= limit:
        return times
    idx = np.linspace(0, len(times) - 1, limit).round().astype(int)
    return tuple(times[i] for i in idx)


def _claim(cid, anchor, lhs, rhs, times, expected=HOLDS, tol=None, description="",
           repairable=False):
    return IdentityClaim(cid, anchor, lhs, rhs, tuple(float(t) for t in times),
                         expected, tol, description, repairable)


def stark_claims(dc, ac, times):
    H = stark.dc_hamiltonian(dc)
    wp = stark.dc_eigenmatrix_printed(dc)
    L = np.diag([dc.E + dc.Omega, dc.E - dc.Omega]).astype(np.complex128)
    gen = _const(H)
    ac_gen = stark.ac_generator(ac)
    cfg = propnum.IntegratorConfig()
    period = ac.period

    def ac_diag(t):
        w, lam = stark.ac_eigensystem(ac, t)
        return dagger(w) @ stark.ac_hamiltonian(ac, t) @ w - lam * SIGMA_Z

    def ac_printed_vectors(t):
        # eigenvector property is scale-free; unit columns keep the residual relative
        w = stark.ac_eigenmatrix_printed(ac, t)
        w = w / np.linalg.norm(w, axis=0)
        lam = stark.ac_eigenvalue(ac, t)
        return stark.ac_hamiltonian(ac, t) @ w - w @ (lam * SIGMA_Z)

    return [
        _claim("stark.dc.pauli-form", "ac-dc-stark/dc-hamiltonian",
               _const(H),
               _const(dc.E * IDENTITY + dc.Delta * SIGMA_Z
                      + dc.V * math.cos(dc.phi) * SIGMA_X + dc.V * math.sin(dc.phi) * SIGMA_Y),
               times[:1], description="H = E 1 + n . sigma"),
        _claim("stark.dc.eigenvectors-printed", "ac-dc-stark/dc-eigenmatrix",
               _const(H @ wp), _const(wp @ L), times[:1],
               description="printed eigenmatrix columns are eigenvectors"),
        _claim("stark.dc.inverse-printed", "ac-dc-stark/dc-eigenmatrix",
               _const(np.linalg.inv(wp)), _const(stark.dc_eigenmatrix_inverse_printed(dc)),
               times[:1], DEVIATES, description="printed inverse of the eigenmatrix",
               repairable=True),
        _claim("stark.dc.diagonalises", "ac-dc-stark/dc-eigenmatrix",
               lambda t: dagger(stark.dc_eigensystem(dc)[0]) @ H @ stark.dc_eigensystem(dc)[0],
               _const(L), times[:1], description="W^-1 H W = diag(E+Omega, E-Omega)"),
        _claim("stark.dc.closed-form", "ac-dc-stark/dc-propagator",
               lambda t: stark.dc_propagator(dc, t),
               lambda t: stark.dc_propagator_closed_form(dc, t), times,
               description="exp(-iHt) = corrected closed form"),
        _claim("stark.dc.printed-unitary", "ac-dc-stark/dc-propagator",
               lambda t: stark.dc_propagator_printed(dc, t) @ dagger(stark.dc_propagator_printed(dc, t)),
               _const(IDENTITY), times, DEVIATES, description="printed propagator U U^dag = 1"),
        _claim("stark.dc.printed-propagator", "ac-dc-stark/dc-propagator",
               lambda t: stark.dc_propagator(dc, t),
               lambda t: stark.dc_propagator_printed(dc, t), times, DEVIATES,
               description="exp(-iHt) equals the printed matrix", repairable=True),
        _claim("stark.dc.semigroup", "ac-dc-stark/telescoping",
               lambda t: stark.dc_propagator(dc, t) @ stark.dc_propagator(dc, 0.5 - t),
               lambda t: stark.dc_propagator(dc, 0.5), times,
               description="U(t) U(s) = U(t+s)"),
        _claim("stark.dc.vs-numerical", "ac-dc-stark/dc-propagator",
               lambda t: stark.dc_propagator(dc, t),
               lambda t: propnum.schrodinger_propagate(gen, 0.0, t, cfg).U,
               _thin(times), tol=NUMERIC_TOL,
               description="closed form = time-ordered numerical propagator"),
        _claim("stark.dc.naive-integral", "ac-dc-stark/telescoping",
               lambda t: stark.dc_propagator(dc, t),
               lambda t: propnum.naive_integral_exponential(gen, 0.0, t), times,
               tol=1e-10, description="exp(-i integral H) = exp(-iHt)"),
        _claim("stark.ac.diagonalises", "ac-dc-stark/ac-eigenvalues",
               ac_diag, _zero, times, description="W^-1 H W = lambda(t) sigma_z"),
        _claim("stark.ac.eigenvectors-printed", "ac-dc-stark/ac-eigenmatrix",
               ac_printed_vectors, _zero, times,
               description="printed AC eigenmatrix columns are eigenvectors"),
        _claim("stark.ac.inverse-printed", "ac-dc-stark/ac-eigenmatrix",
               lambda t: np.linalg.inv(stark.ac_eigenmatrix_printed(ac, t)),
               lambda t: stark.ac_eigenmatrix_inverse_printed(ac, t), times, DEVIATES,
               description="printed inverse of the AC eigenmatrix", repairable=True),
        _claim("stark.ac.naive-vs-time-ordered", "ac-dc-stark/ac-exponentiation",
               lambda t: propnum.naive_integral_exponential(ac_gen, 0.0, t, 512),
               lambda t: propnum.schrodinger_propagate(ac_gen, 0.0, t, cfg).U,
               (period,), DEVIATES, tol=DISCRIMINATION_TOL,
               description="exp(-i integral H) vs time-ordered over one drive period"),
    ]


def brach_claims(p, times):
    sys_opt = brach.optimal_system(p)
    detuned = brach.optimal_system(OptimalQubitParams(p.R, p.omega, 2.0 * p.omega))
    hopt = lambda t: brach.optimal_hamiltonian(p, t)  # noqa: E731
    cfg = propnum.IntegratorConfig()
    few = _thin(times)

    # third derivative of H_opt peaks at R (2 omega)^3
    tol_fd = fd_tol(abs(p.R) * (2.0 * p.omega) ** 3, abs(p.R) + abs(p.Omega))
    # the detuned residual is 2 R |omega| off-diagonal; half of it separates the cases
    tol_detuned = abs(p.R * p.omega)

    def scalar(x):
        return np.array([[x]], dtype=np.complex128)

    return [
        _claim("brach.solution", "time-optimal-hamiltonian/brachistochrone",
               lambda t: brach.brach_residual(sys_opt, t), _zero, times, tol=tol_fd,
               description="i d/dt (H+F) = [H, F] for H_opt, F = omega sigma_z"),
        _claim("brach.detuned", "time-optimal-hamiltonian/brachistochrone",
               lambda t: brach.brach_residual(detuned, t), _zero, times, DEVIATES,
               tol=tol_detuned, description="Omega = 2 omega is not a solution"),
        _claim("brach.orthogonality", "brachistochrone-axioms/trace",
               lambda t: scalar(brach.trace_constraints(sys_opt, t)[0]), _const(scalar(0)),
               times, description="Tr(H F) = 0"),
        _claim("brach.isotropy", "brachistochrone-axioms/isotropy",
               lambda t: scalar(brach.trace_constraints(sys_opt, t)[1]),
               _const(scalar(p.R ** 2)), times, description="Tr(H^2)/2 = R^2"),
        _claim("brach.eigenmatrix-ode", "eigenmatrices/equation-of-motion",
               lambda t: brach.eigenmatrix_ode_residual(p, t), _zero, times, DEVIATES,
               tol=tol_fd, description="i dW/dt = H_opt W"),
        _claim("brach.eigenframe-generator", "time-optimal-hamiltonian/unitary",
               lambda t: brach.eigenframe_propagator(p, t, frames.partner_time(t)),
               lambda t: expm2(-1j * (t - frames.partner_time(t)) * brach.eigenframe_generator(p)),
               times, description="W(t) W^dag(s) = exp(i omega (t-s) (1 + sigma_z))"),
        _claim("brach.eigenframe-vs-time-ordered", "time-optimal-hamiltonian/unitary",
               lambda t: brach.eigenframe_propagator(p, t, 0.0),
               lambda t: propnum.schrodinger_propagate(hopt, 0.0, t, cfg).U,
               few, DEVIATES, tol=DISCRIMINATION_TOL,
               description="W(t) W^dag(0) = time-ordered exp(-i integral H_opt)"),
        _claim("brach.naive-vs-time-ordered", "time-optimal-hamiltonian/unitary",
               lambda t: propnum.naive_integral_exponential(hopt, 0.0, t),
               lambda t: propnum.schrodinger_propagate(hopt, 0.0, t, cfg).U,
               few, DEVIATES, tol=DISCRIMINATION_TOL,
               description="naive exp(-i integral H_opt) = time-ordered propagator"),
    ]


def hyper_claims(hp, samples, tol=1e-12):
    times = tuple(float(x) for x in np.linspace(-1.0, 1.0, samples))
    # entries grow like cosh(2 omega t); propagators like e^{2 |omega tau|}
    peak = math.cosh(2.0 * hp.omega)
    growth = math.exp(2.0 * abs(hp.omega) * max(abs(t - frames.partner_time(t)) for t in times))
    r = abs(hp.R)
    tol_fd = fd_tol(r * (2.0 * hp.omega) ** 3 * peak, (r + abs(hp.omega)) * peak)
    tol_wrong = r * abs(hp.omega)
    tol_big = rounding_tol(tol, max(r, 1.0) * peak)
    tol_prop = rounding_tol(tol, growth)
    wS = lambda z: hyper.continued_frame_eigenmatrix(hp, z)  # noqa: E731
    s_of = frames.partner_time

    def scalar(x):
        return np.array([[x]], dtype=np.complex128)

    return [
        _claim("hyper.solution", "hyperbolic/brachistochrone",
               lambda t: hyper.hyper_brach_residual(hp, -hp.omega, t), _zero, times,
               tol=tol_fd, description="-d/dt(H+F) = [H, F] with F = -omega sigma_y"),
        _claim("hyper.wrong-sign", "hyperbolic/brachistochrone",
               lambda t: hyper.hyper_brach_residual(hp, hp.omega, t), _zero, times, DEVIATES,
               tol=tol_wrong, description="F = +omega sigma_y is not a solution"),
        _claim("hyper.orthogonality", "hyperbolic/brachistochrone",
               lambda t: scalar(np.trace(hyper.wick_hamiltonian(hp, t) @ SIGMA_Y)),
               _const(scalar(0)), times, tol=tol_big, description="Tr(H sigma_y) = 0"),
        _claim("hyper.isotropy", "hyperbolic/isotropy",
               lambda t: scalar(hyper.hyper_isotropy(hp, t)), _const(scalar(hp.R ** 2)),
               times, description="Tr(H^2)/2 = R^2"),
        _claim("hyper.wick-continuation", "hyperbolic/hamiltonian",
               lambda t: hyper.wick_hamiltonian(hp, t),
               lambda t: hyper.continued_frame_hamiltonian(hp, 1j * t), times, tol=tol_big,
               description="H(t) = H_S(it)"),
        _claim("hyper.eigenmatrix-construction", "hyperbolic/propagator",
               lambda t: wS(1j * t) @ dagger(wS(-1j * s_of(t))),
               lambda t: hyper.hyper_propagator(hp, t, s_of(t)), times, tol=tol_prop,
               description="W_S(it) W_S^dag(-is) = scaled propagator"),
        _claim("hyper.composition", "hyperbolic/propagator",
               lambda t: hyper.hyper_propagator(hp, t, 0.0) @ hyper.hyper_propagator(hp, 0.0, s_of(t)),
               lambda t: hyper.hyper_propagator(hp, t, s_of(t)), times, tol=tol_prop,
               description="U(t,s) = U(t,0) U(0,s)"),
        _claim("hyper.reflection", "hyperbolic/propagator",
               lambda t: hyper.hyper_propagator(hp, 0.0, t),
               lambda t: hyper.hyper_propagator(hp, -t, 0.0), times, tol=tol_prop,
               description="U(0,s) = U(-s,0)"),
        _claim("hyper.vilenkin", "hyperbolic/su11",
               lambda t: hyper.hyper_propagator(hp, t, 0.0, scaled=False),
               lambda t: hyper.vilenkin_u2(2.0 * hp.omega * t), times, tol=tol_prop,
               description="unscaled propagator = u2(2 omega t)"),
        _claim("hyper.pseudo-unitary", "hyperbolic/propagator",
               lambda t: metric_residual(hyper.hyper_propagator(hp, t, s_of(t), scaled=False),
                                         hyper.METRIC),
               _zero, times, tol=rounding_tol(tol, growth),
               description="U sigma_z U^dag = sigma_z (unscaled)"),
        _claim("hyper.conformal", "hyperbolic/propagator",
               # compared after dividing out e^{-2 omega tau}, so the residual is relative
               lambda t: math.exp(2.0 * hp.omega * (t - s_of(t)))
               * (lambda m: m @ SIGMA_Z @ dagger(m))(hyper.hyper_propagator(hp, t, s_of(t))),
               _const(SIGMA_Z), times, tol=rounding_tol(tol, growth),
               description="U sigma_z U^dag = e^{-2 omega tau} sigma_z (scaled)"),
    ]


def adjoint_claims(p, times):
    out = [
        _claim("adjoint.eigenframe", "adjoint-representations",
               lambda t: adjoint.adjoint_matrix(brach.eigenframe_propagator(p, t, 0.0)),
               lambda t: adjoint.rotation_about("z", 2.0 * p.omega * t), times,
               description="adjoint of the eigenframe propagator = z rotation by 2 phi"),
        _claim("adjoint.V", "adjoint-representations",
               lambda t: adjoint.adjoint_matrix(frames.frame_unitary("V", t)),
               lambda t: adjoint.rotation_about("x", 2.0 * t), times,
               description="adjoint of U_V(phi) = x rotation by 2 phi"),
    ]
    for name in frames.PROPAGATOR_FRAMES:
        out.append(_claim(
            f"adjoint.orthogonal.{name}", "adjoint-representations",
            lambda t, n=name: (lambda r: r @ r.T)(adjoint.adjoint_matrix(frames.frame_unitary(n, t))),
            _const(np.eye(3)), times, description=f"R R^T = 1 for U_{name}"))
    return out


def all_claims(opt, dc, ac, hp, t_start=0.0, t_end=1.0, samples=64, tol=1e-12,
               include_repairs=True):
    """Every claim in declaration order, repaired companions inserted."""
    times = frames.default_sample_times(t_start, t_end, samples)
    claims = (
        frames.identity_ledger(opt, times, include_repairs=False)
        + stark_claims(dc, ac, times)
        + brach_claims(opt, times)
        + hyper_claims(hp, samples, tol)
        + adjoint_claims(opt, times)
    )
    return frames.with_repairs(claims, tol) if include_repairs else claims
