"""Constant-frame conjugation algebra and the printed-identity ledger.

A frame transformation conjugates Hamiltonians, constraints and propagators
by a constant unitary Q. The ledger collects the relations printed for the
catalog Q in {T, S, V, Z, Y} and the eigenmatrix W(t), each as an
:class:`IdentityClaim` that :func:`verify_identity` evaluates numerically.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field, replace
from typing import Callable

import numpy as np

from . import brach
from .brach import ControlSystem, OptimalQubitParams
from .cmat import (
    DEFAULT_TOL,
    IDENTITY,
    SIGMA_X,
    SIGMA_Y,
    SIGMA_Z,
    dagger,
    expm2,
    mat2,
)

_R2 = 1.0 / math.sqrt(2.0)

HOLDS = "holds"
DEVIATES = "deviates"
UNDER_TEST = "under-test"

PASS = "pass"
DEVIATE = "deviate"
ERROR = "error"


@dataclass(frozen=True)
class FrameTransform:
    name: str
    Q: np.ndarray = field(repr=False)
    Qinv: np.ndarray = field(repr=False)

    def conj(self, m):
        return self.Q @ m @ self.Qinv

    @property
    def inverse(self):
        return FrameTransform(_inverse_name(self.name), self.Qinv, self.Q)


def _inverse_name(name):
    if name in ("I", "V"):
        return name
    return name[:-3] if name.endswith("^-1") else name + "^-1"


def _frozen(m):
    m = np.array(m, dtype=np.complex128)
    m.setflags(write=False)
    return m


T_MATRIX = _frozen(_R2 * np.array([[1, -1j], [-1j, 1]]))
S_MATRIX = _frozen(_R2 * np.array([[1j, -1j], [-1, -1]]))
V_MATRIX = _frozen(_R2 * np.array([[1, 1], [1, -1]]))
Z_MATRIX = _frozen([[-1j, 0], [0, 1]])
Y_MATRIX = _frozen(Z_MATRIX @ S_MATRIX)


def _build_catalog():
    out = {"I": FrameTransform("I", IDENTITY, IDENTITY)}
    for name, q in (("T", T_MATRIX), ("S", S_MATRIX), ("Z", Z_MATRIX), ("Y", Y_MATRIX)):
        ft = FrameTransform(name, q, _frozen(dagger(q)))
        out[name] = ft
        out[name + "^-1"] = ft.inverse
    out["V"] = FrameTransform("V", V_MATRIX, V_MATRIX)
    return out


_CATALOG = _build_catalog()
_ALIASES = {"1": "I", "identity": "I"}
for _n in ("T", "S", "Z", "Y"):
    _ALIASES[_n + "inv"] = _n + "^-1"
    _ALIASES[_n + "-1"] = _n + "^-1"

#: Frames with a closed-form transformed propagator.
PROPAGATOR_FRAMES = ("I", "T", "T^-1", "S", "S^-1", "V")


def canonical_label(label):
    name = label.name if isinstance(label, FrameTransform) else str(label)
    name = _ALIASES.get(name, name)
    if name not in _CATALOG:
        raise KeyError(f"unknown frame label {label!r}")
    return name


def catalog():
    """All catalog transforms: I, T, T^-1, S, S^-1, Z, Z^-1, Y, Y^-1, V."""
    return list(_CATALOG.values())


def frame(label):
    if isinstance(label, FrameTransform):
        return label
    return _CATALOG[canonical_label(label)]


def conjugate(q, m):
    """Q M Q^-1."""
    return frame(q).conj(np.asarray(m, dtype=np.complex128))


def transform_system(q, sys):
    ft = frame(q)
    return ControlSystem(
        H=lambda t: ft.conj(sys.H(t)),
        F=lambda t: ft.conj(sys.F(t)),
        k=sys.k,
    )


def frame_unitary(label, phi):
    """Closed-form Q U(phi) Q^-1 for the eigenframe propagator U(phi)."""
    name = canonical_label(label)
    g = cmath.exp(1j * phi)
    c, s = math.cos(phi), math.sin(phi)
    if name == "I":
        return g * mat2(g, 0, 0, g.conjugate())
    if name == "T":
        return g * mat2(c, -s, s, c)
    if name in ("T^-1", "S"):
        return g * mat2(c, s, -s, c)
    if name == "S^-1":
        return g * mat2(c, -1j * s, -1j * s, c)
    if name == "V":
        return g * mat2(c, 1j * s, 1j * s, c)
    raise KeyError(f"no closed-form propagator for frame {label!r}")


def transformed_propagator(label, p, t, s):
    """Closed-form propagator in frame Q, phi = omega (t - s)."""
    return frame_unitary(label, p.omega * (t - s))


def transformed_hamiltonian(label, p, t):
    return conjugate(label, brach.optimal_hamiltonian(p, t))


def printed_transformed_hamiltonian(label, p, t):
    """The transformed optimal Hamiltonians in their printed trigonometric form."""
    name = canonical_label(label)
    c, s = math.cos(2 * p.omega * t), math.sin(2 * p.omega * t)
    table = {
        "T": mat2(-s, c, c, s),
        "T^-1": mat2(s, c, c, -s),
        "S": mat2(-c, s, s, c),
        "S^-1": mat2(-s, 1j * c, -1j * c, s),
        "V": mat2(c, -1j * s, 1j * s, -c),
    }
    if name not in table:
        raise KeyError(f"no printed Hamiltonian for frame {label!r}")
    return p.R * table[name]


_CONSTRAINT_TABLE = {
    "I": (+1, "z"),
    "T": (-1, "y"),
    "T^-1": (+1, "y"),
    "S": (+1, "y"),
    "S^-1": (-1, "x"),
    "V": (+1, "x"),
}
_PAULI_BY_AXIS = {"x": SIGMA_X, "y": SIGMA_Y, "z": SIGMA_Z}


def constraint_image(label):
    """Signed Pauli (sign, axis) that Omega sigma_z becomes in frame Q."""
    name = canonical_label(label)
    if name not in _CONSTRAINT_TABLE:
        raise KeyError(f"no constraint image for frame {label!r}")
    return _CONSTRAINT_TABLE[name]


def signed_pauli_matrix(sign, axis, scale=1.0):
    return sign * scale * _PAULI_BY_AXIS[axis]


def identify_signed_pauli(m, tol=DEFAULT_TOL):
    """Inverse of :func:`signed_pauli_matrix` for unit scale; None if no match."""
    for axis, pauli in _PAULI_BY_AXIS.items():
        for sign in (+1, -1):
            if np.max(np.abs(m - sign * pauli)) <= tol:
                return sign, axis
    return None


# --------------------------------------------------------------------------
# claims


@dataclass(frozen=True)
class IdentityClaim:
    """One printed relation lhs(t) == rhs(t), checked at ``sample_times``.

    ``tol`` overrides the run tolerance (finite-difference claims need it).
    ``repairable`` marks claims whose right side is a printed matrix, which
    :func:`find_repair` may perturb by one sign or one permutation.
    """

    id: str
    paper_anchor: str
    lhs: Callable[[float], np.ndarray] = field(repr=False)
    rhs: Callable[[float], np.ndarray] = field(repr=False)
    sample_times: tuple
    expected_status: str = HOLDS
    tol: float | None = None
    description: str = ""
    repairable: bool = False


@dataclass(frozen=True)
class Verdict:
    id: str
    paper_anchor: str
    status: str
    expected_status: str
    max_residual: float
    sample_count: int
    tol: float
    worst_time: float | None = None
    message: str = ""

    @property
    def as_expected(self):
        if self.expected_status == UNDER_TEST:
            return self.status != ERROR
        want = PASS if self.expected_status == HOLDS else DEVIATE
        return self.status == want


def verify_identity(claim, tol=DEFAULT_TOL):
    """Max entrywise |lhs - rhs| over the samples, compared against tol."""
    if not claim.sample_times:
        raise ValueError(f"claim {claim.id!r} has no sample times")
    eff_tol = claim.tol if claim.tol is not None else tol
    worst = 0.0
    worst_t = None
    for t in claim.sample_times:
        try:
            diff = np.asarray(claim.lhs(t)) - np.asarray(claim.rhs(t))
            res = float(np.max(np.abs(diff)))
        except Exception as exc:  # noqa: BLE001 - reported as a verdict
            return Verdict(claim.id, claim.paper_anchor, ERROR, claim.expected_status,
                           math.nan, len(claim.sample_times), eff_tol, float(t),
                           f"{type(exc).__name__}: {exc}")
        if not math.isfinite(res):
            return Verdict(claim.id, claim.paper_anchor, ERROR, claim.expected_status,
                           math.nan, len(claim.sample_times), eff_tol, float(t),
                           "non-finite residual")
        if worst_t is None or res > worst:
            worst, worst_t = res, float(t)
    status = PASS if worst <= eff_tol else DEVIATE
    return Verdict(claim.id, claim.paper_anchor, status, claim.expected_status,
                   worst, len(claim.sample_times), eff_tol, worst_t)


def _swap_cols(m):
    return m[:, ::-1]


def _swap_rows(m):
    return m[::-1, :]


def _negate(mask):
    mask = np.array(mask, dtype=float)
    return lambda m: m * mask


REPAIRS = (
    ("swap columns", _swap_cols),
    ("swap rows", _swap_rows),
    ("negate entry (1,1)", _negate([[-1, 1], [1, 1]])),
    ("negate entry (1,2)", _negate([[1, -1], [1, 1]])),
    ("negate entry (2,1)", _negate([[1, 1], [-1, 1]])),
    ("negate entry (2,2)", _negate([[1, 1], [1, -1]])),
    ("negate column 1", _negate([[-1, 1], [-1, 1]])),
    ("negate column 2", _negate([[1, -1], [1, -1]])),
    ("negate row 1", _negate([[-1, -1], [1, 1]])),
    ("negate row 2", _negate([[1, 1], [-1, -1]])),
    ("negate all", _negate([[-1, -1], [-1, -1]])),
)


def find_repair(claim, tol=DEFAULT_TOL):
    """Nearest one-sign or one-permutation repair of a deviating printed form.

    Returns a companion claim (expected to hold) or None when the claim
    already holds, is not repairable, or no single edit fixes it.
    """
    if not claim.repairable:
        return None
    if verify_identity(claim, tol).status != DEVIATE:
        return None
    for label, op in REPAIRS:
        candidate = replace(
            claim,
            id=f"{claim.id}~repaired",
            rhs=(lambda f, g: lambda t: g(np.asarray(f(t))))(claim.rhs, op),
            expected_status=HOLDS,
            description=f"printed form with {label}",
            repairable=False,
        )
        if verify_identity(candidate, tol).status == PASS:
            return candidate
    return None


def with_repairs(claims, tol=DEFAULT_TOL):
    """Insert repaired companions directly after the claims they repair."""
    out = []
    for c in claims:
        out.append(c)
        fixed = find_repair(c, tol)
        if fixed is not None:
            out.append(fixed)
    return out


def default_sample_times(t_start=0.0, t_end=1.0, samples=64):
    return tuple(float(x) for x in np.linspace(t_start, t_end, samples))


def partner_time(t):
    """A second time s paired with t for two-time relations."""
    return 0.3 - 0.6 * t


def printed_frame_eigenmatrix_S(p, t):
    e = cmath.exp(2j * p.omega * t)
    return _R2 * mat2(e, 1j, 1j * e, 1)


def printed_frame_eigenmatrix_S_dagger(p, s):
    e = cmath.exp(-2j * p.omega * s)
    return _R2 * mat2(e, -1j * e, -1j, 1)


def identity_ledger(p=None, sample_times=None, include_repairs=True, tol=DEFAULT_TOL):
    """The printed frame and eigenmatrix relations as claims.

    Expected statuses were fixed by exact (symbolic) multiplication of the
    catalog constants; see ``tests/test_ledger_oracle.py``.
    """
    p = p or OptimalQubitParams()
    ts = tuple(sample_times) if sample_times is not None else default_sample_times()
    T, Ti = frame("T"), frame("T^-1")
    S, Si = frame("S"), frame("S^-1")
    Z, Y, V = frame("Z"), frame("Y"), frame("V")
    W = lambda t: brach.optimal_eigenmatrix(p, t)  # noqa: E731
    H = lambda t: brach.optimal_hamiltonian(p, t)  # noqa: E731
    w2 = lambda t: cmath.exp(2j * p.omega * t)  # noqa: E731

    def const(m):
        return lambda t: m

    claims = []

    def add(cid, anchor, lhs, rhs, expected=HOLDS, description="", repairable=False, times=ts):
        claims.append(IdentityClaim(cid, anchor, lhs, rhs, tuple(times), expected,
                                    None, description, repairable))

    # fundamental solution
    add("eigenmatrix.unitary", "time-optimal-hamiltonian/eigenmatrix",
        lambda t: W(t) @ dagger(W(t)), const(IDENTITY), description="W W^dag = I")
    add("eigenmatrix.diagonalises", "time-optimal-hamiltonian/eigenmatrix",
        lambda t: dagger(W(t)) @ H(t) @ W(t), const(p.R * SIGMA_Z),
        description="W^-1 H W = R sigma_z")
    add("eigenframe.propagator", "time-optimal-hamiltonian/unitary",
        lambda t: W(t) @ dagger(W(partner_time(t))),
        lambda t: frame_unitary("I", p.omega * (t - partner_time(t))),
        description="W(t) W^dag(s) = e^{i phi} diag(e^{i phi}, e^{-i phi})", repairable=True)

    # braiding of the constant frames
    add("braid.iSinvTSinv", "unitary-transforms/braiding",
        const(1j * Si.Q @ T.Q @ Si.Q), const(Ti.Q), description="i S^-1 T S^-1 = T^-1")
    add("braid.T=-iSTinvS", "unitary-transforms/braiding",
        const(T.Q), const(-1j * S.Q @ Ti.Q @ S.Q), description="T = -i S T^-1 S")
    add("braid.SinvT=-iSTinv", "unitary-transforms/braiding",
        const(Si.Q @ T.Q), const(-1j * S.Q @ Ti.Q), DEVIATES,
        "alternative form S^-1 T = -i S T^-1")
    add("braid.SdagT=-iSTdag", "unitary-transforms/braiding",
        const(dagger(S.Q) @ T.Q), const(-1j * S.Q @ dagger(T.Q)), DEVIATES,
        "S^dag T = -i S T^dag")
    add("hadamard.self-inverse", "unitary-transforms/hadamard",
        const(V.Q @ V.Q), const(IDENTITY), description="V V = I")
    add("hadamard.hermitian", "unitary-transforms/hadamard",
        const(V.Q), const(dagger(V.Q)), description="V = V^dag")
    add("braid.ZSZ=Sinv", "eigenmatrices/phase-gate",
        const(Z.Q @ S.Q @ Z.Q), const(Si.Q), description="Z S Z = S^-1")
    add("braid.Y2=I", "eigenmatrices/phase-gate",
        const(Y.Q @ Y.Q), const(IDENTITY), description="Y^2 = S^dag S = I")

    # transformed Hamiltonians, propagators, transport
    for name in ("T", "T^-1", "S", "S^-1", "V"):
        add(f"hamiltonian.{name}", "unitary-transforms/transformed-hamiltonians",
            lambda t, n=name: transformed_hamiltonian(n, p, t),
            lambda t, n=name: printed_transformed_hamiltonian(n, p, t),
            description=f"Q H Q^-1 printed form, Q = {name}", repairable=True)
    for name in ("T", "T^-1", "S", "S^-1", "V"):
        add(f"propagator.{name}", "unitary-transforms/transformed-unitaries",
            lambda t, n=name: conjugate(n, brach.eigenframe_propagator(p, t, partner_time(t))),
            lambda t, n=name: transformed_propagator(n, p, t, partner_time(t)),
            description=f"Q U Q^-1 printed closed form, Q = {name}", repairable=True)
    for name in PROPAGATOR_FRAMES:
        def lhs(t, n=name):
            s = partner_time(t)
            u = transformed_propagator(n, p, t, s)
            return u @ transformed_hamiltonian(n, p, s) @ dagger(u)
        add(f"transport.{name}", "unitary-transforms/sum-of-angles",
            lhs, lambda t, n=name: transformed_hamiltonian(n, p, t),
            description=f"U_{name} H_{name}(s) U_{name}^dag = H_{name}(t)")
    add("propagator.Tinv-conjugate", "unitary-transforms/transformed-unitaries",
        lambda t: frame_unitary("T^-1", t), lambda t: np.conj(frame_unitary("T", -t)),
        description="U_T^-1(phi) = U_T^*(-phi)")
    add("propagator.V-conjugate", "unitary-transforms/transformed-unitaries",
        lambda t: frame_unitary("V", t), lambda t: np.conj(frame_unitary("V", -t)),
        description="U_V(phi) = U_V^*(-phi)")
    add("propagator.V-dagger", "unitary-transforms/transformed-unitaries",
        lambda t: np.conj(frame_unitary("V", t)), lambda t: dagger(frame_unitary("V", t)),
        description="U_V^* = U_V^dag")
    for name in ("T", "T^-1", "S", "S^-1", "V"):
        sign, axis = constraint_image(name)
        add(f"constraint.{name}", "unitary-transforms/constraint-table",
            lambda t, n=name: conjugate(n, p.Omega * SIGMA_Z),
            const(signed_pauli_matrix(sign, axis, p.Omega)),
            description=f"Q (Omega sigma_z) Q^-1 = {'+' if sign > 0 else '-'}Omega sigma_{axis}, Q = {name}")

    # eigenmatrix identities
    add("eigen.VWV", "eigenmatrices/hadamard-braiding",
        lambda t: V.Q @ W(t) @ V.Q, lambda t: W(t) / w2(t), DEVIATES,
        "V W(t) V = e^{-2i omega t} W(t)", repairable=True)
    add("eigen.VW=WV", "eigenmatrices/hadamard-braiding",
        lambda t: V.Q @ W(t), lambda t: W(t) @ V.Q / w2(t), DEVIATES,
        "V W(t) = e^{-2i omega t} W(t) V")
    add("eigen.SinvWSinv", "eigenmatrices/identities",
        lambda t: Si.Q @ W(t) @ Si.Q, lambda t: _R2 * mat2(-w2(t), 1, w2(t), 1),
        description="S^-1 W S^-1 printed form", repairable=True)
    add("eigen.SWSinv", "eigenmatrices/identities",
        lambda t: S.conj(W(t)), lambda t: printed_frame_eigenmatrix_S(p, t),
        description="S W S^-1 printed form", repairable=True)
    add("eigen.YWYinv=Wdag(-t)", "eigenmatrices/phase-gate",
        lambda t: Y.conj(W(t)), lambda t: dagger(W(-t)), description="Y W Y^-1 = W^dag(-t)")
    add("eigen.YWYinv-printed", "eigenmatrices/phase-gate",
        lambda t: Y.conj(W(t)), lambda t: _R2 * mat2(w2(t), 1, -w2(t), 1),
        description="Y W Y^-1 printed matrix", repairable=True)
    add("eigen.Y2WY-2", "eigenmatrices/phase-gate",
        lambda t: (Y.Q @ Y.Q) @ W(t) @ dagger(Y.Q @ Y.Q), W, description="Y^2 W Y^-2 = W")
    add("eigen.WS-dagger", "eigenmatrices/transformed-unitary",
        lambda t: dagger(S.conj(W(t))), lambda t: printed_frame_eigenmatrix_S_dagger(p, t),
        description="(S W(s) S^-1)^dag printed form", repairable=True)
    add("eigen.US=WS(t)WSdag(s)", "eigenmatrices/transformed-unitary",
        lambda t: printed_frame_eigenmatrix_S(p, t)
        @ printed_frame_eigenmatrix_S_dagger(p, partner_time(t)),
        lambda t: frame_unitary("S", p.omega * (t - partner_time(t))),
        description="W_S(t) W_S^dag(s) = U_S(phi)", repairable=True)

    # constant-frame diagonalisation
    add("frame-diag.WSinv-HS-WS", "transformed-hamiltonian-matrix",
        lambda t: np.linalg.inv(printed_frame_eigenmatrix_S(p, t))
        @ transformed_hamiltonian("S", p, t) @ printed_frame_eigenmatrix_S(p, t),
        const(p.R * SIGMA_Y), description="W_S^-1 H_S W_S = R sigma_y")
    add("frame-diag.exp-sigma-y", "transformed-hamiltonian-matrix",
        lambda t: expm2(-1j * t * p.R * SIGMA_Y),
        lambda t: mat2(math.cos(p.R * t), -math.sin(p.R * t), math.sin(p.R * t), math.cos(p.R * t)),
        description="exp(-i t R sigma_y) printed rotation", repairable=True)

    return with_repairs(claims, tol) if include_repairs else claims
