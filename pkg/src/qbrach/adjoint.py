"""SU(2) -> SO(3) adjoint representation."""

import numpy as np

from .cmat import PAULIS, as_mat2, check_unitary, dagger


def adjoint_matrix(u, tol=1e-10):
    """Real 3x3 R with U sigma_i U^dag = sum_j R_ij sigma_j.

    Entries come from trace projection, R_ij = Tr(sigma_j U sigma_i U^dag) / 2,
    so a global phase on U cancels. With this row convention composition
    reverses order: adjoint(U1 U2) = adjoint(U2) @ adjoint(U1).

    Raises
    ------
    NonUnitaryError
        If ``max|U U^dag - I|`` exceeds ``tol``.
    """
    u = as_mat2(u)
    check_unitary(u, tol)
    ud = dagger(u)
    rot = np.empty((3, 3))
    for i, si in enumerate(PAULIS):
        image = u @ si @ ud
        for j, sj in enumerate(PAULIS):
            rot[i, j] = 0.5 * np.trace(sj @ image).real
    return rot


def rotation_about(axis, angle):
    """Row-convention rotation by ``angle`` about coordinate axis 'x', 'y' or 'z'."""
    c, s = np.cos(angle), np.sin(angle)
    i = "xyz".index(axis)
    j, k = (i + 1) % 3, (i + 2) % 3
    rot = np.eye(3)
    rot[j, j] = rot[k, k] = c
    rot[j, k] = -s
    rot[k, j] = s
    return rot
