"""Pure-Python hot kernels (fallback for the compiled ``_kernels`` module).

Matrices travel as flat 4-tuples ``(m00, m01, m10, m11)`` of Python complex
numbers; at 2x2 this is several times faster than numpy arrays.
"""

import cmath

SERIES_THRESHOLD = 1e-6


def expm2_entries(a, b, c, d):
    """exp([[a, b], [c, d]]) by the Cayley-Hamilton closed form."""
    a0 = 0.5 * (a + d)
    p = 0.5 * (a - d)
    r2 = p * p + b * c
    if abs(r2) < SERIES_THRESHOLD * SERIES_THRESHOLD:
        ch = 1.0 + r2 / 2.0 + r2 * r2 / 24.0
        sh = 1.0 + r2 / 6.0 + r2 * r2 / 120.0
    else:
        r = cmath.sqrt(r2)
        ch = cmath.cosh(r)
        sh = cmath.sinh(r) / r
    g = cmath.exp(a0)
    return (g * (ch + sh * p), g * sh * b, g * sh * c, g * (ch - sh * p))


def _mul(x, y):
    return (
        x[0] * y[0] + x[1] * y[2],
        x[0] * y[1] + x[1] * y[3],
        x[2] * y[0] + x[3] * y[2],
        x[2] * y[1] + x[3] * y[3],
    )


def _step(hfun, t, h):
    # exp(-i h H(t + h/2)): exactly unitary for Hermitian H
    m = hfun(t + 0.5 * h)
    k = -1j * h
    return expm2_entries(k * m[0], k * m[1], k * m[2], k * m[3])


def propagate(hfun, t0, t1, h0, tol, max_steps):
    """Adaptive midpoint-exponential solution of i dU/dt = H(t) U, U(t0) = I.

    ``hfun(t)`` returns the four entries of H(t). Returns
    ``(u00, u01, u10, u11, steps, attempts, accepted)``.
    """
    u = (1 + 0j, 0j, 0j, 1 + 0j)
    span = t1 - t0
    if span == 0:
        return u + (0, 0, True)
    direction = 1.0 if span > 0 else -1.0
    h = abs(h0) * direction
    t = t0
    steps = 0
    attempts = 0
    while (t1 - t) * direction > 0:
        if attempts >= max_steps:
            return u + (steps, attempts, False)
        last = (t + h - t1) * direction >= 0
        if last:
            h = t1 - t
        full = _step(hfun, t, h)
        two = _mul(_step(hfun, t + 0.5 * h, 0.5 * h), _step(hfun, t, 0.5 * h))
        err = max(abs(full[0] - two[0]), abs(full[1] - two[1]),
                  abs(full[2] - two[2]), abs(full[3] - two[3]))
        attempts += 1
        if err <= tol:
            u = _mul(two, u)
            t = t1 if last else t + h
            steps += 1
            if err < tol / 16.0:
                h *= 2.0
        else:
            h *= 0.5
    return u + (steps, attempts, True)
