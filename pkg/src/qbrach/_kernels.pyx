# cython: language_level=3
"""Compiled hot kernels; same contract as ``_kernels_py``."""

cdef extern from "<complex.h>" nogil:
    double complex csqrt(double complex)
    double complex ccosh(double complex)
    double complex csinh(double complex)
    double complex cexp(double complex)
    double cabs(double complex)

cdef double SERIES_THRESHOLD = 1e-6


cdef inline void _expm(double complex a, double complex b, double complex c,
                       double complex d, double complex* out) noexcept nogil:
    cdef double complex a0 = 0.5 * (a + d)
    cdef double complex p = 0.5 * (a - d)
    cdef double complex r2 = p * p + b * c
    cdef double complex r, ch, sh, g
    if cabs(r2) < SERIES_THRESHOLD * SERIES_THRESHOLD:
        ch = 1.0 + r2 / 2.0 + r2 * r2 / 24.0
        sh = 1.0 + r2 / 6.0 + r2 * r2 / 120.0
    else:
        r = csqrt(r2)
        ch = ccosh(r)
        sh = csinh(r) / r
    g = cexp(a0)
    out[0] = g * (ch + sh * p)
    out[1] = g * sh * b
    out[2] = g * sh * c
    out[3] = g * (ch - sh * p)


cdef inline void _mul(double complex* x, double complex* y,
                      double complex* out) noexcept nogil:
    cdef double complex o0 = x[0] * y[0] + x[1] * y[2]
    cdef double complex o1 = x[0] * y[1] + x[1] * y[3]
    cdef double complex o2 = x[2] * y[0] + x[3] * y[2]
    cdef double complex o3 = x[2] * y[1] + x[3] * y[3]
    out[0] = o0
    out[1] = o1
    out[2] = o2
    out[3] = o3


cdef inline void _step(object hfun, double t, double h, double complex* out):
    m = hfun(t + 0.5 * h)
    cdef double complex k = -1j * h
    _expm(k * <double complex>m[0], k * <double complex>m[1],
          k * <double complex>m[2], k * <double complex>m[3], out)


def expm2_entries(double complex a, double complex b, double complex c,
                  double complex d):
    cdef double complex out[4]
    _expm(a, b, c, d, out)
    return (out[0], out[1], out[2], out[3])


def propagate(object hfun, double t0, double t1, double h0, double tol,
              long max_steps):
    cdef double complex u[4]
    cdef double complex full[4]
    cdef double complex ha[4]
    cdef double complex hb[4]
    cdef double complex two[4]
    cdef double span = t1 - t0
    cdef double direction, h, t, err, e
    cdef long steps = 0, attempts = 0
    cdef int i
    cdef bint last
    u[0] = 1.0
    u[1] = 0.0
    u[2] = 0.0
    u[3] = 1.0
    if span == 0:
        return (u[0], u[1], u[2], u[3], 0, 0, True)
    direction = 1.0 if span > 0 else -1.0
    h = abs(h0) * direction
    t = t0
    while (t1 - t) * direction > 0:
        if attempts >= max_steps:
            return (u[0], u[1], u[2], u[3], steps, attempts, False)
        last = (t + h - t1) * direction >= 0
        if last:
            h = t1 - t
        _step(hfun, t, h, full)
        _step(hfun, t, 0.5 * h, ha)
        _step(hfun, t + 0.5 * h, 0.5 * h, hb)
        _mul(hb, ha, two)
        err = 0.0
        for i in range(4):
            e = cabs(full[i] - two[i])
            if e > err:
                err = e
        attempts += 1
        if err <= tol:
            _mul(two, u, u)
            t = t1 if last else t + h
            steps += 1
            if err < tol / 16.0:
                h *= 2.0
        else:
            h *= 0.5
    return (u[0], u[1], u[2], u[3], steps, attempts, True)
