# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled cyclic Jacobi eigensolver for dense complex Hermitian matrices.

Mirrors ``dualmono._jacobi_py`` rotation for rotation; the two must stay
in lockstep so that results agree to rounding.
"""
import numpy as np

from libc.math cimport sqrt, fabs


cdef inline double cabs2(double complex z) noexcept nogil:
    return z.real * z.real + z.imag * z.imag


cdef int _jacobi(double complex[:, ::1] a, double complex[:, ::1] v,
                 Py_ssize_t n, double tol, int max_sweeps) noexcept nogil:
    cdef Py_ssize_t p, q, k, i, j
    cdef double total = 0.0, off, r, app, aqq, theta, t, c, s
    cdef double complex ph, u10, u11, akp, akq, apk, aqk
    cdef int sweep

    for i in range(n):
        for j in range(n):
            total += cabs2(a[i, j])
    total = sqrt(total)
    if total == 0.0:
        return 0

    for sweep in range(max_sweeps):
        off = 0.0
        for i in range(n):
            for j in range(i + 1, n):
                off += cabs2(a[i, j])
        off = sqrt(2.0 * off)
        if off < tol * total:
            return sweep

        for p in range(n - 1):
            for q in range(p + 1, n):
                r = sqrt(cabs2(a[p, q]))
                if r == 0.0:
                    continue
                app = a[p, p].real
                aqq = a[q, q].real
                theta = (aqq - app) / (2.0 * r)
                if fabs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = 1.0 / (fabs(theta) + sqrt(theta * theta + 1.0))
                    if theta < 0.0:
                        t = -t
                c = 1.0 / sqrt(t * t + 1.0)
                s = t * c
                # ph = conj(a[p, q]) / r from the same entry as r, so |ph| == 1
                # even when a[q, p] has drifted from the conjugate at tiny r
                ph.real = a[p, q].real / r
                ph.imag = -a[p, q].imag / r
                u10 = -s * ph
                u11 = c * ph

                for k in range(n):
                    akp = a[k, p]
                    akq = a[k, q]
                    a[k, p] = akp * c + akq * u10
                    a[k, q] = akp * s + akq * u11
                    akp = v[k, p]
                    akq = v[k, q]
                    v[k, p] = akp * c + akq * u10
                    v[k, q] = akp * s + akq * u11
                for k in range(n):
                    apk = a[p, k]
                    aqk = a[q, k]
                    a[p, k] = c * apk + u10.conjugate() * aqk
                    a[q, k] = s * apk + u11.conjugate() * aqk

                a[p, q] = 0.0
                a[q, p] = 0.0
                a[p, p] = app - t * r
                a[q, q] = aqq + t * r
    return -1


def jacobi_eigh(h, double tol=1e-13, int max_sweeps=100):
    """Return ``(w, v, sweeps)`` for Hermitian ``h``; ``w`` unsorted.

    ``sweeps`` is -1 when the iteration cap was hit.
    """
    a_np = np.array(h, dtype=np.complex128, order="C", copy=True)
    cdef Py_ssize_t n = a_np.shape[0]
    v_np = np.eye(n, dtype=np.complex128)
    cdef double complex[:, ::1] a = a_np
    cdef double complex[:, ::1] v = v_np
    cdef int sweeps
    with nogil:
        sweeps = _jacobi(a, v, n, tol, max_sweeps)
    return a_np.diagonal().real.copy(), v_np, sweeps
