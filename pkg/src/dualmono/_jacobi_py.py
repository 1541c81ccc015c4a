"""Pure-Python cyclic Jacobi eigensolver (fallback for ``_jacobi_ext``)."""
import math

import numpy as np


def jacobi_eigh(h, tol=1e-13, max_sweeps=100):
    """Return ``(w, v, sweeps)`` for Hermitian ``h``; ``w`` unsorted.

    Each rotation first strips the phase of ``h[p, q]`` and then applies the
    classical real Jacobi rotation, so the accumulated transform is unitary.
    ``sweeps`` is -1 when the iteration cap was hit.
    """
    a = np.array(h, dtype=np.complex128, order="C", copy=True)
    n = a.shape[0]
    v = np.eye(n, dtype=np.complex128)
    total = math.sqrt(float(np.sum(a.real**2 + a.imag**2)))
    if total == 0.0:
        return a.diagonal().real.copy(), v, 0

    iu = np.triu_indices(n, 1)
    for sweep in range(max_sweeps):
        upper = a[iu]
        off = math.sqrt(2.0 * float(np.sum(upper.real**2 + upper.imag**2)))
        if off < tol * total:
            return a.diagonal().real.copy(), v, sweep

        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = complex(a[p, q])
                r = abs(apq)
                if r == 0.0:
                    continue
                app = a[p, p].real
                aqq = a[q, q].real
                theta = (aqq - app) / (2.0 * r)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                    if theta < 0.0:
                        t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                # phase from the same entry as r, so |ph| == 1 even for tiny r
                ph = apq.conjugate() / r
                u10 = -s * ph
                u11 = c * ph

                col_p = a[:, p].copy()
                col_q = a[:, q]
                a[:, p] = col_p * c + col_q * u10
                a[:, q] = col_p * s + col_q * u11
                vp = v[:, p].copy()
                vq = v[:, q]
                v[:, p] = vp * c + vq * u10
                v[:, q] = vp * s + vq * u11

                row_p = a[p, :].copy()
                row_q = a[q, :]
                a[p, :] = c * row_p + u10.conjugate() * row_q
                a[q, :] = s * row_p + u11.conjugate() * row_q

                a[p, q] = 0.0
                a[q, p] = 0.0
                a[p, p] = app - t * r
                a[q, q] = aqq + t * r
    return a.diagonal().real.copy(), v, -1
