"""Dense complex linear algebra for multi-qubit density operators.

Matrices are plain ``numpy`` ``complex128`` arrays of shape ``(dim, dim)``.

Basis convention (used everywhere in the package): computational basis
states are ordered row-major with qubit 0 as the most significant bit, so
``|b0 b1 ... b_{N-1}>`` has index ``sum(b_i * 2**(N-1-i))``. ``tensor(a, b)``
puts ``a`` on the more significant factor, consistent with that ordering.
"""
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import _backend
from .errors import DimensionError, InvalidStateError

MAX_DIM = 2**12
EIG_TOL = 1e-13
HERMITIAN_TOL = 1e-10
NEG_EIG_CLAMP = -1e-10

PAULI_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)


def as_matrix(a, max_dim=MAX_DIM):
    """Coerce ``a`` to a square ``complex128`` array, enforcing the size cap."""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 1:
        raise DimensionError(f"expected a non-empty square matrix, got shape {m.shape}")
    if m.shape[0] > max_dim:
        raise DimensionError(f"dimension {m.shape[0]} exceeds cap {max_dim}")
    return m


def is_hermitian(a, tol=HERMITIAN_TOL) -> bool:
    m = as_matrix(a)
    return bool(np.max(np.abs(m - m.conj().T)) <= tol)


def is_psd(a, tol=HERMITIAN_TOL) -> bool:
    return is_hermitian(a, tol) and hermitian_eigs(a).eigenvalues[-1] >= -tol


def is_trace_one(a, tol=HERMITIAN_TOL) -> bool:
    return abs(np.trace(as_matrix(a)) - 1.0) <= tol


def tensor(a, b, max_dim=MAX_DIM):
    """Kronecker product ``a (x) b``; block ``(i, j)`` is ``a[i, j] * b``."""
    a = as_matrix(a, max_dim)
    b = as_matrix(b, max_dim)
    if a.shape[0] * b.shape[0] > max_dim:
        raise DimensionError(
            f"tensor dimension {a.shape[0] * b.shape[0]} exceeds cap {max_dim}"
        )
    return np.kron(a, b)


def partial_trace(rho, dims: Sequence[int], keep):
    """Trace out every factor not listed in ``keep``.

    Parameters
    ----------
    rho : array_like
        Operator on ``H_0 (x) H_1 (x) ...`` with factor dimensions ``dims``.
    dims : sequence of int
        Factor dimensions; their product must equal ``rho.shape[0]``.
    keep : iterable of int
        Factors to keep. The result keeps them in their original relative
        order regardless of the order given here.

    Returns
    -------
    numpy.ndarray
        Reduced operator of dimension ``prod(dims[k] for k in keep)``.
    """
    rho = as_matrix(rho)
    dims = [int(d) for d in dims]
    if any(d < 1 for d in dims):
        raise DimensionError(f"factor dimensions must be positive, got {dims}")
    if int(np.prod(dims)) != rho.shape[0]:
        raise DimensionError(f"dims {dims} do not multiply to {rho.shape[0]}")
    keep = sorted(set(int(k) for k in keep))
    if not keep:
        raise DimensionError("keep set must be non-empty")
    if keep[0] < 0 or keep[-1] >= len(dims):
        raise DimensionError(f"keep {keep} out of range for {len(dims)} factors")

    n = len(dims)
    drop = [k for k in range(n) if k not in keep]
    t = rho.reshape(dims + dims)
    # move kept row/col axes to the front, traced axes to the back
    perm = keep + [n + k for k in keep] + drop + [n + k for k in drop]
    t = t.transpose(perm)
    dk = int(np.prod([dims[k] for k in keep]))
    dd = int(np.prod([dims[k] for k in drop])) if drop else 1
    t = t.reshape(dk, dk, dd, dd)
    return np.trace(t, axis1=2, axis2=3)


@dataclass(frozen=True)
class HermitianSpectrum:
    """Eigenvalues (descending) and matching orthonormal eigenvector columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    sweeps: int = field(default=0, compare=False)

    def reconstruct(self):
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T


def hermitian_eigs(h, tol=EIG_TOL) -> HermitianSpectrum:
    """Full eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.

    Sweeps continue until the off-diagonal Frobenius mass drops below
    ``tol * ||h||_F``. The result is deterministic for a given input and
    backend; eigenvalues are sorted in descending order.
    """
    m = as_matrix(h)
    dev = float(np.max(np.abs(m - m.conj().T)))
    if dev > HERMITIAN_TOL:
        raise InvalidStateError(f"matrix is not Hermitian (max deviation {dev:.3e})")
    m = 0.5 * (m + m.conj().T)
    w, v, sweeps = _backend.jacobi_eigh(m, tol)
    if sweeps < 0:
        raise RuntimeError("Jacobi iteration did not converge")
    order = np.argsort(-w, kind="stable")
    return HermitianSpectrum(w[order], v[:, order], sweeps)


def sqrt_from_spectrum(spec: HermitianSpectrum, clamp=NEG_EIG_CLAMP):
    w = spec.eigenvalues
    if w.size and w[-1] < clamp:
        raise InvalidStateError(f"eigenvalue {w[-1]:.3e} below {clamp:g}")
    root = np.sqrt(np.clip(w, 0.0, None))
    v = spec.eigenvectors
    return (v * root) @ v.conj().T


def psd_sqrt(h):
    """Hermitian PSD square root; eigenvalues in ``[-1e-10, 0)`` are clamped to 0."""
    return sqrt_from_spectrum(hermitian_eigs(h))


@dataclass(frozen=True)
class DensityReport:
    hermitian: bool
    psd: bool
    unit_trace: bool
    hermitian_deviation: float
    min_eigenvalue: float
    trace_deviation: float

    @property
    def ok(self) -> bool:
        return self.hermitian and self.psd and self.unit_trace


def validate_density(rho, tol=1e-10) -> DensityReport:
    """Report hermiticity, positivity and unit trace of ``rho`` without raising."""
    m = as_matrix(rho)
    herm_dev = float(np.max(np.abs(m - m.conj().T)))
    tr = np.trace(m)
    tr_dev = float(abs(tr - 1.0))
    # positivity is judged on the Hermitian part when the input is not Hermitian
    min_eig = float(hermitian_eigs(0.5 * (m + m.conj().T)).eigenvalues[-1])
    return DensityReport(
        hermitian=herm_dev <= tol,
        psd=min_eig >= -tol,
        unit_trace=tr_dev <= tol,
        hermitian_deviation=herm_dev,
        min_eigenvalue=min_eig,
        trace_deviation=tr_dev,
    )


def require_density(rho, tol=1e-10, dim=None):
    """Validate ``rho`` and return its spectrum; raise InvalidStateError on failure."""
    m = as_matrix(rho)
    if dim is not None and m.shape[0] != dim:
        raise DimensionError(f"expected a {dim}x{dim} density matrix, got {m.shape}")
    herm_dev = float(np.max(np.abs(m - m.conj().T)))
    if herm_dev > tol:
        raise InvalidStateError(f"density matrix not Hermitian (deviation {herm_dev:.3e})")
    tr_dev = float(abs(np.trace(m) - 1.0))
    if tr_dev > tol:
        raise InvalidStateError(f"density matrix trace deviates from 1 by {tr_dev:.3e}")
    spec = hermitian_eigs(m)
    if spec.eigenvalues[-1] < -tol:
        raise InvalidStateError(
            f"density matrix not PSD (min eigenvalue {spec.eigenvalues[-1]:.3e})"
        )
    return spec
