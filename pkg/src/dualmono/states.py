"""Pure multi-qubit states used throughout: constructors, reductions, JSON I/O.

Qubit 0 is the most significant bit of the basis index (see
:mod:`dualmono.qlinalg`).
"""
import json
import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

import numpy as np

from .errors import DimensionError, InvalidStateError
from .qlinalg import hermitian_eigs, partial_trace

NORM_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class PureState:
    """Normalized amplitude vector over ``2**num_qubits`` basis states."""

    num_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.array(self.amplitudes, dtype=np.complex128).reshape(-1)
        if self.num_qubits < 1:
            raise DimensionError("num_qubits must be positive")
        if amps.size != 2**self.num_qubits:
            raise DimensionError(
                f"{amps.size} amplitudes do not match {self.num_qubits} qubits"
            )
        norm = float(np.linalg.norm(amps))
        if abs(norm - 1.0) > NORM_TOL:
            raise InvalidStateError(f"state norm {norm!r} differs from 1")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @classmethod
    def from_amplitudes(cls, amplitudes, normalize=False):
        amps = np.asarray(amplitudes, dtype=np.complex128).reshape(-1)
        n = amps.size.bit_length() - 1
        if amps.size < 2 or 2**n != amps.size:
            raise DimensionError(f"amplitude count {amps.size} is not a power of two >= 2")
        if normalize:
            norm = np.linalg.norm(amps)
            if norm == 0:
                raise InvalidStateError("zero vector cannot be normalized")
            amps = amps / norm
        return cls(n, amps)

    def __repr__(self):
        return f"PureState(num_qubits={self.num_qubits})"


@dataclass(frozen=True)
class SchmidtPair:
    lambda0: float
    lambda1: float


@dataclass(frozen=True)
class Bipartition:
    """Split of qubits into ``focus`` (side A) and ``rest``."""

    focus: tuple
    rest: tuple

    @classmethod
    def of(cls, num_qubits: int, focus) -> "Bipartition":
        if isinstance(focus, (int, np.integer)):
            focus = (int(focus),)
        focus = tuple(sorted(set(int(f) for f in focus)))
        if not focus:
            raise DimensionError("focus must be non-empty")
        if focus[0] < 0 or focus[-1] >= num_qubits:
            raise DimensionError(f"focus {focus} out of range for {num_qubits} qubits")
        rest = tuple(k for k in range(num_qubits) if k not in focus)
        return cls(focus, rest)


def _check_qubits(num_qubits, qubits):
    qubits = sorted(set(int(k) for k in qubits))
    if not qubits:
        raise DimensionError("qubit set must be non-empty")
    if qubits[0] < 0 or qubits[-1] >= num_qubits:
        raise DimensionError(f"qubits {qubits} out of range for {num_qubits} qubits")
    return qubits


def basis_state(bits: str) -> PureState:
    """Computational basis state from a bit string such as ``"010"``."""
    amps = np.zeros(2 ** len(bits), dtype=np.complex128)
    amps[int(bits, 2)] = 1.0
    return PureState(len(bits), amps)


def generalized_schmidt_state(lambdas, phi=0.0, tol=1e-10) -> PureState:
    """Three-qubit state in generalized Schmidt form.

    ``l0|000> + l1 e^{i phi}|100> + l2|101> + l3|110> + l4|111>`` with kets
    written as ``|q0 q1 q2>``. Concurrences are ``C(0|12) = 2 l0 sqrt(l2^2 +
    l3^2 + l4^2)``, ``C(q0 q1) = 2 l0 l3`` and ``C(q0 q2) = 2 l0 l2``.
    """
    lam = np.asarray(lambdas, dtype=float)
    if lam.shape != (5,):
        raise DimensionError("expected five coefficients")
    if np.any(lam < 0):
        raise InvalidStateError("coefficients must be nonnegative")
    if not 0.0 <= phi <= math.pi:
        raise InvalidStateError("phase must lie in [0, pi]")
    total = float(np.sum(lam**2))
    if abs(total - 1.0) > tol:
        raise InvalidStateError(f"sum of squared coefficients is {total!r}, not 1")
    amps = np.zeros(8, dtype=np.complex128)
    amps[0b000] = lam[0]
    amps[0b100] = lam[1] * np.exp(1j * phi)
    amps[0b101] = lam[2]
    amps[0b110] = lam[3]
    amps[0b111] = lam[4]
    return PureState(3, amps / math.sqrt(total))


EXAMPLE1_LAMBDAS = (
    1 / math.sqrt(5),
    0.0,
    math.sqrt(2 / 5),
    1 / math.sqrt(5),
    1 / math.sqrt(5),
)


def example1_state() -> PureState:
    return generalized_schmidt_state(EXAMPLE1_LAMBDAS, 0.0)


def dicke_state(n: int, k: int) -> PureState:
    """Equal superposition of the ``C(n, k)`` basis states with ``k`` ones."""
    if n < 1:
        raise DimensionError("n must be positive")
    if not 0 <= k <= n:
        raise DimensionError(f"excitation count {k} outside [0, {n}]")
    amps = np.zeros(2**n, dtype=np.complex128)
    amp = 1.0 / math.sqrt(math.comb(n, k))
    for ones in combinations(range(n), k):
        amps[sum(1 << (n - 1 - i) for i in ones)] = amp
    return PureState(n, amps)


def w_state(n: int) -> PureState:
    return dicke_state(n, 1)


def ghz_state(n: int) -> PureState:
    amps = np.zeros(2**n, dtype=np.complex128)
    amps[0] = amps[-1] = 1 / math.sqrt(2)
    return PureState(n, amps)


def bell_state() -> PureState:
    return ghz_state(2)


def product_state(n: int) -> PureState:
    return basis_state("0" * n)


def density_of(psi: PureState) -> np.ndarray:
    a = psi.amplitudes
    return np.outer(a, a.conj())


def reduced(psi: PureState, keep: Iterable[int]) -> np.ndarray:
    """Reduced density operator of ``psi`` on the qubits in ``keep``.

    Contracts the amplitude tensor directly, which avoids forming the full
    ``2**N x 2**N`` projector; equal to ``partial_trace(density_of(psi), ...)``.
    """
    n = psi.num_qubits
    keep = _check_qubits(n, keep)
    drop = [k for k in range(n) if k not in keep]
    t = psi.amplitudes.reshape((2,) * n).transpose(keep + drop)
    m = t.reshape(2 ** len(keep), -1)
    return m @ m.conj().T


def reduced_via_density(psi: PureState, keep) -> np.ndarray:
    return partial_trace(density_of(psi), (2,) * psi.num_qubits, keep)


def schmidt_pair(psi: PureState, focus) -> SchmidtPair:
    """Squared Schmidt coefficients across the cut ``focus | rest``, descending."""
    if not isinstance(focus, (int, np.integer)):
        focus = tuple(focus)
        if len(focus) != 1:
            raise DimensionError("schmidt_pair needs a single focus qubit")
        focus = focus[0]
    w = hermitian_eigs(reduced(psi, [focus])).eigenvalues
    w = np.clip(w, 0.0, 1.0)
    return SchmidtPair(float(w[0]), float(w[1]))


def state_to_dict(psi: PureState) -> dict:
    return {
        "num_qubits": psi.num_qubits,
        "amplitudes": [[float(z.real), float(z.imag)] for z in psi.amplitudes],
    }


def state_from_dict(data: dict) -> PureState:
    try:
        n = int(data["num_qubits"])
        amps = np.array([complex(re, im) for re, im in data["amplitudes"]])
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidStateError(f"malformed state document: {exc}") from exc
    return PureState(n, amps)


def dump_state(psi: PureState, path) -> None:
    with open(path, "w") as fh:
        json.dump(state_to_dict(psi), fh, indent=1)
        fh.write("\n")


def load_state(path) -> PureState:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise InvalidStateError(f"{path}: not valid JSON ({exc})") from exc
    return state_from_dict(data)
