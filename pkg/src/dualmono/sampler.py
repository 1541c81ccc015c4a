"""Seeded random states for property suites.

Generator: numpy ``PCG64`` bit generator seeded through ``SeedSequence``;
Gaussian variates come from ``Generator.standard_normal`` (ziggurat
method). Streams are reproducible bit-for-bit for a given seed and numpy
release. Substream ``i`` of a spec is seeded with ``SeedSequence(seed,
spawn_key=(i,))`` so parallel workers draw independent streams.
"""
import enum
import os
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .states import PureState

SEED_ENV = "DUALMONO_SEED"
DEFAULT_SEED = 20240601


class Ensemble(enum.Enum):
    HAAR_PURE = "haar"
    MIXED_VIA_PURIFICATION = "purified"


@dataclass(frozen=True)
class SampleSpec:
    num_qubits: int
    ensemble: Ensemble = Ensemble.HAAR_PURE
    seed: int = DEFAULT_SEED
    count: int = 1


def default_seed() -> int:
    """Seed from ``$DUALMONO_SEED`` if set, else the package default."""
    text = os.environ.get(SEED_ENV)
    return int(text, 0) if text else DEFAULT_SEED


def make_rng(seed: int, stream: int = 0) -> np.random.Generator:
    ss = np.random.SeedSequence(seed & 0xFFFFFFFFFFFFFFFF, spawn_key=(stream,))
    return np.random.Generator(np.random.PCG64(ss))


def haar_vector(rng: np.random.Generator, dim: int) -> np.ndarray:
    z = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return z / np.linalg.norm(z)


def haar_pure(spec: SampleSpec, stream: int = 0) -> Iterator[PureState]:
    """Haar-random pure states: normalized i.i.d. complex Gaussian amplitudes."""
    if spec.num_qubits < 1:
        raise ValueError("num_qubits must be positive")
    rng = make_rng(spec.seed, stream)
    dim = 2**spec.num_qubits
    for _ in range(spec.count):
        yield PureState(spec.num_qubits, haar_vector(rng, dim))


def mixed_2q(spec: SampleSpec, stream: int = 0) -> Iterator[np.ndarray]:
    """Two-qubit density matrices: qubits 0 and 1 of a Haar state on ``num_qubits``.

    ``num_qubits`` is the size of the purification (4 gives the standard
    induced ensemble with a 4-dimensional environment).
    """
    if spec.num_qubits < 2:
        raise ValueError("purification needs at least two qubits")
    rng = make_rng(spec.seed, stream)
    d_env = 2 ** (spec.num_qubits - 2)
    for _ in range(spec.count):
        m = haar_vector(rng, 4 * d_env).reshape(4, d_env)
        yield m @ m.conj().T
