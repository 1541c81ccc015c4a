"""Entanglement measures built on the dual (complementary) entropies.

Two evaluation routes exist for every entropy-type measure:

* spectral: apply the entropy definition to the eigenvalues of the reduced
  state (the authoritative value);
* concurrence: evaluate a closed-form connector function (``h_st``,
  ``f_eof``, ``g_tsallis``, ``f_ttq``) at the concurrence of the cut.

For pure states both are computed and stored; two-qubit mixed states only
have the concurrence route.
"""
import enum
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import DimensionError, DomainError, InvalidStateError
from .qlinalg import PAULI_Y, hermitian_eigs, require_density
from .states import Bipartition, PureState, reduced

Q_MIN = (5 - math.sqrt(13)) / 2
Q_MAX = (5 + math.sqrt(13)) / 2
Q_SERIES_SWITCH = 1e-6
EIG_CLAMP_TOL = 1e-10
# eigenvalues of rho below this are treated as exact zeros in the Wootters route
RANK_CUTOFF = 1e-13

_YY = np.kron(PAULI_Y, PAULI_Y)


class Kind(enum.Enum):
    CONCURRENCE = "concurrence"
    ST_ENTROPY = "st"
    EOF = "eof"
    TSALLIS = "tsallis"
    TTQ_ENTROPY = "ttq"
    TANGLE = "tangle"


_NEEDS_Q = {Kind.TSALLIS, Kind.TTQ_ENTROPY}
_ENTROPIC = {Kind.ST_ENTROPY, Kind.EOF, Kind.TSALLIS, Kind.TTQ_ENTROPY}


@dataclass(frozen=True)
class MeasureKind:
    """A measure selector; ``q`` is required for the Tsallis-type kinds."""

    kind: Kind
    q: Optional[float] = None

    def __post_init__(self):
        if self.kind in _NEEDS_Q:
            if self.q is None:
                raise DomainError(f"{self.kind.value} needs an entropic index q")
            check_q(self.q)
        elif self.q is not None:
            raise DomainError(f"{self.kind.value} takes no q")

    @property
    def in_window(self) -> bool:
        """Whether ``q`` lies in the window where two-qubit closed forms hold."""
        return self.q is None or Q_MIN <= self.q <= Q_MAX

    @property
    def label(self) -> str:
        return self.kind.value if self.q is None else f"{self.kind.value}:{self.q!r}"

    @classmethod
    def parse(cls, text: str, q=None) -> "MeasureKind":
        """Parse ``"st"``, ``"ttq:2"`` or ``"ttq"`` with a separate ``q``."""
        name, _, qtext = text.partition(":")
        try:
            kind = Kind(name.strip().lower())
        except ValueError:
            raise DomainError(f"unknown measure {name!r}") from None
        if qtext:
            q = float(qtext)
        if kind not in _NEEDS_Q:
            q = None
        return cls(kind, q)


CONCURRENCE = MeasureKind(Kind.CONCURRENCE)
ST_ENTROPY = MeasureKind(Kind.ST_ENTROPY)
EOF = MeasureKind(Kind.EOF)
TANGLE = MeasureKind(Kind.TANGLE)


def tsallis(q) -> MeasureKind:
    return MeasureKind(Kind.TSALLIS, float(q))


def ttq(q) -> MeasureKind:
    return MeasureKind(Kind.TTQ_ENTROPY, float(q))


def check_q(q):
    if not q > 0:
        raise DomainError(f"entropic index q must be positive, got {q}")


def check_q_window(q):
    check_q(q)
    if not Q_MIN <= q <= Q_MAX:
        raise DomainError(
            f"q = {q} outside the closed-form window [{Q_MIN:.6f}, {Q_MAX:.6f}]"
        )


class Route(enum.Enum):
    SPECTRAL = "spectral"
    CONCURRENCE_CLOSED_FORM = "concurrence"


@dataclass(frozen=True)
class MeasureValue:
    kind: MeasureKind
    value: float
    route: Route
    cross_check: Optional[float] = None


# --- scalar building blocks ------------------------------------------------


def _neg_plogp(p):
    """``-p log2 p`` with ``0 log 0 = 0``."""
    return -p * math.log2(p) if p > 0.0 else 0.0


def _tsallis_term(p, q):
    """``(p - p**q) / (q - 1)``; Taylor series in ``q - 1`` near ``q = 1`` (nats)."""
    if p <= 0.0:
        return 0.0
    eps = q - 1.0
    if abs(eps) < Q_SERIES_SWITCH:
        lp = math.log(p)
        return -p * lp - 0.5 * eps * p * lp * lp
    return (p - p**q) / eps


def _halves(y):
    """Eigenvalues ``(1 +- sqrt(1 - y)) / 2`` of a qubit with ``4 det = y``."""
    root = math.sqrt(max(0.0, 1.0 - y))
    small = 0.25 * y / (0.5 * (1.0 + root))
    return 0.5 * (1.0 + root), small


def _check_unit(x, name):
    if not -1e-12 <= x <= 1.0 + 1e-12:
        raise DomainError(f"{name} argument {x} outside [0, 1]")
    return min(max(float(x), 0.0), 1.0)


def binary_entropy(p) -> float:
    return _neg_plogp(p) + _neg_plogp(1.0 - p)


def h_st(x) -> float:
    """Concurrence-to-S^t connector: binary entropy of ``(1 + sqrt(1 - x^2)) / 2``."""
    x = _check_unit(x, "h")
    big, small = _halves(x * x)
    return _neg_plogp(big) + _neg_plogp(small)


def f_eof(x) -> float:
    """Entanglement of formation as a function of the squared concurrence ``x``."""
    x = _check_unit(x, "f")
    big, small = _halves(x)
    return _neg_plogp(big) + _neg_plogp(small)


def g_tsallis(x, q) -> float:
    """Tsallis-q entanglement as a function of the squared concurrence ``x``.

    At ``|q - 1| < 1e-6`` the value switches to a first-order series whose
    ``q -> 1`` limit is the binary entropy in nats.
    """
    check_q(q)
    x = _check_unit(x, "g_q")
    big, small = _halves(x)
    return _tsallis_term(big, q) + _tsallis_term(small, q)


def f_ttq(x, q) -> float:
    """T^t_q entanglement as a function of the concurrence; ``2 g_q(x^2)``."""
    check_q(q)
    x = _check_unit(x, "f_q")
    return 2.0 * g_tsallis(x * x, q)


def _spectrum01(rho):
    w = hermitian_eigs(rho).eigenvalues
    if w[-1] < -EIG_CLAMP_TOL or w[0] > 1.0 + EIG_CLAMP_TOL:
        raise InvalidStateError("density eigenvalues outside [0, 1]")
    return np.clip(w, 0.0, 1.0)


def total_entropy_st(rho) -> float:
    """``-tr[rho log2 rho + (1 - rho) log2 (1 - rho)]`` via the spectrum."""
    require_density(rho)
    return float(sum(_neg_plogp(p) + _neg_plogp(1.0 - p) for p in _spectrum01(rho)))


def total_entropy_tq(rho, q) -> float:
    """Tsallis-q entropy of ``rho`` plus that of its complement ``1 - rho``."""
    check_q(q)
    require_density(rho)
    # with tr(rho) = 1 the numerator splits into sum_i phi(p_i) + phi(1 - p_i)
    return float(sum(_tsallis_term(p, q) + _tsallis_term(1.0 - p, q) for p in _spectrum01(rho)))


def von_neumann_entropy(rho) -> float:
    return sum(_neg_plogp(p) for p in _spectrum01(rho))


def tsallis_entropy(rho, q) -> float:
    check_q(q)
    return sum(_tsallis_term(p, q) for p in _spectrum01(rho))


# --- concurrence -------------------------------------------------------------


def concurrence_from_reduced(rho_a) -> float:
    purity = float(np.real(np.trace(rho_a @ rho_a)))
    return math.sqrt(max(0.0, 2.0 * (1.0 - purity)))


def concurrence_pure(psi: PureState, cut) -> float:
    """``sqrt(2 (1 - tr rho_A^2))`` for the reduced state on ``cut.focus``."""
    if not isinstance(cut, Bipartition):
        cut = Bipartition.of(psi.num_qubits, cut)
    return concurrence_from_reduced(reduced(psi, cut.focus))


def concurrence_2q_mixed(rho) -> float:
    """Wootters concurrence of a two-qubit density matrix.

    The spin-flip values ``eta_i`` are the square roots of the eigenvalues of
    ``sqrt(rho) rho~ sqrt(rho)``, i.e. the singular values of
    ``A = sqrt(rho) (Y x Y) sqrt(rho)*``. They are read off the positive
    eigenvalues of the Hermitian dilation ``[[0, A], [A^H, 0]]``, which keeps
    absolute accuracy for rank-deficient (e.g. pure) inputs where taking
    square roots of tiny eigenvalues would amplify rounding noise.
    """
    spec = require_density(rho, dim=4)
    w = spec.eigenvalues
    keep = w > RANK_CUTOFF
    if not np.any(keep):
        return 0.0
    v = spec.eigenvectors[:, keep]
    x = v * np.sqrt(w[keep])  # columns sqrt(lambda_i) |v_i>
    # A restricted to the support: tau_ij = <x_i| Y x Y |x_j^*>
    tau = x.conj().T @ _YY @ x.conj()
    r = tau.shape[0]
    dil = np.zeros((2 * r, 2 * r), dtype=np.complex128)
    dil[:r, r:] = tau
    dil[r:, :r] = tau.conj().T
    sv = hermitian_eigs(dil).eigenvalues[:r]
    eta = np.zeros(4)
    eta[:r] = np.clip(sv, 0.0, None)
    return max(0.0, float(eta[0] - eta[1] - eta[2] - eta[3]))


# --- measure evaluation -------------------------------------------------------


def _from_concurrence(c, kind: MeasureKind) -> float:
    k = kind.kind
    if k is Kind.CONCURRENCE:
        return c
    if k is Kind.TANGLE:
        return c * c
    if k is Kind.ST_ENTROPY:
        return h_st(c)
    if k is Kind.EOF:
        return f_eof(c * c)
    if k is Kind.TSALLIS:
        return g_tsallis(c * c, kind.q)
    if k is Kind.TTQ_ENTROPY:
        return f_ttq(c, kind.q)
    raise DomainError(f"unsupported measure {kind}")  # pragma: no cover


def _spectral(rho_a, kind: MeasureKind) -> float:
    k = kind.kind
    w = _spectrum01(rho_a)
    if k is Kind.ST_ENTROPY:
        # qubit focus: r = 2 log2 2 - 1 log2 1 = 2
        return sum(_neg_plogp(p) + _neg_plogp(1.0 - p) for p in w) / 2.0
    if k is Kind.EOF:
        return sum(_neg_plogp(p) for p in w)
    if k is Kind.TSALLIS:
        return sum(_tsallis_term(p, kind.q) for p in w)
    if k is Kind.TTQ_ENTROPY:
        return sum(_tsallis_term(p, kind.q) + _tsallis_term(1.0 - p, kind.q) for p in w)
    purity = float(np.sum(w * w))
    tangle = max(0.0, 2.0 * (1.0 - purity))
    return math.sqrt(tangle) if k is Kind.CONCURRENCE else tangle


def measure_pure(psi: PureState, cut, kind: MeasureKind) -> MeasureValue:
    """Evaluate ``kind`` on the bipartition ``cut`` of a pure state.

    The value comes from the reduced spectrum; the concurrence-route value is
    stored in ``cross_check``. Entropy-type kinds need a single-qubit focus
    because the S^t normalization is only defined here for a qubit side.
    """
    if not isinstance(cut, Bipartition):
        cut = Bipartition.of(psi.num_qubits, cut)
    if kind.kind in _ENTROPIC and len(cut.focus) != 1:
        raise DimensionError(
            f"{kind.label} is only supported for a single-qubit focus, got {cut.focus}"
        )
    rho_a = reduced(psi, cut.focus)
    value = float(_spectral(rho_a, kind))
    check = _from_concurrence(concurrence_from_reduced(rho_a), kind)
    return MeasureValue(kind, value, Route.SPECTRAL, check)


def measure_2q(rho, kind: MeasureKind) -> MeasureValue:
    """Closed-form measure of a two-qubit mixed state from its Wootters concurrence."""
    if kind.kind is Kind.TANGLE:
        raise DomainError("mixed-state tangle is not supported (needs a convex roof)")
    if kind.kind in _NEEDS_Q:
        check_q_window(kind.q)
    c = concurrence_2q_mixed(rho)
    return MeasureValue(kind, _from_concurrence(c, kind), Route.CONCURRENCE_CLOSED_FORM)


def max_value(kind: MeasureKind) -> float:
    """Largest value of ``kind`` on a qubit cut (concurrence 1)."""
    return _from_concurrence(1.0, kind)
