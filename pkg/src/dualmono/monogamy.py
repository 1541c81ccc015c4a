"""Monogamy lower bounds for the S^t and T^t_q entanglement families.

Every bound has the form ``sum_i c_i v_i**alpha`` over the pairwise values
``v_1 >= v_2 >= ... >= v_{N-1}`` (sorted descending), where the weights
``c_i`` depend on the exponent and on ratios of the ``gamma``-th powers.
``gamma`` is ``sqrt(2)`` for S^t and ``2`` for T^t_q. Writing
``P_i = v_i**gamma``, ``T_i = sum_{k>i} P_k`` and ``x = alpha / gamma``:

==============  ============================================================
POWERSUM        ``c_i = 1``
WEIGHTED_GEO    ``c_i = (2**x - 1)**(i-1)``
MJ_PRODUCT      ``c_1 = 1``, ``c_i = prod_{j<i} M_j``, ``M_j = 2**x - (T_j/P_j)**x``
THM_ORDERED     ``c_i = (1 + T_i/P_i) G**(i-1)``, ``c_{N-1} = G**(N-2)``, ``G = 2**x - 2``
THM_MIXED(m)    ordered head for ``i <= m``, then the ``1 + P_j/T_j`` chain
==============  ============================================================
"""
import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ConditionError, DomainError
from .measures import Kind, MeasureKind, measure_2q, measure_pure
from .states import PureState, reduced

SQRT2 = math.sqrt(2.0)
GOLDEN_T = (math.sqrt(5.0) - 1.0) / 2.0
ORDER_TOL = 1e-12
# exponents quoted to three decimals (2.828 for 2*sqrt(2)) are accepted
EXPONENT_SLACK = 5e-4


class BoundKind(enum.Enum):
    POWERSUM = "powersum"
    WEIGHTED_GEO = "weighted"
    MJ_PRODUCT = "mj"
    THM_ORDERED = "thm"
    THM_MIXED = "thm_mixed"


@dataclass(frozen=True)
class MonogamyFamily:
    name: str
    gamma: float

    def min_alpha(self, bound: BoundKind) -> float:
        return min_exponent(bound, self.gamma)


ST_FAMILY = MonogamyFamily("st", SQRT2)
TTQ_FAMILY = MonogamyFamily("ttq", 2.0)


def family_for(kind: MeasureKind) -> MonogamyFamily:
    if kind.kind is Kind.ST_ENTROPY:
        return ST_FAMILY
    if kind.kind is Kind.TTQ_ENTROPY:
        return TTQ_FAMILY
    raise DomainError(f"no monogamy family for measure {kind.label}")


def min_exponent(bound: BoundKind, gamma: float) -> float:
    if bound in (BoundKind.POWERSUM, BoundKind.WEIGHTED_GEO):
        return gamma
    return 2.0 * gamma


def check_exponent(bound: BoundKind, alpha: float, gamma: float) -> None:
    lo = min_exponent(bound, gamma)
    if alpha < lo - EXPONENT_SLACK:
        raise DomainError(f"{bound.value} bound needs exponent >= {lo:.6f}, got {alpha}")


def _sorted_desc(values) -> np.ndarray:
    v = np.asarray(values, dtype=float).reshape(-1)
    if v.size == 0:
        raise DomainError("need at least one pairwise value")
    if np.any(v < 0):
        raise DomainError("pairwise values must be nonnegative")
    return -np.sort(-v, kind="stable")


def _tails(p):
    """``T_i = sum_{k > i} p_k``."""
    out = np.zeros_like(p)
    out[:-1] = np.cumsum(p[::-1])[::-1][1:]
    return out


@dataclass(frozen=True)
class OrderingProfile:
    """Sorted values and the split index ``m`` of the ordering conditions.

    ``head[i]`` is ``P_{i+1} >= T_{i+1}`` and ``reverse[i]`` its converse
    (both with tolerance), for the first ``N - 2`` sorted indices.
    ``consistent`` is false when no ``m`` makes the head conditions hold
    up to ``m`` and the reverse conditions hold after it; ``m`` is then the
    length of the longest satisfied head prefix.
    """

    values: tuple
    order: tuple
    m: int
    head: tuple
    reverse: tuple
    consistent: bool

    @property
    def full(self) -> bool:
        return self.consistent and self.m == len(self.values) - 1


def ordering_profile(values, gamma, tol=ORDER_TOL) -> OrderingProfile:
    v = np.asarray(values, dtype=float).reshape(-1)
    if np.any(v < 0):
        raise DomainError("pairwise values must be nonnegative")
    order = tuple(int(i) for i in np.argsort(-v, kind="stable"))
    s = v[list(order)]
    p = s**gamma
    t = _tails(p)
    k = len(s) - 1  # number of conditions, N - 2
    head = tuple(bool(p[i] >= t[i] - tol) for i in range(k))
    rev = tuple(bool(p[i] <= t[i] + tol) for i in range(k))
    for m in range(k, -1, -1):
        if all(head[:m]) and all(rev[m:]):
            return OrderingProfile(tuple(float(a) for a in s), order, m, head, rev, True)
    prefix = next((i for i, ok in enumerate(head) if not ok), k)
    return OrderingProfile(tuple(float(a) for a in s), order, prefix, head, rev, False)


def _ratio(num, den):
    # den == 0 implies num == 0 for sorted inputs; the terms it multiplies vanish
    return num / den if den > 0 else 0.0


def coefficients(bound: BoundKind, values, alpha, gamma, m=None):
    """Per-term weights ``c`` (aligned with sorted values) and named coefficients."""
    v = _sorted_desc(values)
    n = v.size
    x = alpha / gamma
    p = v**gamma
    t = _tails(p)
    named = {}

    if bound is BoundKind.POWERSUM:
        c = np.ones(n)
    elif bound is BoundKind.WEIGHTED_GEO:
        w = 2.0**x - 1.0
        c = w ** np.arange(n, dtype=float)
        named["weight"] = w
    elif bound is BoundKind.MJ_PRODUCT:
        mj = np.array([2.0**x - _ratio(t[j], p[j]) ** x for j in range(n - 1)])
        c = np.concatenate(([1.0], np.cumprod(mj))) if n > 1 else np.ones(1)
        named["M"] = mj.tolist()
    elif bound is BoundKind.THM_ORDERED:
        g = 2.0**x - 2.0
        omega = np.array([_ratio(t[i], p[i]) for i in range(n - 1)])
        c = np.empty(n)
        c[: n - 1] = (1.0 + omega) * g ** np.arange(n - 1, dtype=float)
        c[n - 1] = g ** (n - 1)
        named["Gamma"] = g
        named["Omega"] = omega.tolist()
    elif bound is BoundKind.THM_MIXED:
        if m is None or not 0 <= m <= n - 1:
            raise DomainError(f"split index m must lie in [0, {n - 1}], got {m}")
        g = 2.0**x - 2.0
        omega = np.array([_ratio(t[i], p[i]) for i in range(m)])
        c = np.empty(n)
        c[:m] = (1.0 + omega) * g ** np.arange(m, dtype=float)
        named["Gamma"] = g
        named["Omega"] = omega.tolist()
        if m == n - 1:
            c[n - 1] = g ** (n - 1)
            named["Upsilon"] = []
        else:
            ups = np.array([_ratio(p[j], t[j]) for j in range(m, n - 1)])
            chain = np.concatenate(([1.0], np.cumprod(1.0 + ups)))
            c[m : n - 1] = g ** (m + 1) * chain[:-1]
            c[n - 1] = g**m * chain[-1]
            named["Upsilon"] = ups.tolist()
    else:  # pragma: no cover
        raise DomainError(f"unknown bound {bound}")
    return c, named


def _evaluate(bound, values, alpha, gamma, m=None):
    check_exponent(bound, alpha, gamma)
    v = _sorted_desc(values)
    c, _ = coefficients(bound, v, alpha, gamma, m)
    return float(np.dot(c, v**alpha))


def bound_powersum(values, alpha, gamma=SQRT2) -> float:
    """``sum_i v_i**alpha``."""
    return _evaluate(BoundKind.POWERSUM, values, alpha, gamma)


def bound_weighted_geo(values, alpha, gamma=SQRT2) -> float:
    """Geometric weights ``(2**(alpha/gamma) - 1)**(i-1)``.

    Valid only when every ordering condition holds; that is not checked
    here (see :func:`verify`).
    """
    return _evaluate(BoundKind.WEIGHTED_GEO, values, alpha, gamma)


def bound_mj(values, alpha, gamma=SQRT2) -> float:
    return _evaluate(BoundKind.MJ_PRODUCT, values, alpha, gamma)


def bound_thm_ordered(values, alpha, gamma=SQRT2) -> float:
    """Ordered-chain bound; requires every head ordering condition.

    Raises
    ------
    ConditionError
        If some ``v_i**gamma < sum_{k>i} v_k**gamma``; use
        :func:`bound_thm_mixed` with the profile's ``m`` instead.
    """
    prof = ordering_profile(values, gamma)
    if not prof.full:
        raise ConditionError(
            f"ordering conditions fail (m = {prof.m}); use the mixed bound with m = {prof.m}"
        )
    return _evaluate(BoundKind.THM_ORDERED, values, alpha, gamma)


def bound_thm_mixed(values, alpha, gamma=SQRT2, m=None) -> float:
    """Mixed-chain bound with split index ``m`` (defaults to the profile's)."""
    if m is None:
        m = ordering_profile(values, gamma).m
    return _evaluate(BoundKind.THM_MIXED, values, alpha, gamma, m)


@dataclass
class BoundReport:
    bound: BoundKind
    measure: str
    alpha: float
    gamma: float
    lhs: float
    pairwise: list
    order: list
    weights: list
    coefficients: dict
    rhs: float
    conditions_met: list
    m_used: int
    profile_m: int
    consistent: bool
    notes: list = field(default_factory=list)

    @property
    def slack(self) -> float:
        return self.lhs - self.rhs

    def recompute_rhs(self) -> float:
        return float(sum(c * v**self.alpha for c, v in zip(self.weights, self.pairwise)))

    def as_dict(self) -> dict:
        return {
            "bound": self.bound.value,
            "measure": self.measure,
            "alpha": self.alpha,
            "gamma": self.gamma,
            "lhs": self.lhs,
            "pairwise": self.pairwise,
            "order": self.order,
            "weights": self.weights,
            "coefficients": self.coefficients,
            "rhs": self.rhs,
            "slack": self.slack,
            "conditions_met": self.conditions_met,
            "m_used": self.m_used,
            "profile_m": self.profile_m,
            "consistent": self.consistent,
            "notes": self.notes,
        }


def marginal_values(psi: PureState, focus: int, kind: MeasureKind):
    """One-to-group value on ``focus | rest`` and pairwise values in qubit order."""
    one = measure_pure(psi, focus, kind).value
    others = [j for j in range(psi.num_qubits) if j != focus]
    pairs = [measure_2q(reduced(psi, [focus, j]), kind).value for j in others]
    return one, pairs, others


def verify(psi: PureState, focus: int, kind: MeasureKind, alpha: float,
           bound: BoundKind, m=None) -> BoundReport:
    """Evaluate one bound against the one-to-group measure of ``psi``.

    ``lhs`` is the ``alpha``-th power of the measure on ``focus | rest``;
    pairwise values come from the two-qubit reductions ``(focus, j)``.
    """
    if psi.num_qubits < 2:
        raise DomainError("need at least two qubits")
    fam = family_for(kind)
    gamma = fam.gamma
    check_exponent(bound, alpha, gamma)
    one, pairs, others = marginal_values(psi, focus, kind)
    prof = ordering_profile(pairs, gamma)
    notes = []
    conditions = list(prof.head)

    if bound is BoundKind.THM_ORDERED:
        if not prof.full:
            raise ConditionError(
                f"ordering conditions fail (m = {prof.m}); use thm_mixed with m = {prof.m}"
            )
        m_used = prof.m
    elif bound is BoundKind.THM_MIXED:
        m_used = prof.m if m is None else int(m)
        k = len(pairs) - 1
        if not 0 <= m_used <= k:
            raise DomainError(f"split index m must lie in [0, {k}], got {m_used}")
        conditions = list(prof.head[:m_used]) + list(prof.reverse[m_used:])
        if not all(conditions):
            notes.append(f"ordering conditions do not hold for m = {m_used}")
        if not (1 <= m_used <= k - 1):
            notes.append(f"m = {m_used} is outside the proven range 1..N-3")
    else:
        m_used = prof.m
        if bound is not BoundKind.POWERSUM and not prof.full:
            notes.append("bound assumes all ordering conditions, which fail here")

    c, named = coefficients(bound, pairs, alpha, gamma, m_used)
    v = np.asarray(prof.values)
    rhs = float(np.dot(c, v**alpha))
    return BoundReport(
        bound=bound,
        measure=kind.label,
        alpha=float(alpha),
        gamma=gamma,
        lhs=float(one**alpha),
        pairwise=[float(x) for x in v],
        order=[others[i] for i in prof.order],
        weights=[float(x) for x in c],
        coefficients=named,
        rhs=rhs,
        conditions_met=conditions,
        m_used=m_used,
        profile_m=prof.m,
        consistent=prof.consistent,
        notes=notes,
    )


class Lemma(enum.Enum):
    L1 = "L1"
    L2 = "L2"
    L4 = "L4"


def lemma_residual(t, x, which) -> float:
    """Left side minus right side of one scalar lemma inequality.

    L1: ``(1+t)**(x-1) >= 1 + (x-1) t`` for ``t in [0, 1]``, ``x >= 2``.
    L2: ``(1+t)**x >= 1 + t + (2**x - 2) t**x`` for ``t in [0, 1]``, ``x >= 2``.
    L4: ``t - t**x >= t**x - t**(2x)`` for ``t in [0, (sqrt5 - 1)/2]``, ``x >= 2``.
    """
    which = Lemma(which) if not isinstance(which, Lemma) else which
    t_max = GOLDEN_T if which is Lemma.L4 else 1.0
    if not (-1e-12 <= t <= t_max + 1e-12) or x < 2.0 - 1e-12:
        raise DomainError(f"{which.value} defined for t in [0, {t_max:.6f}], x >= 2")
    t = min(max(float(t), 0.0), t_max)
    if which is Lemma.L1:
        return (1.0 + t) ** (x - 1.0) - (1.0 + (x - 1.0) * t)
    if which is Lemma.L2:
        return (1.0 + t) ** x - (1.0 + t + (2.0**x - 2.0) * t**x)
    tx = t**x
    return (t - tx) - (tx - tx * tx)
