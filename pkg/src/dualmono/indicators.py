"""Residual-type multipartite entanglement indicators for pure N-qubit states.

``tau_t`` subtracts the pairwise S^t values (power sqrt 2) from the
one-to-group value; ``omega_q`` does the same with squared T^t_q values.
Only pure global states are handled; the mixed-state version is a convex
roof over decompositions and is not implemented.
"""
import math
from dataclasses import dataclass
from typing import Optional

from .errors import DomainError
from .measures import ST_ENTROPY, check_q_window, f_ttq, h_st, ttq
from .monogamy import SQRT2, marginal_values
from .states import PureState


@dataclass(frozen=True)
class IndicatorResult:
    kind: str
    focus: int
    value: float
    lhs_term: float
    pairwise_terms: tuple
    q: Optional[float] = None


def tau_t(psi: PureState, focus: int = 0) -> IndicatorResult:
    """``E_t(focus|rest)**sqrt2 - sum_j E_t(rho_{focus j})**sqrt2``."""
    one, pairs, _ = marginal_values(psi, focus, ST_ENTROPY)
    lhs = one**SQRT2
    terms = tuple(float(v**SQRT2) for v in pairs)
    return IndicatorResult("tau", focus, lhs - math.fsum(terms), float(lhs), terms)


def omega_q(psi: PureState, focus: int = 0, q: float = 2.0) -> IndicatorResult:
    """Squared T^t_q of ``focus|rest`` minus the squared pairwise values."""
    check_q_window(q)
    one, pairs, _ = marginal_values(psi, focus, ttq(q))
    lhs = one * one
    terms = tuple(float(v * v) for v in pairs)
    return IndicatorResult("omega", focus, lhs - math.fsum(terms), float(lhs), terms, float(q))


def w_closed_form(n: int, kind: str = "tau", q: Optional[float] = None) -> float:
    """Indicator value of the ``n``-qubit W state from its concurrences.

    The one-to-group concurrence is ``2 sqrt(n-1) / n`` and each of the
    ``n - 1`` pairwise concurrences is ``2 / n``.
    """
    if n < 3:
        raise DomainError("W-state closed form needs n >= 3")
    c_one = 2.0 * math.sqrt(n - 1) / n
    c_pair = 2.0 / n
    if kind == "tau":
        return h_st(c_one) ** SQRT2 - (n - 1) * h_st(c_pair) ** SQRT2
    if kind == "omega":
        if q is None:
            raise DomainError("omega closed form needs q")
        check_q_window(q)
        return f_ttq(c_one, q) ** 2 - (n - 1) * f_ttq(c_pair, q) ** 2
    raise DomainError(f"unknown indicator kind {kind!r}")
