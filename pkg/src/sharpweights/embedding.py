"""Sharp embedding constants between the weight classes.

Each constant is the exact supremum of the target functional over the
reverse-Holder class with norm delta, as an extended real:

    aq_constant   sup of the A_q functional, finite iff q > q_star,
    ainf_constant sup of the exponential A_inf functional, always finite,
    rht_constant  sup of the RH_t ratio (self-improvement), finite iff
                  t < t_star.

Values at or below the critical exponent are exactly +inf (the critical
case included); delta = 1 collapses every constant to exactly 1.  The
large powers are evaluated in log space because q near the critical
exponent makes the direct power overflow long before the value does.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass

from . import roots
from .domain import INF, is_inf, validate_delta, validate_exponent
from .errors import DomainError

# q (or t) within this relative band of the critical exponent counts as
# critical and yields +inf; the closed band is exact mathematics, the
# guard only absorbs solver rounding.
_EDGE_GUARD = 1e-12

# constants whose logarithm exceeds this are +inf in double precision
_LOG_MAX = math.log(sys.float_info.max)


@dataclass(frozen=True)
class EmbeddingResult:
    """A sharp constant plus the critical exponent that governs it."""

    constant: float
    critical_exponent: float
    finite: bool


def aq_constant(p: float, q: float, delta: float) -> EmbeddingResult:
    """Sharp constant of the embedding into the q-th moment class."""
    validate_exponent(p)
    validate_delta(delta)
    if math.isnan(q) or not q > 1.0:
        raise DomainError(f"q must exceed 1, got {q}")
    if delta == 1.0:
        return EmbeddingResult(1.0, 1.0, True)
    qs = roots.q_star(p, delta)
    if q <= qs * (1.0 + _EDGE_GUARD):
        return EmbeddingResult(INF, qs, False)
    log_c = (q - 1.0) * (math.log(q - 1.0) - math.log(q - qs)) - math.log(qs)
    if log_c >= _LOG_MAX:
        return EmbeddingResult(INF, qs, False)
    c = math.exp(log_c)
    return EmbeddingResult(c, qs, math.isfinite(c))


def ainf_constant(p: float, delta: float) -> EmbeddingResult:
    """Sharp constant of the embedding into the exponential class."""
    validate_exponent(p)
    validate_delta(delta)
    if delta == 1.0:
        return EmbeddingResult(1.0, 1.0, True)
    qs = roots.q_star(p, delta)
    log_c = qs - 1.0 - math.log(qs)
    if log_c >= _LOG_MAX:
        return EmbeddingResult(INF, qs, False)
    c = math.exp(log_c)
    return EmbeddingResult(c, qs, math.isfinite(c))


def rht_constant(p: float, t: float, delta: float) -> EmbeddingResult:
    """Sharp constant of the self-improvement embedding, for t >= p."""
    validate_exponent(p)
    if is_inf(p):
        raise DomainError("self-improvement is stated for finite p")
    validate_delta(delta)
    if math.isnan(t) or not t >= p:
        raise DomainError(f"t must be at least p = {p}, got {t}")
    if delta == 1.0:
        return EmbeddingResult(1.0, INF, True)
    tp = delta ** -p
    if tp > 1e-300:
        # The threshold sits at p - 1/s with s the negative inverse
        # branch at delta**-p.  Forming the margin from 1/|s| and t - p
        # keeps it accurate even when it is far below one ulp of the
        # threshold itself, which happens already at moderate p*log(delta).
        inv = -1.0 / roots.u_minus(p, tp)
        ts = p + inv
        margin = inv - (t - p)
        noise = _EDGE_GUARD * (inv + (t - p))
    else:
        ts = roots.t_star(p, delta)
        margin = ts - t
        noise = _EDGE_GUARD * ts
    if margin <= noise:
        return EmbeddingResult(INF, ts, False)
    c = (ts - 1.0) / ts * math.exp((math.log(ts) - math.log(margin)) / t)
    return EmbeddingResult(c, ts, math.isfinite(c))
