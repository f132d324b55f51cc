"""Bracketed scalar root solvers for the critical exponents.

Everything here revolves around the rational map

    F(u) = (1 - p*u)**(p-1) / (1 - (p-1)*u)**p,

which sends 0 to 1, is strictly decreasing from 1 to 0 on [0, 1/p], and
strictly increasing from 0 to 1 on (-inf, 0].  Its two inverse branches
(``u_plus`` on the right bracket, ``u_minus`` on the left) drive all of
the derived quantities: the class parameters s = u(delta**-p), the
point parameters r = u(x2/(delta*x1)**p), and the critical exponents
q_star (finiteness threshold above 1), q_sub (its mirror below 1), and
t_star (the self-improvement threshold, equal to 1/(1 - q_sub)).

All solvers use plain bisection on a bracket with a proven sign change.
F is evaluated through its logarithm, since (1 - p*u)**(p-1) overflows
double precision quickly for large p or large |u|.  Where one endpoint
sign is analytically forced but floating-point evaluation of it would
be pure cancellation noise (for example the lower q_sub endpoint, where
both sides of the defining equation vanish to first order), the known
sign is supplied instead of an evaluated one.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from typing import Callable, NamedTuple

from .domain import INF, DomainPoint, classify_point, is_inf, validate_delta, validate_exponent
from .errors import DomainError, IterationError

# Growth budget for bracket searches: doubling more than this many times
# means the root magnitude is out of any reasonable range.
_MAX_DOUBLINGS = 60


@dataclass(frozen=True)
class RootConfig:
    """Stopping rule for the bisection solvers."""

    rel_tol: float = 1e-12
    abs_tol: float = 1e-14
    max_iter: int = 200

    def __post_init__(self) -> None:
        if not self.rel_tol > 0.0:
            raise DomainError("rel_tol must be positive")
        if not self.abs_tol > 0.0:
            raise DomainError("abs_tol must be positive")
        if self.max_iter < 1:
            raise DomainError("max_iter must be at least 1")


def default_config() -> RootConfig:
    """Default solver configuration.

    The environment variable SHARP_WEIGHTS_TOL, when set, overrides the
    default relative tolerance.
    """
    raw = os.environ.get("SHARP_WEIGHTS_TOL")
    if raw is None or raw == "":
        return RootConfig()
    try:
        tol = float(raw)
    except ValueError:
        raise DomainError(f"SHARP_WEIGHTS_TOL is not a number: {raw!r}") from None
    if not tol > 0.0:
        raise DomainError("SHARP_WEIGHTS_TOL must be positive")
    return RootConfig(rel_tol=tol)


class SPair(NamedTuple):
    s_minus: float
    s_plus: float


def bisect_root(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    cfg: RootConfig,
    f_lo: float | None = None,
    f_hi: float | None = None,
) -> float:
    """Bisection on [lo, hi] down to abs_tol + rel_tol*|mid|.

    ``f_lo``/``f_hi`` may supply endpoint values whose signs are known
    analytically, so the solver never trusts a cancellation-dominated
    endpoint evaluation.  A missing sign change is an error, never a
    guess.
    """
    if f_lo is None:
        f_lo = f(lo)
    if f_hi is None:
        f_hi = f(hi)
    if f_lo == 0.0:
        return lo
    if f_hi == 0.0:
        return hi
    if (f_lo > 0.0) == (f_hi > 0.0):
        raise IterationError(f"no sign change on bracket [{lo}, {hi}]")
    positive_at_lo = f_lo > 0.0
    for _ in range(cfg.max_iter):
        mid = 0.5 * (lo + hi)
        if hi - lo <= cfg.abs_tol + cfg.rel_tol * abs(mid):
            return mid
        fm = f(mid)
        if fm == 0.0:
            return mid
        if (fm > 0.0) == positive_at_lo:
            lo = mid
        else:
            hi = mid
    raise IterationError(f"bisection did not converge within {cfg.max_iter} iterations")


def _require_finite_p(p: float) -> None:
    validate_exponent(p)
    if is_inf(p):
        raise DomainError("a finite exponent p is required here")


def _log_forward(u: float, p: float) -> float:
    """log F(u); -inf at the right endpoint u = 1/p where F vanishes."""
    a = -p * u
    if a <= -1.0:
        return -INF
    return (p - 1.0) * math.log1p(a) - p * math.log1p(-(p - 1.0) * u)


def _log_forward_deriv(u: float, p: float) -> float:
    return -p * (p - 1.0) * u / ((1.0 - p * u) * (1.0 - (p - 1.0) * u))


def _polish_branch(p: float, log_t: float, u: float, lo: float, hi: float) -> float:
    """Finish a bisected branch root with guarded Newton steps.

    Bisection stops at the configured tolerance, but quantities derived
    from the branch value (critical exponents, threshold margins) divide
    by 1 - p*u and amplify that leftover, so the root is driven to
    machine precision here.  Steps that leave (lo, hi) or meet a
    degenerate derivative keep the bisection iterate.
    """
    for _ in range(3):
        d = _log_forward_deriv(u, p)
        if not math.isfinite(d) or d == 0.0:
            break
        r = _log_forward(u, p) - log_t
        if r == 0.0 or not math.isfinite(r):
            break
        nxt = u - r / d
        if not lo < nxt < hi or nxt == u:
            break
        u = nxt
    return u


def u_plus_from_log(p: float, log_t: float, cfg: RootConfig) -> float:
    """Right inverse branch with t passed as log(t).

    Taking log(t) directly keeps callers exact when t = delta**-p would
    underflow or lose digits for large p*log(delta).
    """
    if log_t == 0.0:
        return 0.0
    if log_t == -INF:
        return 1.0 / p
    f = lambda u: _log_forward(u, p) - log_t
    # f(0) = -log_t > 0 and f(1/p) = -inf: analytic endpoint signs.
    root = bisect_root(f, 0.0, 1.0 / p, cfg, f_lo=-log_t, f_hi=-INF)
    return _polish_branch(p, log_t, root, 0.0, 1.0 / p)


def u_minus_from_log(p: float, log_t: float, cfg: RootConfig) -> float:
    """Left inverse branch with t passed as log(t)."""
    if log_t == 0.0:
        return 0.0
    f = lambda u: _log_forward(u, p) - log_t
    # F(u) ~ (p**(p-1)/(p-1)**p)/|u| as u -> -inf, so seed the bracket
    # near the asymptotic magnitude and double from there.
    log_mag = (p - 1.0) * math.log(p) - p * math.log(p - 1.0) - log_t
    lo = -max(2.0, 2.0 * math.exp(min(log_mag, 700.0)))
    f_lo = f(lo)
    for _ in range(_MAX_DOUBLINGS):
        if f_lo <= 0.0:
            break
        lo *= 2.0
        f_lo = f(lo)
    else:
        raise IterationError("no bracket for the negative branch within the doubling budget")
    # f(0) = -log_t > 0 analytically.
    root = bisect_root(f, lo, 0.0, cfg, f_lo=f_lo, f_hi=-log_t)
    return _polish_branch(p, log_t, root, lo, 0.0)


def u_plus(p: float, t: float, cfg: RootConfig | None = None) -> float:
    """Solve F(u) = t on [0, 1/p]; strictly decreasing branch."""
    _require_finite_p(p)
    if math.isnan(t) or not 0.0 <= t <= 1.0:
        raise DomainError(f"u_plus requires t in [0, 1], got {t}")
    if t == 0.0:
        return 1.0 / p
    return u_plus_from_log(p, math.log(t), cfg or default_config())


def u_minus(p: float, t: float, cfg: RootConfig | None = None) -> float:
    """Solve F(u) = t on (-inf, 0]; strictly increasing branch.

    t = 0 is refused: the branch value there is -inf, and callers that
    need the limit must handle it explicitly.
    """
    _require_finite_p(p)
    if math.isnan(t) or not 0.0 < t <= 1.0:
        raise DomainError(f"u_minus requires t in (0, 1], got {t}")
    return u_minus_from_log(p, math.log(t), cfg or default_config())


def s_pair(p: float, delta: float, cfg: RootConfig | None = None) -> SPair:
    """Both branch values at t = delta**-p; exactly (0, 0) at delta = 1."""
    _require_finite_p(p)
    validate_delta(delta)
    if delta == 1.0:
        return SPair(0.0, 0.0)
    cfg = cfg or default_config()
    log_t = -p * math.log(delta)
    return SPair(u_minus_from_log(p, log_t, cfg), u_plus_from_log(p, log_t, cfg))


def point_log_ratio(p: float, delta: float, x: DomainPoint) -> float:
    """log of x2/(delta*x1)**p, validated and clamped into [-p*log(delta), 0]."""
    classify_point(p, delta, x)
    x1, x2 = x
    log_lo = -p * math.log(delta)
    log_t = math.log(x2) - p * (math.log(x1) + math.log(delta))
    return min(0.0, max(log_t, log_lo))


def r_pair(
    p: float, delta: float, x: DomainPoint, cfg: RootConfig | None = None
) -> tuple[float, float]:
    """Both branch values at t = x2/(delta*x1)**p for x in the domain.

    Returns (r_minus, r_plus); the chain
    s_minus <= r_minus <= 0 <= r_plus <= s_plus holds.
    """
    _require_finite_p(p)
    validate_delta(delta)
    cfg = cfg or default_config()
    log_t = point_log_ratio(p, delta, x)
    return (u_minus_from_log(p, log_t, cfg), u_plus_from_log(p, log_t, cfg))


def _critical_gap(p: float, log_delta: float) -> Callable[[float], float]:
    """g(x) = (x/delta)**p - 1 - p*(x - 1), whose two roots straddle 1.

    Written with expm1 so the x near 1 regime (delta near 1) keeps full
    precision.  g is convex with g(1) = delta**-p - 1 < 0, one root in
    ((p-1)/p, 1) and one in (1, inf).
    """

    def g(x: float) -> float:
        return math.expm1(p * (math.log(x) - log_delta)) - p * (x - 1.0)

    return g


def q_star(p: float, delta: float, cfg: RootConfig | None = None) -> float:
    """Finiteness threshold above 1; equals delta in the p = inf limit."""
    validate_exponent(p)
    validate_delta(delta)
    if delta == 1.0:
        return 1.0
    if is_inf(p):
        return delta
    cfg = cfg or default_config()
    log_delta = math.log(delta)
    g = _critical_gap(p, log_delta)
    g_one = math.expm1(-p * log_delta)  # g(1) < 0 for delta > 1
    hi = 2.0
    g_hi = g(hi)
    for _ in range(_MAX_DOUBLINGS):
        if g_hi > 0.0:
            break
        hi *= 2.0
        g_hi = g(hi)
    else:
        raise IterationError("no upper bracket for the critical exponent")
    return bisect_root(g, 1.0, hi, cfg, f_lo=g_one, f_hi=g_hi)


def q_sub(p: float, delta: float, cfg: RootConfig | None = None) -> float:
    """Mirror root of the threshold equation in ((p-1)/p, 1).

    At the left endpoint the defining equation degenerates: both sides
    agree to within ((p-1)/(p*delta))**p, which underflows the rounding
    noise of an evaluated difference for large p*log(delta).  The sign
    there is analytically positive, so it is pinned rather than
    computed.
    """
    _require_finite_p(p)
    validate_delta(delta)
    if delta == 1.0:
        return 1.0
    cfg = cfg or default_config()
    log_delta = math.log(delta)
    g = _critical_gap(p, log_delta)
    g_one = math.expm1(-p * log_delta)
    return bisect_root(g, (p - 1.0) / p, 1.0, cfg, f_lo=1.0, f_hi=g_one)


def t_star(p: float, delta: float, cfg: RootConfig | None = None) -> float:
    """Self-improvement threshold: the root above p of
    (delta*x/(x-1))**p * (x-p)/x = 1, or +inf at delta = 1."""
    _require_finite_p(p)
    validate_delta(delta)
    if delta == 1.0:
        return INF
    cfg = cfg or default_config()
    log_delta = math.log(delta)

    def psi(x: float) -> float:
        gap = x - p
        if gap <= 0.0:
            return -INF
        return (
            p * (log_delta + math.log(x) - math.log(x - 1.0))
            + math.log(gap)
            - math.log(x)
        )

    hi = 2.0 * p
    psi_hi = psi(hi)
    for _ in range(_MAX_DOUBLINGS):
        if psi_hi > 0.0:
            break
        hi *= 2.0
        psi_hi = psi(hi)
    else:
        raise IterationError("no upper bracket for the self-improvement threshold")
    # psi -> -inf as x -> p from above: analytic lower endpoint sign.
    return bisect_root(psi, p, hi, cfg, f_lo=-INF, f_hi=psi_hi)
