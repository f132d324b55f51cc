"""The ramp-plateau power weight family and its exact functionals.

A weight here is w(t) = c*(t/a)**nu on [0, a) and w(t) = c on [a, 1].
Every moment, subinterval average, and class norm it needs has a closed
form, which makes two things possible: exact extremal-weight
construction from a domain point (the weight whose averages hit the
point and whose class norm is exactly delta), and a brute-force
supremum oracle over all dyadic subintervals that runs in O(grid**2)
with O(1) per pair via prefix integrals.

The supremum oracle is the numeric court of appeal for every sharpness
claim: the closed-form constants must be attained by these weights, and
``sup_ratio_search`` checks exactly that.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import roots
from .domain import INF, DomainPoint, classify_point, is_inf, validate_delta, validate_exponent
from .errors import DomainError
from ._kernels import max_pair_ratio


@dataclass(frozen=True)
class PowerWeight:
    """Ramp exponent nu on [0, a), constant plateau c on [a, 1]."""

    c: float
    a: float
    nu: float

    def __post_init__(self) -> None:
        if not self.c > 0.0 or math.isinf(self.c) or math.isnan(self.c):
            raise DomainError(f"plateau value c must be a positive real, got {self.c}")
        if math.isnan(self.a) or not 0.0 < self.a <= 1.0:
            raise DomainError(f"breakpoint a must lie in (0, 1], got {self.a}")
        if math.isnan(self.nu) or math.isinf(self.nu):
            raise DomainError("ramp exponent nu must be a finite real")

    def __call__(self, t: float) -> float:
        """Pointwise value; the origin maps per the sign of nu."""
        if t >= self.a:
            return self.c
        if t == 0.0:
            if self.nu > 0.0:
                return 0.0
            if self.nu == 0.0:
                return self.c
            return INF
        return self.c * (t / self.a) ** self.nu


@dataclass(frozen=True)
class FunctionalKind:
    """Which subinterval functional to evaluate.

    Construct through the classmethods; `exponent` carries q for the
    moment functional and p for the power-ratio functional, and is None
    for the two limiting kinds.
    """

    name: str
    exponent: float | None = None

    def __post_init__(self) -> None:
        if self.name not in ("aq", "ainf", "rhp", "rhinf"):
            raise DomainError(f"unknown functional kind {self.name!r}")
        if self.name in ("aq", "rhp"):
            if self.exponent is None or not self.exponent > 1.0:
                raise DomainError(f"{self.name} needs an exponent > 1")
        elif self.exponent is not None:
            raise DomainError(f"{self.name} takes no exponent")

    @classmethod
    def aq(cls, q: float) -> "FunctionalKind":
        return cls("aq", q)

    @classmethod
    def a_inf(cls) -> "FunctionalKind":
        return cls("ainf")

    @classmethod
    def rh_p(cls, p: float) -> "FunctionalKind":
        return cls("rhp", p)

    @classmethod
    def rh_inf(cls) -> "FunctionalKind":
        return cls("rhinf")


def _validate_interval(alpha: float, beta: float) -> None:
    if math.isnan(alpha) or math.isnan(beta) or not 0.0 <= alpha < beta <= 1.0:
        raise DomainError(f"need 0 <= alpha < beta <= 1, got [{alpha}, {beta}]")


def moment(w: PowerWeight, theta: float) -> float:
    """Average of w**theta over [0, 1]; +inf when theta*nu <= -1."""
    tn = theta * w.nu
    if tn <= -1.0:
        return INF
    return w.c**theta * (1.0 + (1.0 - w.a) * tn) / (1.0 + tn)


def interval_moment(w: PowerWeight, theta: float, alpha: float, beta: float) -> float:
    """Average of w**theta over [alpha, beta], in closed form.

    +inf exactly when the interval touches 0 and theta*nu <= -1; the
    near-cancelling exponent theta*nu + 1 within 1e-9 of zero switches
    the ramp antiderivative to its logarithmic limit.
    """
    _validate_interval(alpha, beta)
    tn = theta * w.nu
    a = w.a
    total = 0.0
    if alpha < a:
        if alpha == 0.0 and tn <= -1.0:
            return INF
        e = tn + 1.0
        ramp_hi = min(beta, a)
        if alpha > 0.0 and abs(e) < 1e-9:
            total += a ** (-tn) * math.log(ramp_hi / alpha)
        else:
            total += a ** (-tn) * (ramp_hi**e - alpha**e) / e
    if beta > a:
        total += beta - max(alpha, a)
    return w.c**theta * total / (beta - alpha)


def log_moment(w: PowerWeight, alpha: float, beta: float) -> float:
    """Average of log w over [alpha, beta]; always finite."""
    _validate_interval(alpha, beta)
    total = math.log(w.c) * (beta - alpha)
    ramp_hi = min(beta, w.a)
    if alpha < ramp_hi:

        def antideriv(t: float) -> float:
            if t == 0.0:
                return 0.0
            return t * (math.log(t / w.a) - 1.0)

        total += w.nu * (antideriv(ramp_hi) - antideriv(alpha))
    return total / (beta - alpha)


def ess_sup(w: PowerWeight, alpha: float, beta: float) -> float:
    """Essential supremum over [alpha, beta] for nondecreasing weights."""
    _validate_interval(alpha, beta)
    if w.nu < 0.0:
        raise DomainError("ess_sup supports nonnegative ramp exponents only")
    if beta >= w.a:
        return w.c
    return w.c * (beta / w.a) ** w.nu


def rhp_norm_closed(w: PowerWeight, p: float) -> float:
    """Class norm sup over J of <w**p>_J**(1/p) / <w>_J, in closed form.

    Depends only on nu: (1 + nu)/(1 + p*nu)**(1/p).
    """
    validate_exponent(p)
    if is_inf(p):
        raise DomainError("use rhinf_norm_closed for the p = inf norm")
    if not w.nu > -1.0 / p:
        raise DomainError(f"nu must exceed -1/p = {-1.0 / p}, got {w.nu}")
    return (1.0 + w.nu) / (1.0 + p * w.nu) ** (1.0 / p)


def rhinf_norm_closed(w: PowerWeight) -> float:
    """Class norm sup over J of ess sup_J w / <w>_J; equals nu + 1."""
    if w.nu < 0.0:
        raise DomainError("the sup-over-average norm needs nu >= 0")
    return w.nu + 1.0


def extremal_weight(p: float, delta: float, x: DomainPoint, branch: str) -> PowerWeight:
    """The weight whose averages realize x with class norm exactly delta.

    Finite p: nu = s/(1 - p*s) with s the branch value of the class
    parameter, breakpoint from the point parameter r of the same
    branch; on the lower curve (or at delta = 1) the weight degenerates
    to the constant x1.  p = inf: nu = delta - 1 with x = (<w>, sup w).
    `branch` is "plus" (moment regimes above the band) or "minus" (the
    self-improvement regime).
    """
    validate_exponent(p)
    validate_delta(delta)
    if branch not in ("plus", "minus"):
        raise DomainError(f"branch must be 'plus' or 'minus', got {branch!r}")
    side = classify_point(p, delta, x)
    x1, x2 = x
    if delta == 1.0 or side == "lower":
        return PowerWeight(c=x1, a=1.0, nu=0.0)
    if is_inf(p):
        nu = delta - 1.0
        a = (1.0 - x1 / x2) / (1.0 - 1.0 / delta)
        return PowerWeight(c=x2, a=min(a, 1.0), nu=nu)
    cfg = roots.default_config()
    log_t_s = -p * math.log(delta)
    log_t_r = roots.point_log_ratio(p, delta, x)
    if branch == "plus":
        s = roots.u_plus_from_log(p, log_t_s, cfg)
        r = roots.u_plus_from_log(p, log_t_r, cfg)
    else:
        s = roots.u_minus_from_log(p, log_t_s, cfg)
        r = roots.u_minus_from_log(p, log_t_r, cfg)
    nu = s / (1.0 - p * s)
    # The negative branch keeps the p-th power integrable: s <= 0 pins
    # nu into (-1/p, 0]; asserted, not assumed.
    assert nu > -1.0 / p, "ramp exponent fell outside the integrable range"
    if log_t_r == 0.0:
        a = 1.0
    else:
        a = (s - r) / (s * (1.0 - p * r))
    c = (
        x1
        * (1.0 - p * r)
        * (1.0 - (p - 1.0) * s)
        / ((1.0 - (p - 1.0) * r) * (1.0 - p * s))
    )
    return PowerWeight(c=c, a=min(a, 1.0), nu=nu)


def functional_ratio(
    w: PowerWeight, kind: FunctionalKind, alpha: float, beta: float
) -> float:
    """The chosen functional on [alpha, beta] via the closed forms."""
    _validate_interval(alpha, beta)
    avg = interval_moment(w, 1.0, alpha, beta)
    if kind.name == "aq":
        q = kind.exponent
        dual = interval_moment(w, -1.0 / (q - 1.0), alpha, beta)
        if math.isinf(avg) or math.isinf(dual):
            return INF
        return avg * dual ** (q - 1.0)
    if kind.name == "ainf":
        if math.isinf(avg):
            return INF
        return avg * math.exp(-log_moment(w, alpha, beta))
    if kind.name == "rhp":
        t = kind.exponent
        if math.isinf(avg):
            raise DomainError("the plain average is infinite on this interval")
        power = interval_moment(w, t, alpha, beta)
        if math.isinf(power):
            return INF
        return power ** (1.0 / t) / avg
    return ess_sup(w, alpha, beta) / avg


def _prefix_power(grid: np.ndarray, a: float, nu: float, theta: float) -> np.ndarray:
    """Integral of (w/c)**theta from 0 to each grid point; needs
    theta*nu + 1 > 0."""
    e = theta * nu + 1.0
    m = np.minimum(grid, a)
    out = (a / e) * (m / a) ** e
    out += np.maximum(grid - a, 0.0)
    return out


def _prefix_log(grid: np.ndarray, a: float, nu: float) -> np.ndarray:
    """Integral of log(w/c) from 0 to each grid point."""
    m = np.minimum(grid, a)
    out = np.zeros_like(grid)
    mask = m > 0.0
    out[mask] = m[mask] * (np.log(m[mask] / a) - 1.0)
    return nu * out


def sup_ratio_search(
    w: PowerWeight,
    kind: FunctionalKind,
    depth: int,
    inject_candidates: bool = True,
) -> tuple[float, tuple[float, float]]:
    """Maximum of functional_ratio over intervals with endpoints on the
    dyadic grid of size 2**depth, plus the candidates {0, a, 1}.

    Returns (sup, (alpha, beta)).  The search is exhaustive over pairs;
    prefix integrals make each pair O(1).  All four functionals are
    invariant under scaling the weight, so the scan normalizes c to 1.
    Intervals touching 0 with a divergent moment make the result +inf
    with the canonical witness (0, min(a, 1)).  ``inject_candidates``
    exists so tests can measure the pure-grid gap.
    """
    if depth < 1:
        raise DomainError("depth must be at least 1")
    nu = w.nu
    a = w.a
    if kind.name == "aq":
        q = kind.exponent
        thetas = (1.0, -1.0 / (q - 1.0))
    elif kind.name == "rhp":
        thetas = (1.0, kind.exponent)
    elif kind.name == "rhinf":
        if nu < 0.0:
            raise DomainError("the sup-over-average search needs nu >= 0")
        thetas = (1.0,)
    else:
        thetas = (1.0,)
    for theta in thetas:
        if theta * nu <= -1.0:
            return INF, (0.0, a)
    n = (1 << depth) + 1
    grid = np.arange(n, dtype=np.float64) / float(n - 1)
    if inject_candidates:
        grid = np.unique(np.concatenate([grid, np.array([0.0, a, 1.0])]))
    pref_avg = _prefix_power(grid, a, nu, 1.0)
    dummy = pref_avg
    if kind.name == "aq":
        p1, p2 = pref_avg, _prefix_power(grid, a, nu, -1.0 / (kind.exponent - 1.0))
        e1, e2 = 1.0, kind.exponent - 1.0
        cap, mode = dummy, 0
    elif kind.name == "rhp":
        p1, p2 = _prefix_power(grid, a, nu, kind.exponent), pref_avg
        e1, e2 = 1.0 / kind.exponent, -1.0
        cap, mode = dummy, 0
    elif kind.name == "ainf":
        p1, p2 = pref_avg, _prefix_log(grid, a, nu)
        e1 = e2 = 0.0
        cap, mode = dummy, 1
    else:
        p1, p2 = pref_avg, dummy
        e1 = e2 = 0.0
        cap = (np.minimum(grid, a) / a) ** nu
        mode = 2
    best, i, j = max_pair_ratio(grid, p1, p2, e1, e2, cap, mode)
    return float(best), (float(grid[i]), float(grid[j]))
