"""Closed forms for the boundary value problem on the two-curve domain.

``bellman_value`` evaluates the supremum of the normalized q-th moment
over the weight class, as a function of the pair x = (<w>, <w**p>).
The value is x1**(1 - q') on the lower curve, finite off it only when q
lies outside the closed critical band [q_sub, q_star], and is built
from the branch parameters r (point) and s (class) otherwise:

    q > q_star uses the right branch,
    q < q_sub (only reachable for finite p) uses the left branch.

Two algebraically equal product representations are provided; agreement
between them is a strong end-to-end check because they consume the
point through different factors.  ``bellman_infinity_value`` is the
q -> inf limit object lim B**(1/(q-1)) normalized to the exponential
functional, ``hessian_form`` is the second-order concavity form along a
direction at an interior point, and ``tangent_segment`` produces the
chord on which the value function is linear.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

from . import roots
from .domain import INF, DomainPoint, classify_point, is_inf, validate_delta, validate_exponent
from .errors import DomainError

# Relative guard band around the critical exponents: q this close to the
# band edge is treated as inside the band (the value blows up there and
# the closed forms lose all significance).
_EDGE_GUARD = 1e-12


@dataclass(frozen=True)
class Parameters:
    """Validated (p, q, delta) triple with the derived exponents cached."""

    p: float
    q: float
    delta: float

    def __post_init__(self) -> None:
        validate_exponent(self.p)
        validate_delta(self.delta)
        q = self.q
        if math.isnan(q) or math.isinf(q):
            raise DomainError("q must be a finite real")
        if q == 1.0:
            raise DomainError("q = 1 is excluded (the moment exponent degenerates)")
        if is_inf(self.p):
            if q < 1.0:
                raise DomainError("p = inf requires q > 1")
        elif q < 1.0 and q <= (self.p - 1.0) / self.p:
            raise DomainError(f"q must exceed (p-1)/p = {(self.p - 1.0) / self.p}")

    @cached_property
    def q_conj(self) -> float:
        """Dual exponent q/(q-1); negative for q < 1."""
        return self.q / (self.q - 1.0)

    @cached_property
    def gamma(self) -> float:
        """Combined exponent p + q' - 1; None when p is infinite."""
        if is_inf(self.p):
            return None
        return self.p + self.q_conj - 1.0

    @cached_property
    def q_star(self) -> float:
        return roots.q_star(self.p, self.delta)

    @cached_property
    def q_sub(self) -> float:
        if is_inf(self.p):
            return None
        return roots.q_sub(self.p, self.delta)

    @cached_property
    def regime(self) -> str:
        """'upper' above q_star, 'lower' below q_sub, 'band' in between."""
        if self.q > self.q_star * (1.0 + _EDGE_GUARD):
            return "upper"
        if not is_inf(self.p) and self.q < self.q_sub * (1.0 - _EDGE_GUARD):
            return "lower"
        return "band"


def _branch_pair(params: Parameters, x: DomainPoint) -> tuple[float, float]:
    """(s, r) on the branch selected by the regime."""
    p, delta = params.p, params.delta
    cfg = roots.default_config()
    log_t_s = -p * math.log(delta)
    log_t_r = roots.point_log_ratio(p, delta, x)
    if params.regime == "upper":
        return (
            roots.u_plus_from_log(p, log_t_s, cfg),
            roots.u_plus_from_log(p, log_t_r, cfg),
        )
    return (
        roots.u_minus_from_log(p, log_t_s, cfg),
        roots.u_minus_from_log(p, log_t_r, cfg),
    )


def _log_value_finite(params: Parameters, x: DomainPoint) -> float:
    p = params.p
    qc = params.q_conj
    g = params.gamma
    s, r = _branch_pair(params, x)
    x1 = x[0]
    return (
        (1.0 - qc) * math.log(x1)
        + qc * (math.log1p(-p * s) - math.log1p(-p * r))
        + (qc - 1.0) * (math.log1p(-(p - 1.0) * r) - math.log1p(-(p - 1.0) * s))
        + math.log1p(-g * r)
        - math.log1p(-g * s)
    )


def _log_bellman(params: Parameters, x: DomainPoint) -> float:
    side = classify_point(params.p, params.delta, x)
    x1, x2 = x
    if params.delta == 1.0 or side == "lower":
        return (1.0 - params.q_conj) * math.log(x1)
    if params.regime == "band":
        return INF
    if is_inf(params.p):
        qc = params.q_conj
        return (
            (1.0 - qc) * math.log(x2)
            + math.log(params.q - (x1 / x2) * params.delta)
            - math.log(params.q - params.delta)
        )
    return _log_value_finite(params, x)


def bellman_value(params: Parameters, x: DomainPoint) -> float:
    """Value at x; +inf exactly when q lies in the closed critical band
    and x is off the lower curve."""
    return math.exp(_log_bellman(params, x))


def bellman_value_gamma_form(params: Parameters, x: DomainPoint) -> float:
    """Same value through the representation with the common exponent
    gamma = p + q' - 1 and an explicit x2 factor.  Finite p only."""
    if is_inf(params.p):
        raise DomainError("the gamma-form representation needs finite p")
    side = classify_point(params.p, params.delta, x)
    x1, x2 = x
    if params.delta == 1.0 or side == "lower":
        return math.exp((1.0 - params.q_conj) * math.log(x1))
    if params.regime == "band":
        return INF
    p = params.p
    g = params.gamma
    s, r = _branch_pair(params, x)
    return math.exp(
        -g * math.log(x1)
        + math.log(x2)
        + g * (math.log1p(-p * s) - math.log1p(-p * r))
        + g * (math.log1p(-(p - 1.0) * r) - math.log1p(-(p - 1.0) * s))
        + math.log1p(-g * r)
        - math.log1p(-g * s)
    )


def bellman_limit_check(params: Parameters, x: DomainPoint) -> float:
    """value**(q-1), the object whose q -> inf limit is the exponential
    functional; requires q above the finiteness threshold."""
    if params.regime != "upper":
        raise DomainError("the limit check needs q above the finiteness threshold")
    return math.exp((params.q - 1.0) * _log_bellman(params, x))


def bellman_infinity_value(p: float, delta: float, x: DomainPoint) -> float:
    """The limiting exponential-functional value at x.

    For finite p this is the right-branch closed form; at p = inf the
    pair is (<w>, ess sup w) and the expression is elementary.
    """
    validate_exponent(p)
    validate_delta(delta)
    side = classify_point(p, delta, x)
    x1, x2 = x
    if is_inf(p):
        return (1.0 / x2) * math.exp(delta * (1.0 - x1 / x2))
    if delta == 1.0 or side == "lower":
        return 1.0 / x1
    cfg = roots.default_config()
    s = roots.u_plus_from_log(p, -p * math.log(delta), cfg)
    r = roots.u_plus_from_log(p, roots.point_log_ratio(p, delta, x), cfg)
    return math.exp(
        -math.log(x1)
        + math.log1p(-(p - 1.0) * r)
        + math.log1p(-p * s)
        - math.log1p(-p * r)
        - math.log1p(-(p - 1.0) * s)
        + (s - r) / ((1.0 - p * s) * (1.0 - p * r))
    )


def hessian_form(params: Parameters, x: DomainPoint, d1: float, d2: float) -> float:
    """Second-order form of the value at an interior x along (d1, d2).

    Nonpositive in both finite regimes (the value is locally concave),
    and zero exactly along the direction d1/d2 = x1/((1-(p-1)r)*p*x2),
    which is the tangent direction of the level structure.
    """
    p = params.p
    if is_inf(p):
        raise DomainError("the quadratic form is defined for finite p")
    if params.regime == "band":
        raise DomainError("q lies in the critical band: the value is infinite")
    side = classify_point(p, params.delta, x)
    if side != "interior":
        raise DomainError("the quadratic form needs a strictly interior point")
    x1, x2 = x
    s, r = _branch_pair(params, x)
    value = math.exp(_log_value_finite(params, x))
    g = params.gamma
    qc = params.q_conj
    mr = 1.0 - (p - 1.0) * r
    prefactor = -(mr * mr) * g * qc * (qc - 1.0) * value / (
        (1.0 - g * r) * (p - 1.0) ** 2 * r * x1 * x1
    )
    kernel_slope = x1 / (mr * p * x2)
    line = d1 - kernel_slope * d2
    return prefactor * line * line


@dataclass(frozen=True)
class TangentSegment:
    """Chord between the two boundary curves along which the value is
    linear: from (b, (delta*b)**p) on the upper curve (gamma_delta) to
    the point on the lower curve (gamma_one) with the same branch
    parameter."""

    b: float
    endpoint_gamma_delta: DomainPoint
    endpoint_gamma_one: DomainPoint
    branch: str = "plus"


def tangent_segment(
    p: float, delta: float, b: float, branch: str = "plus"
) -> TangentSegment:
    """Linearity segment anchored at the upper-curve point with x1 = b.

    Its straight-line extension meets the lower curve at the point whose
    first coordinate is b*(1-(p-1)*s)/(1-p*s); both endpoints satisfy
    delta**p * p * x1 - b**(1-p) * x2 = delta**p * b * (p-1).
    """
    validate_exponent(p)
    if is_inf(p):
        raise DomainError("tangent segments are defined for finite p")
    validate_delta(delta)
    if delta == 1.0:
        raise DomainError("delta = 1 degenerates the segment to a point")
    if not b > 0.0 or math.isinf(b) or math.isnan(b):
        raise DomainError("the anchor b must be a positive real")
    if branch not in ("plus", "minus"):
        raise DomainError(f"branch must be 'plus' or 'minus', got {branch!r}")
    # The endpoints must land on the boundary curves within the 1e-12
    # membership slack, so s needs more accuracy than the default.
    tight = roots.RootConfig(rel_tol=1e-15, abs_tol=1e-16)
    pair = roots.s_pair(p, delta, tight)
    s = pair.s_plus if branch == "plus" else pair.s_minus
    x1_lower = b * (1.0 - (p - 1.0) * s) / (1.0 - p * s)
    x2_lower = (delta * b) ** p / (1.0 - p * s)
    return TangentSegment(
        b=b,
        endpoint_gamma_delta=(b, (delta * b) ** p),
        endpoint_gamma_one=(x1_lower, x2_lower),
        branch=branch,
    )
