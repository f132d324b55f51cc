"""Cube-splitting bounds: thresholds, the ratio root, the enlarged
norm, and the limit behavior of the resulting constants."""

import math

import pytest

from sharpweights import (
    DomainError,
    NDimBound,
    delta_threshold,
    epsilon_bound,
    ndim_aq_bound,
    ratio_bound_y,
)

# pinned by 50-digit evaluation of the p = 2 closed chain
Y_105 = 2.8308668336619440935
EPS_105 = 1.6716606498194945848


def test_threshold_examples():
    assert delta_threshold(2.0, 2) == pytest.approx(math.sqrt(4.0 / 3.0), rel=1e-14)
    assert delta_threshold(2.0, 10) == pytest.approx(math.sqrt(1024.0 / 1023.0), rel=1e-14)
    assert delta_threshold(100.0, 2) == pytest.approx(4.0 / 3.0, rel=1e-2)


def test_threshold_validation():
    with pytest.raises(DomainError):
        delta_threshold(math.inf, 2)
    with pytest.raises(DomainError):
        delta_threshold(2.0, 1)
    with pytest.raises(DomainError):
        delta_threshold(2.0, 2.0)
    with pytest.raises(DomainError):
        delta_threshold(2.0, True)
    with pytest.raises(DomainError):
        delta_threshold(1.0, 2)


def test_ratio_bound_degenerate():
    assert ratio_bound_y(2.0, 2, 1.0) == 1.0


def test_ratio_bound_quadratic_oracle():
    assert ratio_bound_y(2.0, 2, 1.05) == pytest.approx(Y_105, rel=1e-9)


def test_ratio_bound_bracket_symmetry():
    for delta in (1.01, 1.05, 1.1):
        above = ratio_bound_y(2.0, 2, delta, bracket="above")
        below = ratio_bound_y(2.0, 2, delta, bracket="below")
        assert above == pytest.approx(below, rel=1e-9)
    with pytest.raises(DomainError):
        ratio_bound_y(2.0, 2, 1.05, bracket="middle")


def test_ratio_bound_blows_up_at_threshold():
    threshold = delta_threshold(2.0, 2)
    assert ratio_bound_y(2.0, 2, threshold - 1e-9) > 1e6
    with pytest.raises(DomainError, match="no finite ratio bound"):
        ratio_bound_y(2.0, 2, threshold)
    with pytest.raises(DomainError):
        ratio_bound_y(2.0, 2, 0.9)


def test_epsilon_examples():
    assert epsilon_bound(2.0, 2, 1.0) == 1.0
    assert epsilon_bound(2.0, 2, 1.05) == pytest.approx(EPS_105, rel=1e-9)


def test_epsilon_dominates_delta():
    for p in (1.5, 2.0, 4.0):
        for frac in (0.2, 0.5, 0.9):
            delta = 1.0 + frac * (delta_threshold(p, 2) - 1.0)
            assert epsilon_bound(p, 2, delta) >= delta


def test_witness_vector_achieves_the_bound():
    p, n, delta = 2.0, 2, 1.05
    y = ratio_bound_y(p, n, delta)
    a = ((1.0 + y**p) / (1.0 + y)) ** (1.0 / (p - 1.0))
    v = [1.0] + [a] * (2**n - 2) + [y]
    lhs = sum(t**p for t in v) / sum(v) ** p
    rhs = delta**p / 2 ** (n * (p - 1.0))
    assert lhs == pytest.approx(rhs, rel=1e-9)


def test_aq_bound_chain():
    bound = ndim_aq_bound(2.0, 5.0, 2, 1.0)
    assert isinstance(bound, NDimBound)
    assert bound.constant == 1.0
    assert bound.y == 1.0 and bound.epsilon == 1.0

    bound = ndim_aq_bound(2.0, 3.0, 2, 1.05)
    assert bound.y == pytest.approx(Y_105, rel=1e-9)
    assert bound.epsilon == pytest.approx(EPS_105, rel=1e-9)
    # q*(2, 1.6717) > 3, so the moment bound is the infinite branch
    assert bound.constant == math.inf

    assert ndim_aq_bound(2.0, 3.0, 2, 1.01).constant == pytest.approx(
        1.3857727785133213342, rel=1e-9
    )


def test_aq_bound_limit_toward_one():
    values = [ndim_aq_bound(2.0, 3.0, 2, 1.0 + 10.0**-k).constant for k in range(1, 9)]
    for earlier, later in zip(values, values[1:]):
        assert later <= earlier
    assert values[-1] == pytest.approx(1.0000001350955170521, rel=1e-9)
    assert values[-1] < 1.001


def test_aq_bound_validation():
    with pytest.raises(DomainError):
        ndim_aq_bound(2.0, 1.0, 2, 1.05)
    with pytest.raises(DomainError):
        ndim_aq_bound(2.0, 0.5, 2, 1.05)
