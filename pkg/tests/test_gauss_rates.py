import math

import mpmath as mp
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from fbic.errors import InfeasibleParameters, InvalidAllocation, InvalidParameters, UnsupportedRegime
from fbic.gauss import (
    UNBOUNDED,
    GaussParams,
    GaussRegime,
    MuAlloc,
    achievable_rate,
    default_mu,
    default_mu_strong,
    default_mu_very_weak,
    default_mu_weak,
    rate_strong,
    rate_very_weak,
    rate_weak,
)

from oracles import mp_default_mu, mp_strong, mp_very_weak, mp_weak

ORACLES = {
    GaussRegime.VERY_WEAK: ("very_weak", mp_very_weak),
    GaussRegime.WEAK: ("weak", mp_weak),
    GaussRegime.STRONG: ("strong", mp_strong),
}


def oracle_rate(params, mu=None, refined=False):
    name, fn = ORACLES[params.regime()]
    cfb = None if params.unbounded else params.c_fb
    if mu is None:
        mu = mp_default_mu(name, params.snr, params.inr, cfb)
    per, r = fn(params.snr, params.inr, cfb, params.k_users, mu, refined)
    return [float(x) for x in per], float(r)


# r_sym values from the mpmath transcription of the printed constraints
@pytest.mark.parametrize(
    "snr, inr, cfb, rate, refined_rate",
    [
        (1e4, 10, 1, 7.8369675461850673, 7.8445991141790109),
        (1e6, 10**3.5, 2, 9.9626346559959033, 10.183948934021312),
        (1e2, 1e5, 1, 7.0022730610444662, 7.0094650201257942),
    ],
)
def test_default_split_examples(snr, inr, cfb, rate, refined_rate):
    p = GaussParams(snr, inr, cfb, 3)
    mu = default_mu(p)
    assert achievable_rate(p, mu).r_sym == pytest.approx(rate, rel=1e-12)
    assert achievable_rate(p, mu, refined=True).r_sym == pytest.approx(refined_rate, rel=1e-12)


def test_very_weak_example_breakdown():
    p = GaussParams(1e4, 10, 1, 3)
    rb = rate_very_weak(p, default_mu_very_weak(p))
    assert rb.per_message == pytest.approx([0.0, 6.9097846688777, 0.0, 8.76415042349244], abs=1e-12)
    assert rb.r_sym == pytest.approx(sum(rb.per_message) / 2)


def params_strategy(regime):
    lo, hi = {"very_weak": (0.05, 0.5), "weak": (0.51, 0.666), "strong": (2.0, 4.0)}[regime]
    return st.builds(
        lambda snr_db, a, c, k: GaussParams.from_db(snr_db, a * snr_db, c, k),
        st.floats(5, 80),
        st.floats(lo, hi),
        st.one_of(st.just(UNBOUNDED), st.floats(0, 20)),
        st.integers(2, 6),
    )


@pytest.mark.parametrize("regime", ["very_weak", "weak", "strong"])
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_matches_oracle_with_default_split(regime, data):
    p = data.draw(params_strategy(regime))
    try:
        mu = default_mu(p)
    except InfeasibleParameters:
        return
    for refined in (False, True):
        per, r = oracle_rate(p, refined=refined)
        rb = achievable_rate(p, mu, refined)
        assert rb.per_message == pytest.approx(per, rel=1e-9, abs=1e-9)
        assert rb.r_sym == pytest.approx(r, rel=1e-9, abs=1e-9)


@pytest.mark.parametrize("regime", ["very_weak", "weak", "strong"])
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_matches_oracle_with_random_split(regime, data):
    p = data.draw(params_strategy(regime))
    size = {"very_weak": 4, "weak": 6, "strong": 3}[regime]
    weight = st.one_of(st.just(0.0), st.floats(1e-9, 1))
    mu = data.draw(st.lists(weight, min_size=size, max_size=size))
    if regime == "very_weak":
        mu[2] = p.inr * mu[0] / p.snr
    elif regime == "weak":
        mu[1] = p.snr * mu[2] / p.inr
    try:
        alloc = MuAlloc(p.regime(), mu)
        rb = achievable_rate(p, alloc)
    except InvalidAllocation:
        return
    per, r = oracle_rate(p, mu)
    assert rb.per_message == pytest.approx(per, rel=1e-9, abs=1e-9)


@settings(max_examples=200, deadline=None)
@given(data=st.data(), regime=st.sampled_from(["very_weak", "weak", "strong"]))
def test_rates_non_negative_and_refined_dominates(data, regime):
    p = data.draw(params_strategy(regime))
    try:
        mu = default_mu(p)
    except InfeasibleParameters:
        return
    plain = achievable_rate(p, mu)
    refined = achievable_rate(p, mu, refined=True)
    assert all(r >= 0 for r in plain.per_message)
    assert refined.r_sym >= plain.r_sym
    assert plain.r_sym == pytest.approx(sum(plain.per_message) / 2)


def test_feedback_caps():
    p = GaussParams.from_db(40, 10, 0.0, 3)
    rb = rate_very_weak(p, default_mu_very_weak(p))
    assert rb.per_message[0] == 0 and rb.per_message[2] == 0
    p = GaussParams.from_db(50, 125, 0.0, 3)
    rb = rate_strong(p, default_mu_strong(p))
    assert rb.per_message[1] == 0
    assert rb.r_sym == pytest.approx((rb.per_message[0] + rb.per_message[2]) / 2)


def test_unbounded_feedback_removes_caps():
    p = GaussParams(1e6, 10**3.5, UNBOUNDED, 3)
    rb = rate_weak(p, default_mu_weak(p))
    assert "feedback_cap" not in rb.binding_constraint
    assert rb.r_sym == pytest.approx(oracle_rate(p)[1], rel=1e-12)


def test_very_weak_zero_feedback_layers():
    p = GaussParams(1e4, 10, 0.0, 3)
    rb = rate_very_weak(p, MuAlloc(GaussRegime.VERY_WEAK, (0, 0.1, 0, 0.1)))
    assert rb.per_message[0] == 0 and rb.per_message[2] == 0
    assert rb.per_message[1] > 0 and rb.per_message[3] > 0


def test_zero_first_slot_power_rejected():
    p = GaussParams(1e4, 10, 1.0, 3)
    with pytest.raises(InvalidAllocation):
        rate_very_weak(p, MuAlloc(GaussRegime.VERY_WEAK, (0, 0, 0, 1)))


def test_side_condition_enforced():
    p = GaussParams(1e6, 10**3.5, 2.0, 3)
    with pytest.raises(InvalidAllocation):
        rate_weak(p, MuAlloc(GaussRegime.WEAK, (1, 1, 1, 0.1, 1, 0.1)))


def test_strong_zero_mu2():
    p = GaussParams(1e2, 1e5, 1.0, 3)
    rb = rate_strong(p, MuAlloc(GaussRegime.STRONG, (1, 0, 1)))
    assert rb.per_message[1] == 0
    assert rb.per_message[0] > 0 and rb.per_message[2] > 0


def test_bad_allocations():
    with pytest.raises(InvalidAllocation):
        MuAlloc(GaussRegime.STRONG, (1, 1))
    with pytest.raises(InvalidAllocation):
        MuAlloc(GaussRegime.STRONG, (1, -1, 1))
    with pytest.raises(InvalidAllocation):
        MuAlloc(GaussRegime.MIDDLE_LOW, (1, 1, 1))


def test_wrong_regime():
    p = GaussParams.from_db(40, 30, 1.0, 3)
    with pytest.raises(UnsupportedRegime):
        default_mu(p)
    with pytest.raises(UnsupportedRegime):
        rate_strong(p, MuAlloc(GaussRegime.STRONG, (1, 1, 1)))
    weak = GaussParams(1e6, 10**3.5, 2.0, 3)
    with pytest.raises(UnsupportedRegime):
        rate_very_weak(weak, MuAlloc(GaussRegime.VERY_WEAK, (1, 1, 1, 1)))


@pytest.mark.parametrize(
    "args", [(1.0, 2.0, 0.0, 2), (2.0, 0.5, 0.0, 2), (10.0, 2.0, -1.0, 2), (10.0, 2.0, math.nan, 2), (10.0, 2.0, 0.0, 1)]
)
def test_invalid_params(args):
    with pytest.raises(InvalidParameters):
        GaussParams(*args)


# default splits

def test_case3_mu2_with_large_feedback():
    p = GaussParams(1e2, 1e5, 50.0, 3)
    mu = default_mu_strong(p)
    assert mu[2] == pytest.approx(1 / (2 * 1e2), rel=1e-12)
    assert mu[1] == mu[3] == pytest.approx(1 - 1 / 200)


def test_case1_zero_feedback():
    p = GaussParams(1e4, 10, 0.0, 3)
    mu = default_mu_very_weak(p)
    assert mu[1] == pytest.approx(1 / 20)
    assert p.snr * mu[3] == pytest.approx(p.inr * mu[1])


def test_case2_unbounded_feedback():
    p = GaussParams(1e6, 1e4, UNBOUNDED, 3)
    assert p.regime() is GaussRegime.WEAK
    mu = default_mu_weak(p)
    assert mu[4] == pytest.approx(1e8 / (4 * 1e12), rel=1e-12)
    assert mu[3] == mu[6]
    assert p.snr * mu[3] == pytest.approx(p.inr * mu[2])
    assert mu[1] == pytest.approx(1 - mu[2] - mu[3] - mu[4])
    assert mu[5] == pytest.approx(1 - mu[2] - mu[6])


@settings(max_examples=200, deadline=None)
@given(data=st.data(), regime=st.sampled_from(["very_weak", "weak", "strong"]))
def test_default_split_is_feasible_inside_its_regime(data, regime):
    p = data.draw(params_strategy(regime))
    mu = default_mu(p)
    assert min(mu.mu) >= 0
    mu.check(p)


def test_default_matches_oracle_split():
    for p, name in [
        (GaussParams(1e4, 10, 1.0, 3), "very_weak"),
        (GaussParams(1e6, 10**3.5, 2.0, 3), "weak"),
        (GaussParams(1e2, 1e5, 1.0, 3), "strong"),
    ]:
        assert default_mu(p).mu == pytest.approx([float(x) for x in mp_default_mu(name, p.snr, p.inr, p.c_fb)])
