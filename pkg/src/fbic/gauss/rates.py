"""Achievable symmetric rates of the two-slot lattice schemes.

Each scheme splits a user's message into layers of relative power ``mu``.
The first slot is decoded successively and an aligned lattice sum is fed
back; in the second slot every transmitter forwards the interference it
learned so that receivers can resolve their own aligned layer. Every layer
rate is the minimum of a few SINR-type log terms; a layer whose log term is
negative carries zero bits.

Wherever a constraint involves ``SNR^alpha`` the value ``inr`` is used
directly, so alpha never enters the arithmetic.
"""
from __future__ import annotations

import math

from ..errors import UnsupportedRegime
from .params import GaussParams, GaussRegime, MuAlloc, RateBreakdown

FEEDBACK_CAP = "feedback_cap"


def _log_term(num: float, den: float, refined: bool = False) -> float:
    """``log2(num/den)`` (or ``log2(1 + num/den)``), ``-inf`` when nothing can be sent."""
    if num <= 0:
        return -math.inf
    if den <= 0:
        return math.inf
    ratio = num / den
    return math.log2(1 + ratio) if refined else math.log2(ratio)


def _layer(terms: dict[str, float]) -> tuple[float, str]:
    # first key wins ties so the reported binding constraint is stable
    name = min(terms, key=terms.__getitem__)
    return max(0.0, terms[name]), name


def _breakdown(layers: list[dict[str, float]]) -> RateBreakdown:
    rates, names = zip(*(_layer(t) for t in layers))
    return RateBreakdown(tuple(rates), tuple(names))


def _forward_gain(params: GaussParams) -> float:
    """Power gain seen by the forwarded interference sum in the second slot."""
    k = params.k_users
    amp = math.sqrt(params.snr) / (k - 1) + math.sqrt(params.inr) * (k - 2) / (k - 1)
    return amp * amp


def _expect(params: GaussParams, mu: MuAlloc, regime: GaussRegime) -> None:
    actual = params.regime()
    if actual is not regime:
        raise UnsupportedRegime(
            f"alpha={params.alpha:.6g} is in the {actual.value} regime, not {regime.value}"
        )
    if mu.regime is not regime:
        raise UnsupportedRegime(f"power split is for {mu.regime.value}, channel is {regime.value}")
    mu.check(params)


def rate_very_weak(params: GaussParams, mu: MuAlloc, refined: bool = False) -> RateBreakdown:
    """Four-layer scheme for ``alpha <= 1/2``.

    Layer 1 is the one fed back and forwarded, layer 3 is aligned with the
    incoming layer-1 interference, layer 2 sits on top of them and layer 4 is
    sent fresh in the second slot.
    """
    _expect(params, mu, GaussRegime.VERY_WEAK)
    s, i, k = params.snr, params.inr, params.k_users
    m1, m2, m3, m4 = mu.mu
    m13 = m1 + m2 + m3
    m23 = m2 + m3
    cap = params.fb_rate_cap()
    r1 = {
        "own_slot1": _log_term(s * m1, s * m23 + i * m13 * (k - 1) + m13),
        "aligned_sum_slot1": _log_term(i * m1, i * m23 * (k - 1) + m13),
        "forwarded_sum_slot2": _log_term(_forward_gain(params) * m1, s * m4 + i * m4 * (k - 1) + m1 + m4),
        FEEDBACK_CAP: cap,
    }
    r2 = {"own_slot1": _log_term(s * m2, s * m3 + i * m13 * (k - 1) + m13, refined)}
    r3 = {
        "aligned_own_slot1": _log_term(s * m3, i * m23 * (k - 1) + m13),
        FEEDBACK_CAP: cap,
    }
    r4 = {"own_slot2": _log_term(s * m4, i * m4 * (k - 1) + m1 + m4, refined)}
    return _breakdown([r1, r2, r3, r4])


def rate_weak(params: GaussParams, mu: MuAlloc, refined: bool = False) -> RateBreakdown:
    """Six-layer scheme for ``1/2 < alpha <= 2/3``.

    Layers 1-4 go in the first slot (layer 3 aligned with layer-2
    interference), layers 5 and 6 are fresh second-slot layers sent next to
    the forwarded layer-2 interference.
    """
    _expect(params, mu, GaussRegime.WEAK)
    s, i, k = params.snr, params.inr, params.k_users
    m1, m2, m3, m4, m5, m6 = mu.mu
    m14 = m1 + m2 + m3 + m4
    m24 = m2 + m3 + m4
    m34 = m3 + m4
    m56 = m5 + m6
    r2_pow = m2 + m56
    cap = params.fb_rate_cap()
    slot1_top = s * m4 + i * m34 * (k - 1) + m14
    r1 = {
        "own_slot1": _log_term(s * m1, s * m24 + i * m14 * (k - 1) + m14),
        "interference_sum_slot1": _log_term(i * m1, s * m34 + i * m24 * (k - 1) + m14),
    }
    r2 = {
        "own_slot1": _log_term(s * m2, s * m34 + i * m14 * (k - 1) + m14),
        "aligned_sum_slot1": _log_term(i * m2, slot1_top),
        "forwarded_sum_slot2": _log_term(_forward_gain(params) * m2, s * m6 + i * m56 * (k - 1) + r2_pow),
        FEEDBACK_CAP: cap,
    }
    r3 = {
        "aligned_own_slot1": _log_term(s * m3, slot1_top),
        FEEDBACK_CAP: cap,
    }
    r4 = {"own_slot1": _log_term(s * m4, i * m34 * (k - 1) + m14, refined)}
    r5 = {
        "own_slot2": _log_term(s * m5, s * (m2 + m6) + i * r2_pow * (k - 1) + r2_pow - i * m2),
        "interference_sum_slot2": _log_term(i * m5, s * m6 + i * m6 * (k - 1) + r2_pow),
    }
    r6 = {"own_slot2": _log_term(s * m6, i * m6 * (k - 1) + r2_pow, refined)}
    return _breakdown([r1, r2, r3, r4, r5, r6])


def rate_strong(params: GaussParams, mu: MuAlloc, refined: bool = False) -> RateBreakdown:
    """Three-layer scheme for ``alpha >= 2``.

    Interference arrives above the desired signal, so the receiver first
    decodes the interference sum, feeds back layer 2's sum and the
    transmitters forward it in the second slot together with layer 3.

    Only the final interference-free decode of layer 3 is upgraded in refined
    mode; the other steps decode lattice sums.
    """
    _expect(params, mu, GaussRegime.STRONG)
    s, i, k = params.snr, params.inr, params.k_users
    m1, m2, m3 = mu.mu
    m12 = m1 + m2
    m23 = m2 + m3
    r1 = {
        "interference_sum_slot1": _log_term(i * m1, s * m12 + i * m2 * (k - 1) + m12),
        "own_slot1": _log_term(s * m1, s * m2 + m12),
    }
    r2 = {
        "interference_sum_slot1": _log_term(i * m2, s * m12 + m12),
        "interference_sum_slot2": _log_term(i * m2, s * m3 + m23),
        FEEDBACK_CAP: params.fb_rate_cap(),
    }
    r3 = {
        "interference_sum_slot2": _log_term(i * m3, i * m2 + s * m3 + m23),
        "own_slot2": _log_term(s * m3, m23, refined),
    }
    return _breakdown([r1, r2, r3])


_RATE_FUNCS = {
    GaussRegime.VERY_WEAK: rate_very_weak,
    GaussRegime.WEAK: rate_weak,
    GaussRegime.STRONG: rate_strong,
}


def achievable_rate(params: GaussParams, mu: MuAlloc, refined: bool = False) -> RateBreakdown:
    """Dispatch to the scheme of ``mu.regime``."""
    return _RATE_FUNCS[mu.regime](params, mu, refined)
