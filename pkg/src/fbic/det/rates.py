"""Exact symmetric-rate formulas for the deterministic model.

All values are ``fractions.Fraction`` in bits per channel use. Where two
pieces of a piecewise formula meet, the piece listed first wins; the
pieces agree at every such boundary anyway.
"""

from __future__ import annotations

from fractions import Fraction

from .params import DetParams, DetRegime


def csym_infinite(params: DetParams) -> Fraction:
    """Symmetric capacity with unlimited feedback."""
    n, m, k = params.n, params.m, params.k_users
    regime = params.regime()  # raises on n = 0
    if m < n:
        return Fraction(2 * n - m, 2)
    if regime is DetRegime.EQUAL:
        return Fraction(n, k)
    return Fraction(m, 2)


def csym_zero(params: DetParams) -> Fraction:
    """Symmetric capacity without feedback."""
    n, m, k = params.n, params.m, params.k_users
    regime = params.regime()
    if regime is DetRegime.VERY_WEAK:
        return Fraction(n - m)
    if regime is DetRegime.WEAK:
        return Fraction(m)
    if regime is DetRegime.MODERATE:
        return Fraction(2 * n - m, 2)
    if regime is DetRegime.EQUAL:
        return Fraction(n, k)
    if regime is DetRegime.STRONG:
        return Fraction(m, 2)
    return Fraction(n)


def feedback_rate(params: DetParams) -> Fraction:
    """Achievable symmetric rate with p = p2/2 bits of feedback per use."""
    n, m, k = params.n, params.m, params.k_users
    p = params.p
    half_m = Fraction(m, 2)
    regime = params.regime()
    if regime is DetRegime.VERY_WEAK:
        return min(n - m + p, n - half_m)
    if regime is DetRegime.WEAK:
        return min(m + p, n - half_m)
    if regime is DetRegime.MODERATE:
        return n - half_m
    if regime is DetRegime.EQUAL:
        return Fraction(n, k)
    if regime is DetRegime.STRONG:
        return half_m
    return min(n + p, half_m)


def block_payload_bits(params: DetParams) -> int:
    """Fresh bits each user sends in one two-slot block of the scheme."""
    n, m, p2 = params.n, params.m, params.p2
    regime = params.scheme_regime()
    if regime is DetRegime.VERY_WEAK:
        return 2 * n - m - max(m - p2, 0)
    if regime is DetRegime.WEAK:
        return 2 * n - m - max(2 * n - 3 * m - p2, 0)
    return m - max(m - 2 * n - p2, 0)


# alias under the operation's original name
theorem1_rate = feedback_rate


def scheme_rate(params: DetParams) -> Fraction:
    """Rate delivered by the two-slot scheme: payload bits per block over 2."""
    return Fraction(block_payload_bits(params), 2)
