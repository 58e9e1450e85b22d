"""Upper bounds, gap constants and the GDoF lower bound."""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from ..errors import NotWellDefined, UnsupportedRegime
from .params import GaussParams, GaussRegime, MuAlloc

Number = Union[int, float, Fraction]


class FeedbackBranch(enum.Enum):
    """Which term of the conjectured bound the gap certificate compares against."""

    LIMITED = "limited"  # no-feedback bound plus c_fb
    UNLIMITED = "unlimited"  # infinite-feedback bound


def upper_bound_no_fb(params: GaussParams) -> float:
    s, i = params.snr, params.inr
    return min(math.log2(1 + s), math.log2(1 + i + s / (1 + i)))


def upper_bound_inf_fb(params: GaussParams) -> float:
    s, i, k = params.snr, params.inr, params.k_users
    return (
        0.5 * math.log2(1 + s / (1 + i))
        + 0.5 * math.log2(1 + s + i)
        + (k - 1) / 2
        + math.log2(k)
    )


def conjectured_ub(params: GaussParams) -> float:
    """Smaller of the infinite-feedback bound and the no-feedback bound plus ``c_fb``."""
    inf_fb = upper_bound_inf_fb(params)
    if params.unbounded:
        return inf_fb
    return min(inf_fb, upper_bound_no_fb(params) + params.c_fb)


def _lattice_poly(k: int) -> float:
    return (k + 1 / 3) * (k + 2 / 3) ** 2 * (k + 2) ** 2 * (k + 11 / 4)


def gap_L(k_users: int) -> float:
    """Gap to the conjectured bound that holds in every implemented regime."""
    k = k_users
    first = 0.5 * math.log2(2304 * (k - 1) ** 2 * k**2 * _lattice_poly(k))
    second = math.log2(3) + 16 + math.log2(k**3)
    return max(first, second) + (k - 1) / 2


def regime_gap_const(k_users: int, regime: GaussRegime, branch: FeedbackBranch) -> Optional[float]:
    """Gap certified by the default power split in one regime and feedback branch.

    The middle regimes have a single constant each (the branch is ignored);
    ``alpha = 1`` has none and gives ``None``.
    """
    k = k_users
    lg = math.log2
    limited = branch is FeedbackBranch.LIMITED
    if regime is GaussRegime.VERY_WEAK:
        if limited:
            return 0.5 * lg(k + 1) + lg(k - 1) + 1.5 * lg(k) + 0.5 * lg(54)
        return (k - 1) / 2 + 0.5 * lg(108 * (k - 1) * k**5 * (k + 1))
    if regime is GaussRegime.WEAK:
        if limited:
            return 0.5 * lg(6912 * (k - 1) ** 2 * _lattice_poly(k))
        return 0.5 * lg(2304 * (k - 1) ** 2 * k**2 * _lattice_poly(k)) + (k - 1) / 2
    if regime is GaussRegime.STRONG:
        if limited:
            return 0.5 * lg(80 * (k + 3))
        return (k - 1) / 2 + 0.5 * lg(180 * k**2 * (k + 3))
    if regime is GaussRegime.MIDDLE_LOW:
        return 0.5 * lg(9) + 16 + (k - 1) / 2 + 3 * lg(k)
    if regime is GaussRegime.MIDDLE_HIGH:
        return 0.5 * lg(6) + 6 + (k - 1) / 2 + lg(k)
    return None


def feedback_threshold(params: GaussParams) -> Optional[float]:
    """Feedback level (in units of ``2 c_fb``) where the default split saturates.

    ``None`` for regimes without a feedback-dependent split.
    """
    s, i = params.snr, params.inr
    regime = params.regime()
    if regime is GaussRegime.VERY_WEAK:
        return math.log2(i - 1)
    if regime is GaussRegime.WEAK:
        return math.log2(s * s / i**3)
    if regime is GaussRegime.STRONG:
        return math.log2(i / (s * s))
    return None


def active_branch(params: GaussParams) -> FeedbackBranch:
    """Limited branch while ``2 c_fb`` stays at or below the saturation threshold."""
    if params.unbounded:
        return FeedbackBranch.UNLIMITED
    threshold = feedback_threshold(params)
    if threshold is None:
        return FeedbackBranch.UNLIMITED
    return FeedbackBranch.LIMITED if 2 * params.c_fb <= threshold else FeedbackBranch.UNLIMITED


def gdof_lower(alpha: Number, beta: Number) -> Number:
    """Symmetric GDoF achieved with normalized feedback ``beta``.

    Works on floats or exact ``Fraction`` inputs; ``beta`` may be ``math.inf``.
    The shared endpoints of adjacent pieces agree, so the first listed piece
    is used on a boundary.
    """
    if alpha < 0 or beta < 0:
        raise ValueError("alpha and beta must be non-negative")
    if alpha == 1:
        raise NotWellDefined("GDoF not well defined at alpha=1")
    half = Fraction(1, 2) if isinstance(alpha, (int, Fraction)) else 0.5
    if alpha <= half:
        return min(1 - alpha + beta, 1 - alpha * half)
    if alpha <= Fraction(2, 3):
        return min(alpha + beta, 1 - alpha * half)
    if alpha < 1:
        return 1 - alpha * half
    if alpha <= 2:
        return alpha * half
    return min(1 + beta, alpha * half)


@dataclass(frozen=True)
class BoundsReport:
    """Achievable rate next to the bounds and gap constants for one channel.

    ``achievable`` is ``None`` where no scheme exists (middle regimes).
    """

    params: GaussParams
    regime: GaussRegime
    branch: FeedbackBranch
    achievable: Optional[float]
    ub_no_fb: float
    ub_inf_fb: float
    ub_conjectured: float
    regime_gap_const: Optional[float]
    global_gap_L: float
    mu: Optional[MuAlloc] = None

    @property
    def gap(self) -> Optional[float]:
        if self.achievable is None:
            return None
        return self.ub_conjectured - self.achievable


def bounds_report(params: GaussParams, mu: Optional[MuAlloc] = None, refined: bool = False) -> BoundsReport:
    """Evaluate the scheme (default split unless ``mu`` is given) and all bounds."""
    from .defaults import default_mu
    from .rates import achievable_rate

    regime = params.regime()
    achievable = None
    if regime.has_scheme:
        if mu is None:
            mu = default_mu(params)
        achievable = achievable_rate(params, mu, refined).r_sym
    elif mu is not None:
        raise UnsupportedRegime(f"no achievable scheme for alpha={params.alpha:.6g} ({regime.value})")
    return BoundsReport(
        params=params,
        regime=regime,
        branch=active_branch(params),
        achievable=achievable,
        ub_no_fb=upper_bound_no_fb(params),
        ub_inf_fb=upper_bound_inf_fb(params),
        ub_conjectured=conjectured_ub(params),
        regime_gap_const=regime_gap_const(params.k_users, regime, active_branch(params)),
        global_gap_L=gap_L(params.k_users),
        mu=mu,
    )
