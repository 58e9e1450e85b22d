"""Grid search over power splits, starting from the default split."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..errors import InfeasibleParameters, InvalidAllocation, UnsupportedRegime
from .defaults import default_mu
from .params import GaussParams, GaussRegime, MuAlloc, RateBreakdown
from .rates import achievable_rate

# entries searched freely; the remaining one follows from the side condition
_FREE = {
    GaussRegime.VERY_WEAK: (0, 1, 3),
    GaussRegime.WEAK: (0, 2, 3, 4, 5),
    GaussRegime.STRONG: (0, 1, 2),
}


@dataclass(frozen=True)
class SearchSpec:
    """Multiplicative grid: each free weight is scaled by ``10**linspace(-decades, decades, points)``.

    After every round the grid is re-centred on the best point and its span
    shrinks to one grid step.
    """

    points: int = 5
    decades: float = 2.0
    rounds: int = 3
    refined: bool = False

    def __post_init__(self):
        if self.points < 2 or self.rounds < 1 or self.decades <= 0:
            raise ValueError("need points >= 2, rounds >= 1 and decades > 0")


def _complete(regime: GaussRegime, params: GaussParams, free: dict[int, float]) -> tuple[float, ...]:
    mu = [0.0] * regime.mu_size
    for idx, val in free.items():
        mu[idx] = val
    if regime is GaussRegime.VERY_WEAK:
        mu[2] = params.inr * mu[0] / params.snr
    elif regime is GaussRegime.WEAK:
        mu[1] = params.snr * mu[2] / params.inr
    return tuple(mu)


def optimize_mu(
    params: GaussParams,
    regime: Optional[GaussRegime] = None,
    search: Optional[SearchSpec] = None,
) -> tuple[MuAlloc, RateBreakdown]:
    """Best split found on a deterministic grid around the default split.

    The default split is always a candidate, so the result is never worse
    than it. Ties keep the earlier candidate, which makes the output
    reproducible.
    """
    search = search or SearchSpec()
    actual = params.regime()
    regime = regime or actual
    if regime is not actual or not regime.has_scheme:
        raise UnsupportedRegime(f"cannot optimize a {regime.value} split for alpha={params.alpha:.6g}")

    free_idx = _FREE[regime]
    try:
        start = default_mu(params)
        best_mu = start
        best = achievable_rate(params, start, search.refined)
    except (InfeasibleParameters, InvalidAllocation):
        start = None
        best_mu, best = None, None
    scale = {i: (start.mu[i] if start and start.mu[i] > 0 else 1.0) for i in free_idx}
    center = {i: (start.mu[i] if start else 1.0) for i in free_idx}

    span = search.decades
    for _ in range(search.rounds):
        axes = []
        for i in free_idx:
            ref = center[i] if center[i] > 0 else scale[i]
            cand = [center[i], 0.0] + [ref * f for f in 10.0 ** np.linspace(-span, span, search.points)]
            axes.append(list(dict.fromkeys(cand)))
        for combo in itertools.product(*axes):
            try:
                mu = MuAlloc(regime, _complete(regime, params, dict(zip(free_idx, combo))))
                rb = achievable_rate(params, mu, search.refined)
            except InvalidAllocation:
                continue
            if best is None or rb.r_sym > best.r_sym:
                best_mu, best = mu, rb
        if best_mu is None:
            break
        center = {i: best_mu.mu[i] for i in free_idx}
        span = 2 * span / (search.points - 1)
    if best_mu is None:
        raise InfeasibleParameters("no feasible power split found on the search grid")
    return best_mu, best
