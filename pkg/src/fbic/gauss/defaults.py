"""Default power splits that certify the constant-gap results."""
from __future__ import annotations

from ..errors import InfeasibleParameters, UnsupportedRegime
from .params import GaussParams, GaussRegime, MuAlloc


def _build(params: GaussParams, regime: GaussRegime, mu: tuple[float, ...]) -> MuAlloc:
    if params.regime() is not regime:
        raise UnsupportedRegime(
            f"alpha={params.alpha:.6g} is in the {params.regime().value} regime, not {regime.value}"
        )
    if any(x < 0 for x in mu):
        raise InfeasibleParameters(f"default power split has a negative entry: {mu}")
    return MuAlloc(regime, mu)


def default_mu_very_weak(params: GaussParams) -> MuAlloc:
    s, i = params.snr, params.inr
    t = params.fb_min(i - 1)
    mu1 = t / (2 * i)
    mu2 = 1 / i - t / (2 * s)
    mu3 = i * mu1 / s
    mu4 = 1 / i
    return _build(params, GaussRegime.VERY_WEAK, (mu1, mu2, mu3, mu4))


def default_mu_weak(params: GaussParams) -> MuAlloc:
    s, i = params.snr, params.inr
    u = params.fb_max_inv(i**3 / s**2)
    mu4 = u / (4 * i)
    mu3 = 1 / (3 * i) - u / (4 * i)
    mu6 = mu3
    mu2 = s * mu3 / i
    mu1 = 1 - (mu2 + mu3 + mu4)
    mu5 = 1 - mu2 - mu6
    return _build(params, GaussRegime.WEAK, (mu1, mu2, mu3, mu4, mu5, mu6))


def default_mu_strong(params: GaussParams) -> MuAlloc:
    s, i = params.snr, params.inr
    v = params.fb_min(i / s**2)
    mu2 = s * v / (2 * i)
    mu1 = mu3 = 1 - mu2
    return _build(params, GaussRegime.STRONG, (mu1, mu2, mu3))


_DEFAULTS = {
    GaussRegime.VERY_WEAK: default_mu_very_weak,
    GaussRegime.WEAK: default_mu_weak,
    GaussRegime.STRONG: default_mu_strong,
}


def default_mu(params: GaussParams) -> MuAlloc:
    """Default split for whichever scheme covers ``params``."""
    regime = params.regime()
    if not regime.has_scheme:
        raise UnsupportedRegime(f"no achievable scheme for alpha={params.alpha:.6g} ({regime.value})")
    return _DEFAULTS[regime](params)
