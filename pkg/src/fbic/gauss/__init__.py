"""Symmetric K-user Gaussian interference channel with rate-limited feedback."""
from .bounds import (
    BoundsReport,
    FeedbackBranch,
    active_branch,
    bounds_report,
    conjectured_ub,
    feedback_threshold,
    gap_L,
    gdof_lower,
    regime_gap_const,
    upper_bound_inf_fb,
    upper_bound_no_fb,
)
from .defaults import default_mu, default_mu_strong, default_mu_very_weak, default_mu_weak
from .optimize import SearchSpec, optimize_mu
from .params import (
    UNBOUNDED,
    GaussParams,
    GaussRegime,
    MuAlloc,
    RateBreakdown,
    Unbounded,
    classify_alpha,
    db_to_linear,
    parse_cfb,
)
from .rates import achievable_rate, rate_strong, rate_very_weak, rate_weak

__all__ = [
    "BoundsReport",
    "FeedbackBranch",
    "GaussParams",
    "GaussRegime",
    "MuAlloc",
    "RateBreakdown",
    "SearchSpec",
    "UNBOUNDED",
    "Unbounded",
    "achievable_rate",
    "active_branch",
    "bounds_report",
    "classify_alpha",
    "conjectured_ub",
    "db_to_linear",
    "default_mu",
    "default_mu_strong",
    "default_mu_very_weak",
    "default_mu_weak",
    "feedback_threshold",
    "gap_L",
    "gdof_lower",
    "optimize_mu",
    "parse_cfb",
    "rate_strong",
    "rate_very_weak",
    "rate_weak",
    "regime_gap_const",
    "upper_bound_inf_fb",
    "upper_bound_no_fb",
]
