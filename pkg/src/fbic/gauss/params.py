from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Union

from ..errors import InvalidAllocation, InvalidParameters

# regime boundaries are compared with this slack so that instances built
# from dB values (inr_db = alpha * snr_db) land on the intended side
ALPHA_TOL = 1e-9


class Unbounded(enum.Enum):
    """Feedback link of unlimited capacity."""

    UNBOUNDED = "inf"

    def __repr__(self) -> str:
        return "UNBOUNDED"

    def __str__(self) -> str:
        return "inf"


UNBOUNDED = Unbounded.UNBOUNDED

FeedbackCapacity = Union[float, Unbounded]


def parse_cfb(text: str) -> FeedbackCapacity:
    """Parse a feedback capacity flag; ``inf`` means unlimited."""
    if text.strip().lower() in ("inf", "infinity", "unbounded"):
        return UNBOUNDED
    value = float(text)
    if not math.isfinite(value) or value < 0:
        raise ValueError(f"feedback capacity must be a finite non-negative number or 'inf', got {text!r}")
    return value


def db_to_linear(db: float) -> float:
    return 10.0 ** (db / 10.0)


class GaussRegime(enum.Enum):
    VERY_WEAK = "very_weak"  # alpha <= 1/2
    WEAK = "weak"  # 1/2 < alpha <= 2/3
    MIDDLE_LOW = "middle_low"  # 2/3 < alpha < 1
    EQUAL = "equal"  # alpha = 1
    MIDDLE_HIGH = "middle_high"  # 1 < alpha < 2
    STRONG = "strong"  # alpha >= 2

    @property
    def has_scheme(self) -> bool:
        return self in (GaussRegime.VERY_WEAK, GaussRegime.WEAK, GaussRegime.STRONG)

    @property
    def mu_size(self) -> int:
        return {GaussRegime.VERY_WEAK: 4, GaussRegime.WEAK: 6, GaussRegime.STRONG: 3}[self]


def classify_alpha(alpha: float) -> GaussRegime:
    if alpha <= 0.5 + ALPHA_TOL:
        return GaussRegime.VERY_WEAK
    if alpha <= 2 / 3 + ALPHA_TOL:
        return GaussRegime.WEAK
    if alpha < 1 - ALPHA_TOL:
        return GaussRegime.MIDDLE_LOW
    if alpha <= 1 + ALPHA_TOL:
        return GaussRegime.EQUAL
    if alpha < 2 - ALPHA_TOL:
        return GaussRegime.MIDDLE_HIGH
    return GaussRegime.STRONG


@dataclass(frozen=True)
class GaussParams:
    """Symmetric K-user Gaussian interference channel with feedback.

    ``snr`` and ``inr`` are linear power ratios, ``c_fb`` is the feedback
    capacity in bits per channel use (or ``UNBOUNDED``).
    """

    snr: float
    inr: float
    c_fb: FeedbackCapacity
    k_users: int

    def __post_init__(self):
        if not (self.snr > 1 and self.inr > 1):
            raise InvalidParameters(f"need snr > 1 and inr > 1, got snr={self.snr}, inr={self.inr}")
        if not math.isfinite(self.snr) or not math.isfinite(self.inr):
            raise InvalidParameters("snr and inr must be finite")
        if self.c_fb is not UNBOUNDED:
            if not (isinstance(self.c_fb, (int, float)) and math.isfinite(self.c_fb) and self.c_fb >= 0):
                raise InvalidParameters(f"c_fb must be finite and >= 0 or UNBOUNDED, got {self.c_fb!r}")
        if not isinstance(self.k_users, int) or self.k_users < 2:
            raise InvalidParameters("need at least two users")

    @classmethod
    def from_db(cls, snr_db: float, inr_db: float, c_fb: FeedbackCapacity, k_users: int) -> "GaussParams":
        return cls(db_to_linear(snr_db), db_to_linear(inr_db), c_fb, k_users)

    @property
    def alpha(self) -> float:
        return math.log(self.inr) / math.log(self.snr)

    @property
    def beta(self) -> float:
        if self.c_fb is UNBOUNDED:
            return math.inf
        return self.c_fb / math.log2(self.snr)

    @property
    def unbounded(self) -> bool:
        return self.c_fb is UNBOUNDED

    def regime(self) -> GaussRegime:
        return classify_alpha(self.alpha)

    def with_cfb(self, c_fb: FeedbackCapacity) -> "GaussParams":
        return GaussParams(self.snr, self.inr, c_fb, self.k_users)

    # the min/max expressions of the default power splits
    def fb_min(self, x: float) -> float:
        """``min{2^(2 C_FB), x}``; just ``x`` for unlimited feedback."""
        if self.unbounded:
            return x
        return min(2.0 ** (2 * self.c_fb), x)

    def fb_max_inv(self, x: float) -> float:
        """``max{2^(-2 C_FB), x}``; just ``x`` for unlimited feedback."""
        if self.unbounded:
            return x
        return max(2.0 ** (-2 * self.c_fb), x)

    def fb_rate_cap(self) -> float:
        """Largest rate a fed-back lattice point may have, ``2 C_FB``."""
        if self.unbounded:
            return math.inf
        return 2.0 * self.c_fb


@dataclass(frozen=True)
class MuAlloc:
    """Relative power weights of the message layers of one scheme."""

    regime: GaussRegime
    mu: tuple[float, ...]

    def __post_init__(self):
        if not self.regime.has_scheme:
            raise InvalidAllocation(f"no power split exists for regime {self.regime.value}")
        object.__setattr__(self, "mu", tuple(float(x) for x in self.mu))
        if len(self.mu) != self.regime.mu_size:
            raise InvalidAllocation(
                f"{self.regime.value} needs {self.regime.mu_size} weights, got {len(self.mu)}"
            )
        if any(not math.isfinite(x) or x < 0 for x in self.mu):
            raise InvalidAllocation(f"weights must be finite and non-negative: {self.mu}")

    def __getitem__(self, i: int) -> float:
        """1-based access, ``alloc[1]`` is the first layer's weight."""
        return self.mu[i - 1]

    def check(self, params: GaussParams, rel_tol: float = 1e-9) -> None:
        """Raise ``InvalidAllocation`` unless the regime's side condition holds."""
        s, i = params.snr, params.inr
        if self.regime is GaussRegime.VERY_WEAK:
            lhs, rhs, what = s * self[3], i * self[1], "snr*mu3 == inr*mu1"
            round1 = self[1] + self[2] + self[3]
        elif self.regime is GaussRegime.WEAK:
            lhs, rhs, what = s * self[3], i * self[2], "snr*mu3 == inr*mu2"
            round1 = self[1] + self[2] + self[3] + self[4]
        else:
            lhs = rhs = 0.0
            what = ""
            round1 = self[1] + self[2]
        if not math.isclose(lhs, rhs, rel_tol=rel_tol, abs_tol=0.0):
            raise InvalidAllocation(f"side condition {what} violated: {lhs!r} != {rhs!r}")
        if round1 <= 0:
            raise InvalidAllocation("first-slot power is zero; nothing to decode or feed back")


@dataclass(frozen=True)
class RateBreakdown:
    per_message: tuple[float, ...]
    binding_constraint: tuple[str, ...]

    @property
    def r_sym(self) -> float:
        return sum(self.per_message) / 2
