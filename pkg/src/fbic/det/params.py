from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from ..errors import DegenerateChannel, InvalidParameters, UnsupportedRegime


class DetRegime(enum.Enum):
    VERY_WEAK = "very_weak"  # m/n <= 1/2
    WEAK = "weak"  # 1/2 < m/n <= 2/3
    MODERATE = "moderate"  # 2/3 < m/n < 1, formula only
    EQUAL = "equal"  # m = n, formula only
    STRONG = "strong"  # 1 < m/n < 2, formula only
    VERY_STRONG = "very_strong"  # m/n >= 2

    @property
    def has_scheme(self) -> bool:
        return self in (DetRegime.VERY_WEAK, DetRegime.WEAK, DetRegime.VERY_STRONG)


@dataclass(frozen=True)
class DetParams:
    """Symmetric K-user linear deterministic interference channel.

    ``p2`` is twice the per-use feedback capacity, so one two-slot block
    carries exactly ``p2`` feedback bits per user.
    """

    n: int
    m: int
    p2: int
    k_users: int

    def __post_init__(self):
        for name in ("n", "m", "p2", "k_users"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool):
                raise InvalidParameters(f"{name} must be an integer, got {value!r}")
        if self.n < 0 or self.m < 0 or self.p2 < 0:
            raise InvalidParameters("n, m and p2 must be non-negative")
        if self.k_users < 2:
            raise InvalidParameters("need at least two users")

    @property
    def q(self) -> int:
        return max(self.m, self.n)

    @property
    def p(self) -> Fraction:
        return Fraction(self.p2, 2)

    @property
    def alpha(self) -> Fraction:
        self._require_direct_link()
        return Fraction(self.m, self.n)

    @property
    def beta(self) -> Fraction:
        self._require_direct_link()
        return self.p / self.n

    def _require_direct_link(self) -> None:
        if self.n == 0:
            raise DegenerateChannel("n = 0: interference level m/n is undefined")

    def regime(self) -> DetRegime:
        """Classify by m/n; boundary points go to the lower-listed piece."""
        self._require_direct_link()
        n, m = self.n, self.m
        if 2 * m <= n:
            return DetRegime.VERY_WEAK
        if 3 * m <= 2 * n:
            return DetRegime.WEAK
        if m < n:
            return DetRegime.MODERATE
        if m == n:
            return DetRegime.EQUAL
        if m < 2 * n:
            return DetRegime.STRONG
        return DetRegime.VERY_STRONG

    def scheme_regime(self) -> DetRegime:
        regime = self.regime()
        if not regime.has_scheme:
            raise UnsupportedRegime(
                f"no deterministic construction for alpha = {self.alpha} "
                f"({regime.value}); use the rate formulas instead"
            )
        return regime
