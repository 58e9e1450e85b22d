"""Parameter sweeps over both channel models and their CSV/JSON reports.

Rows are plain dataclasses; ``write_csv``/``write_json`` turn them into the
fixed column layouts listed in ``HEADERS``. Reals are written with 12
significant digits, exact rationals also as ``num/den``, and cells without
a defined value as ``NA``.
"""
from __future__ import annotations

import csv
import enum
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import IO, Iterable, Optional, Sequence, Union

from .det import DetParams, csym_infinite, feedback_rate
from .errors import InvalidParameters, NotWellDefined, UnsupportedRegime
from .gauss import (
    UNBOUNDED,
    GaussParams,
    GaussRegime,
    bounds_report,
    gdof_lower,
)
from .gauss.params import FeedbackCapacity

NA = "NA"
N_BASE = 840
DEFAULT_AUDIT_ALPHAS = (
    Fraction(1, 4),
    Fraction(1, 2),
    Fraction(7, 12),
    Fraction(2, 3),
    Fraction(2),
    Fraction(5, 2),
    Fraction(4),
)
DEFAULT_AUDIT_CFB: tuple[FeedbackCapacity, ...] = (0.0, 1.0, 2.0, 4.0, UNBOUNDED)
DEFAULT_AUDIT_K = (2, 3, 4)

Beta = Union[Fraction, float]  # math.inf for unlimited feedback


class SweepTarget(enum.Enum):
    DET_RATE_VS_ALPHA = "DetRateVsAlpha"
    GAUSS_RATE_VS_SNR = "GaussRateVsSnr"
    GDOF_VS_ALPHA = "GdofVsAlpha"
    GAP_AUDIT = "GapAudit"


HEADERS = {
    SweepTarget.DET_RATE_VS_ALPHA: ("alpha_num", "alpha_den", "beta", "rate_norm", "rate_norm_frac"),
    SweepTarget.GAUSS_RATE_VS_SNR: ("snr_db", "cfb", "rate_bits", "ub_bits", "gap_bits"),
    SweepTarget.GDOF_VS_ALPHA: ("alpha", "beta", "gdof"),
    SweepTarget.GAP_AUDIT: (
        "snr_db", "inr_db", "cfb", "k", "regime", "rate", "ub", "gap",
        "regime_const", "L", "pass_regime", "pass_L",
    ),
}


@dataclass(frozen=True)
class Axis:
    """``steps`` evenly spaced values from ``start`` to ``stop`` inclusive."""

    start: float
    stop: float
    steps: int

    def __post_init__(self):
        if self.steps < 2:
            raise InvalidParameters("an axis needs at least 2 steps")
        if not self.start < self.stop:
            raise InvalidParameters("axis start must be below stop")

    @classmethod
    def parse(cls, text: str) -> "Axis":
        """Parse ``START:STOP:STEPS``."""
        parts = text.split(":")
        if len(parts) != 3:
            raise ValueError(f"expected START:STOP:STEPS, got {text!r}")
        return cls(float(parts[0]), float(parts[1]), int(parts[2]))

    def values(self) -> list[float]:
        width = self.stop - self.start
        return [self.start + width * i / (self.steps - 1) for i in range(self.steps)]


def parse_beta(text: str) -> Beta:
    """Exact normalized feedback value; ``inf`` for unlimited feedback."""
    if text.strip().lower() in ("inf", "infinity"):
        return math.inf
    value = Fraction(text.strip())
    if value < 0:
        raise ValueError(f"beta must be non-negative, got {text!r}")
    return value


def alpha_grid(n_base: int = N_BASE, step: Fraction = Fraction(1, 120), stop: Fraction = Fraction(3)) -> list[Fraction]:
    count = int(stop / step)
    grid = [step * i for i in range(count + 1)]
    for a in grid:
        if (a * n_base).denominator != 1:
            raise InvalidParameters(f"alpha={a} is not a multiple of 1/{n_base}")
    return grid


def format_value(value) -> str:
    if value is None:
        return NA
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is UNBOUNDED:
        return "inf"
    if isinstance(value, enum.Enum):
        return str(value.value)
    if isinstance(value, str):
        return value
    if isinstance(value, int):
        return str(value)
    x = float(value)
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return format(x, ".12g")


def format_fraction(value: Optional[Fraction]) -> str:
    if value is None:
        return NA
    return f"{value.numerator}/{value.denominator}"


# deterministic model

@dataclass(frozen=True)
class DetAlphaRow:
    alpha: Fraction
    beta: Beta
    rate_norm: Fraction
    regime: str

    def record(self) -> tuple:
        return (
            self.alpha.numerator,
            self.alpha.denominator,
            format_value(self.beta),
            format_value(self.rate_norm),
            format_fraction(self.rate_norm),
        )


def det_normalized_rate(alpha: Fraction, beta: Beta, n_base: int, k_users: int) -> tuple[Fraction, str]:
    m = alpha * n_base
    if m.denominator != 1:
        raise InvalidParameters(f"alpha={alpha} needs m = alpha*{n_base} to be an integer")
    if math.isinf(beta):
        params = DetParams(n_base, int(m), 0, k_users)
        rate = csym_infinite(params)
    else:
        p2 = 2 * Fraction(beta) * n_base
        if p2.denominator != 1:
            raise InvalidParameters(f"beta={beta} needs 2*beta*{n_base} to be an integer")
        params = DetParams(n_base, int(m), int(p2), k_users)
        rate = feedback_rate(params)
    return Fraction(rate) / n_base, params.regime().value


def sweep_det_alpha(
    beta_list: Sequence[Beta],
    n_base: int = N_BASE,
    k_users: int = 3,
    alphas: Optional[Sequence[Fraction]] = None,
) -> list[DetAlphaRow]:
    """Normalized symmetric rate against alpha, one curve per beta.

    At ``alpha = 1`` the row carries the ``1/K`` value and regime ``equal``.
    """
    alphas = alpha_grid(n_base) if alphas is None else [Fraction(a) for a in alphas]
    rows = []
    for beta in beta_list:
        for a in alphas:
            rate, regime = det_normalized_rate(a, beta, n_base, k_users)
            rows.append(DetAlphaRow(a, beta, rate, regime))
    return rows


# Gaussian model

@dataclass(frozen=True)
class GaussSnrRow:
    snr_db: float
    cfb: FeedbackCapacity
    rate: Optional[float]
    ub: float

    @property
    def gap(self) -> Optional[float]:
        return None if self.rate is None else self.ub - self.rate

    def record(self) -> tuple:
        return tuple(format_value(v) for v in (self.snr_db, self.cfb, self.rate, self.ub, self.gap))


def _gauss_params(snr_db: float, alpha: float, cfb: FeedbackCapacity, k_users: int) -> GaussParams:
    return GaussParams.from_db(snr_db, float(alpha) * snr_db, cfb, k_users)


def sweep_gauss_snr(
    alpha: float,
    k_users: int,
    cfb_list: Sequence[FeedbackCapacity],
    snr_db_values: Iterable[float],
) -> list[GaussSnrRow]:
    """Default-split rate and conjectured bound against SNR, one row per (snr, c_fb)."""
    from .gauss import classify_alpha

    regime = classify_alpha(float(alpha))
    if not regime.has_scheme:
        raise UnsupportedRegime(f"no achievable scheme for alpha={float(alpha):.6g} ({regime.value})")
    rows = []
    for snr_db in snr_db_values:
        for cfb in cfb_list:
            rep = bounds_report(_gauss_params(snr_db, alpha, cfb, k_users))
            rows.append(GaussSnrRow(snr_db, cfb, rep.achievable, rep.ub_conjectured))
    return rows


@dataclass(frozen=True)
class GapAuditRow:
    snr_db: float
    inr_db: float
    cfb: FeedbackCapacity
    k: int
    regime: GaussRegime
    rate: float
    ub: float
    regime_const: float
    L: float
    tol: float = 1e-9

    @property
    def gap(self) -> float:
        return self.ub - self.rate

    @property
    def pass_regime(self) -> bool:
        return self.gap <= self.regime_const + self.tol and self.regime_const <= self.L + self.tol

    @property
    def pass_L(self) -> bool:
        return self.gap <= self.L + self.tol

    def record(self) -> tuple:
        return tuple(
            format_value(v)
            for v in (
                self.snr_db, self.inr_db, self.cfb, self.k, self.regime, self.rate, self.ub,
                self.gap, self.regime_const, self.L, self.pass_regime, self.pass_L,
            )
        )


@dataclass(frozen=True)
class AuditSummary:
    points: int
    failures_regime: int
    failures_L: int
    max_gap: Optional[float]

    def to_dict(self) -> dict:
        return {
            "points": self.points,
            "failures_regime": self.failures_regime,
            "failures_L": self.failures_L,
            "max_gap": self.max_gap,
        }


def audit_point(snr_db: float, alpha: float, cfb: FeedbackCapacity, k_users: int, tol: float = 1e-9) -> GapAuditRow:
    params = _gauss_params(snr_db, alpha, cfb, k_users)
    rep = bounds_report(params)
    if rep.achievable is None or rep.regime_gap_const is None:
        raise UnsupportedRegime(f"no gap certificate for alpha={float(alpha):.6g}")
    return GapAuditRow(
        snr_db=snr_db,
        inr_db=float(alpha) * snr_db,
        cfb=cfb,
        k=k_users,
        regime=rep.regime,
        rate=rep.achievable,
        ub=rep.ub_conjectured,
        regime_const=rep.regime_gap_const,
        L=rep.global_gap_L,
        tol=tol,
    )


def gap_audit(
    snr_db_values: Iterable[float] = (10, 20, 30, 40, 50, 60),
    alphas: Sequence[float] = DEFAULT_AUDIT_ALPHAS,
    cfb_list: Sequence[FeedbackCapacity] = DEFAULT_AUDIT_CFB,
    k_list: Sequence[int] = DEFAULT_AUDIT_K,
    tol: float = 1e-9,
) -> tuple[list[GapAuditRow], AuditSummary]:
    """Check the default-split gap against the regime constant and ``L`` on a grid."""
    rows = [
        audit_point(float(snr_db), alpha, cfb, k, tol)
        for snr_db in snr_db_values
        for alpha in alphas
        for cfb in cfb_list
        for k in k_list
    ]
    summary = AuditSummary(
        points=len(rows),
        failures_regime=sum(not r.pass_regime for r in rows),
        failures_L=sum(not r.pass_L for r in rows),
        max_gap=max((r.gap for r in rows), default=None),
    )
    return rows, summary


# GDoF

@dataclass(frozen=True)
class GdofRow:
    alpha: Fraction
    beta: Beta
    gdof: Optional[Fraction]

    def record(self) -> tuple:
        return tuple(format_value(v) for v in (self.alpha, self.beta, self.gdof))


def sweep_gdof(beta_list: Sequence[Beta], alphas: Optional[Sequence[Fraction]] = None) -> list[GdofRow]:
    """GDoF lower bound against alpha; the ``alpha = 1`` cell is ``NA``."""
    alphas = alpha_grid() if alphas is None else [Fraction(a) for a in alphas]
    rows = []
    for beta in beta_list:
        for a in alphas:
            try:
                value = gdof_lower(a, beta)
            except NotWellDefined:
                value = None
            rows.append(GdofRow(a, beta, value))
    return rows


# output

_ROW_TARGET = {
    DetAlphaRow: SweepTarget.DET_RATE_VS_ALPHA,
    GaussSnrRow: SweepTarget.GAUSS_RATE_VS_SNR,
    GdofRow: SweepTarget.GDOF_VS_ALPHA,
    GapAuditRow: SweepTarget.GAP_AUDIT,
}


def _target_of(rows: Sequence) -> SweepTarget:
    if not rows:
        raise ValueError("cannot infer the report layout of an empty row list")
    return _ROW_TARGET[type(rows[0])]


def write_csv(rows: Sequence, out: IO[str], target: Optional[SweepTarget] = None) -> None:
    target = target or _target_of(rows)
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(HEADERS[target])
    for row in rows:
        writer.writerow(row.record())


def write_json(rows: Sequence, out: IO[str], target: Optional[SweepTarget] = None) -> None:
    """JSON array of records keyed by the CSV header, values as in the CSV."""
    target = target or _target_of(rows)
    header = HEADERS[target]
    records = [dict(zip(header, (str(v) for v in row.record()))) for row in rows]
    json.dump(records, out, indent=1)
    out.write("\n")


def read_csv(src: IO[str]) -> list[dict[str, str]]:
    return list(csv.DictReader(src))
