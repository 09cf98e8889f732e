"""Moment inequalities evaluated on a finite weighted sample.

Every function returns :class:`BoundReport` records instead of raising when
its hypotheses fail; ``applicable=False`` carries the reason in ``note``.
Functions take a :class:`~momentbounds.moments.MomentSet` plus the support
interval, except the Nagy family which needs the raw sample (uniform weights,
data range).
"""

from __future__ import annotations

import math
import re
from dataclasses import asdict, dataclass
from enum import Enum
from typing import List, Optional, Tuple

from .moments import MomentSet, Sample, compute_moments

SLACK_RTOL = 1e-9
# Relative distance from the two-point pole mu_2 = (mean - m)(M - mean).
TWO_POINT_EPS = 1e-10

Interval = Tuple[float, float]


class Direction(str, Enum):
    UPPER = "upper"
    LOWER = "lower"


BOUND_NAMES = frozenset(
    {
        "popoviciu_upper",
        "nagy_lower",
        "mu3_two_sided_lower",
        "mu3_two_sided_upper",
        "popoviciu_refined",
        "mu4_range_upper",
        "mu4_range_upper_aux",
        "pearson_lower",
        "mu4_upper_refined",
        "hankel_gap_upper",
        "pearson_gap_upper",
        "kurtosis_skewness_range",
        "kurtosis_skewness_range_aux",
        "mu3_range_upper",
        "hankel_psd_upper",
    }
)
_PARAMETRIC_NAME = re.compile(r"^nagy_(generalized|power)_lower_r[1-9][0-9]*$")


def is_registered(name: str) -> bool:
    return name in BOUND_NAMES or bool(_PARAMETRIC_NAME.match(name))


@dataclass(frozen=True)
class BoundReport:
    """One inequality instance.

    ``slack`` is ``rhs - lhs`` for upper bounds and ``lhs - rhs`` for lower
    bounds, so a sound bound never has materially negative slack.
    ``rhs_alt`` holds the weaker second right-hand side of chained bounds.
    """

    name: str
    lhs: float
    rhs: float
    direction: Direction
    applicable: bool = True
    note: Optional[str] = None
    rhs_alt: Optional[float] = None

    def __post_init__(self):
        if not is_registered(self.name):
            raise ValueError(f"unknown bound name {self.name!r}")

    @property
    def slack(self) -> float:
        if not self.applicable:
            return math.nan
        if self.direction is Direction.UPPER:
            return self.rhs - self.lhs
        return self.lhs - self.rhs

    @property
    def scale(self) -> float:
        return max(1.0, abs(self.lhs), abs(self.rhs))

    def holds(self, rtol: float = SLACK_RTOL) -> bool:
        """True for inapplicable reports or slack >= -rtol * scale."""
        if not self.applicable:
            return True
        return self.slack >= -rtol * self.scale

    def to_dict(self) -> dict:
        d = asdict(self)
        d["direction"] = self.direction.value
        d["slack"] = None if not self.applicable else self.slack
        if self.rhs_alt is None:
            del d["rhs_alt"]
        for key in ("lhs", "rhs"):
            if isinstance(d[key], float) and math.isnan(d[key]):
                d[key] = None
        return d


def _na(name, direction, note) -> BoundReport:
    return BoundReport(name, math.nan, math.nan, direction, False, note)


def _pole_gap(moments: MomentSet, interval: Interval) -> float:
    m, M = interval
    return (moments.mean - m) * (M - moments.mean)


def popoviciu_upper(moments: MomentSet, interval: Interval) -> BoundReport:
    m, M = interval
    return BoundReport("popoviciu_upper", moments.mu(2), (M - m) ** 2 / 4, Direction.UPPER)


def nagy_lower(sample: Sample) -> BoundReport:
    """``S^2 >= (max - min)^2 / (2n)`` for ``n`` equally weighted reals."""
    if not sample.is_uniform:
        return _na("nagy_lower", Direction.LOWER, "requires uniform weights")
    lo, hi = sample.data_range
    n = sample.n
    s2 = compute_moments(sample, 2).mu(2)
    note = None if (lo, hi) == tuple(sample.interval) else "uses data range"
    return BoundReport("nagy_lower", s2, (hi - lo) ** 2 / (2 * n), Direction.LOWER, note=note)


def mu3_two_sided(moments: MomentSet, interval: Interval) -> List[BoundReport]:
    m, M = interval
    mean, mu2, mu3 = moments.mean, moments.mu(2), moments.mu(3)
    if not (mean > m and M > mean):
        note = "mean lies on the interval boundary"
        return [
            _na("mu3_two_sided_lower", Direction.LOWER, note),
            _na("mu3_two_sided_upper", Direction.UPPER, note),
        ]
    a, b = mean - m, M - mean
    lower = (mu2**2 - a**2 * mu2) / a
    upper = (b**2 * mu2 - mu2**2) / b
    return [
        BoundReport("mu3_two_sided_lower", mu3, lower, Direction.LOWER),
        BoundReport("mu3_two_sided_upper", mu3, upper, Direction.UPPER),
    ]


def popoviciu_refined(moments: MomentSet, interval: Interval) -> BoundReport:
    m, M = interval
    mu2, mu3 = moments.mu(2), moments.mu(3)
    if not mu2 > 0:
        return _na("popoviciu_refined", Direction.UPPER, "zero variance")
    lhs = mu2 + (mu3 / (2 * mu2)) ** 2
    return BoundReport("popoviciu_refined", lhs, (M - m) ** 2 / 4, Direction.UPPER)


def mu4_range_upper(moments: MomentSet, interval: Interval) -> List[BoundReport]:
    """Fourth moment against ``(M - m)^4 / 12`` and the mean-dependent form."""
    m, M = interval
    mu4 = moments.mu(4)
    a, b = moments.mean - m, M - moments.mean
    aux = a * b * (a**2 + b**2 - a * b)
    return [
        BoundReport("mu4_range_upper", mu4, (M - m) ** 4 / 12, Direction.UPPER),
        BoundReport("mu4_range_upper_aux", mu4, aux, Direction.UPPER),
    ]


def pearson_lower(moments: MomentSet, interval: Interval = None) -> BoundReport:
    mu2, mu3, mu4 = moments.mu(2), moments.mu(3), moments.mu(4)
    if not mu2 > 0:
        return _na("pearson_lower", Direction.LOWER, "zero variance")
    return BoundReport("pearson_lower", mu4, mu3**2 / mu2 + mu2**2, Direction.LOWER)


def mu4_upper_refined(moments: MomentSet, interval: Interval) -> BoundReport:
    """Upper bound on ``mu_4`` from ``mu_2``, ``mu_3`` and the interval.

    Undefined for distributions concentrated on ``{m, M}``, where
    ``mu_2 = (mean - m)(M - mean)``; those are reported as inapplicable.
    """
    m, M = interval
    mu2, mu3, mu4 = moments.mu(2), moments.mu(3), moments.mu(4)
    d = _pole_gap(moments, interval)
    if not abs(mu2 - d) > TWO_POINT_EPS * (M - m) ** 2:
        return _na("mu4_upper_refined", Direction.UPPER, "two-point distribution")
    c = m + M - 2 * moments.mean
    rhs = d * mu2 + c * mu3 - (mu3 - c * mu2) ** 2 / (d - mu2)
    return BoundReport("mu4_upper_refined", mu4, rhs, Direction.UPPER)


def hankel_gap_upper(moments: MomentSet, interval: Interval) -> BoundReport:
    m, M = interval
    mu2, mu3, mu4 = moments.mu(2), moments.mu(3), moments.mu(4)
    d = _pole_gap(moments, interval)
    lhs = mu2 * mu4 - mu2**3 - mu3**2
    rhs = (d * (M - m)) ** 2 / 27
    alt = (M - m) ** 6 / 432
    return BoundReport("hankel_gap_upper", lhs, rhs, Direction.UPPER, rhs_alt=alt)


def pearson_gap_upper(moments: MomentSet, interval: Interval) -> BoundReport:
    m, M = interval
    mu2, mu3, mu4 = moments.mu(2), moments.mu(3), moments.mu(4)
    if not mu2 > 0:
        return _na("pearson_gap_upper", Direction.UPPER, "zero variance")
    d = _pole_gap(moments, interval)
    lhs = mu4 - mu2**2 - mu3**2 / mu2
    rhs = d * ((M - m) / 4) ** 2
    alt = (M - m) ** 4 / 64
    return BoundReport("pearson_gap_upper", lhs, rhs, Direction.UPPER, rhs_alt=alt)


def kurtosis_skewness_range(moments: MomentSet, interval: Interval) -> List[BoundReport]:
    m, M = interval
    mu2, mu3, mu4 = moments.mu(2), moments.mu(3), moments.mu(4)
    if not mu2 > 0:
        return [
            _na("kurtosis_skewness_range", Direction.UPPER, "zero variance"),
            _na("kurtosis_skewness_range_aux", Direction.UPPER, "zero variance"),
        ]
    kurt = mu4 / mu2**2
    skew_sq = mu3**2 / mu2**3
    q = (M - m) / math.sqrt(mu2)
    note = "population moments of the weighted sample"
    return [
        BoundReport("kurtosis_skewness_range", kurt - skew_sq, q**2 / 4, Direction.UPPER, note=note),
        BoundReport(
            "kurtosis_skewness_range_aux",
            mu4 / mu2**2 - mu3**2 / mu2**3,
            (M - m) ** 2 / (4 * mu2),
            Direction.UPPER,
        ),
    ]


def mu3_range_upper(moments: MomentSet, interval: Interval) -> BoundReport:
    m, M = interval
    rhs = (M - m) ** 3 / (6 * math.sqrt(3))
    return BoundReport("mu3_range_upper", abs(moments.mu(3)), rhs, Direction.UPPER)


def nagy_generalized_lower(sample: Sample, r: int) -> List[BoundReport]:
    """Lower bounds on the even central moment ``m_{2r}`` of ``n`` equal-weight reals.

    Returns the two-term bound followed by the range-only bound; for
    ``n < 3`` only the range-only bound is defined.
    """
    if r < 1:
        raise ValueError("r must be a positive integer")
    gen_name = f"nagy_generalized_lower_r{r}"
    pow_name = f"nagy_power_lower_r{r}"
    if not sample.is_uniform:
        note = "requires uniform weights"
        return [_na(gen_name, Direction.LOWER, note), _na(pow_name, Direction.LOWER, note)]
    n = sample.n
    lo, hi = sample.data_range
    width = hi - lo
    mom = compute_moments(sample, max(2 * r, 2))
    m2r, m2 = mom.mu(2 * r), mom.mu(2)
    base = width ** (2 * r) / (2 ** (2 * r - 1) * n)
    note = None if (lo, hi) == tuple(sample.interval) else "uses data range"
    if n < 3:
        return [BoundReport(pow_name, m2r, base, Direction.LOWER, note=f"n={n} equality")]
    power = BoundReport(pow_name, m2r, base, Direction.LOWER, note=note)
    excess = m2 - width**2 / (2 * n)
    rhs = base + (n / (n - 2)) ** (r - 1) * excess**r
    return [BoundReport(gen_name, m2r, rhs, Direction.LOWER, note=note), power]


def run_suite(sample: Sample) -> List[BoundReport]:
    """Every inequality on ``sample``; ``r = 2, 3`` for the generalised Nagy bound."""
    mom = compute_moments(sample, 4)
    iv = sample.interval
    reports: List[BoundReport] = [
        popoviciu_upper(mom, iv),
        nagy_lower(sample),
        *mu3_two_sided(mom, iv),
        popoviciu_refined(mom, iv),
        *mu4_range_upper(mom, iv),
        pearson_lower(mom, iv),
        mu4_upper_refined(mom, iv),
        hankel_gap_upper(mom, iv),
        pearson_gap_upper(mom, iv),
        *kurtosis_skewness_range(mom, iv),
        mu3_range_upper(mom, iv),
    ]
    for r in (2, 3):
        reports.extend(nagy_generalized_lower(sample, r))
    return reports
