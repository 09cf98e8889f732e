"""Weighted-sample moments and shape statistics.

A :class:`Sample` is a finite set of points ``x_i`` with probabilities ``p_i``
supported on an interval ``[m, M]``. Central moments are accumulated in two
passes around the mean using :func:`math.fsum`, which keeps ``mu_4`` accurate
for tightly clustered data.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence, Tuple, Union

from .errors import (
    DegenerateSampleError,
    EmptyInputError,
    InputError,
    MissingMomentError,
    NormalizationError,
)

WEIGHT_SUM_TOL = 1e-12


@dataclass(frozen=True)
class Sample:
    """Finite weighted point set on ``[m, M]``.

    Use :meth:`from_points` for the permissive constructor (default uniform
    weights, data-driven interval, optional renormalisation).
    """

    points: Tuple[float, ...]
    weights: Tuple[float, ...]
    interval: Tuple[float, float]

    def __post_init__(self):
        if len(self.points) == 0:
            raise EmptyInputError("sample has no points")
        if len(self.points) != len(self.weights):
            raise InputError(
                f"{len(self.points)} points but {len(self.weights)} weights"
            )
        values = list(self.points) + list(self.weights) + list(self.interval)
        if not all(math.isfinite(v) for v in values):
            raise InputError("sample contains non-finite values")
        if any(w < 0 for w in self.weights):
            raise NormalizationError("weights must be non-negative")
        total = math.fsum(self.weights)
        if abs(total - 1.0) > WEIGHT_SUM_TOL:
            raise NormalizationError(f"weights sum to {total!r}, expected 1")
        lo, hi = self.interval
        if lo > min(self.points) or max(self.points) > hi:
            raise InputError(
                f"interval [{lo}, {hi}] does not contain all points "
                f"[{min(self.points)}, {max(self.points)}]"
            )

    @classmethod
    def from_points(
        cls,
        points: Sequence[float],
        weights: Optional[Sequence[float]] = None,
        interval: Optional[Tuple[float, float]] = None,
        renormalize: bool = False,
    ) -> "Sample":
        points = tuple(float(x) for x in points)
        if not points:
            raise EmptyInputError("sample has no points")
        if weights is None:
            weights = (1.0 / len(points),) * len(points)
        else:
            weights = tuple(float(w) for w in weights)
            if renormalize and len(weights) == len(points):
                if any(w < 0 for w in weights):
                    raise NormalizationError("weights must be non-negative")
                total = math.fsum(weights)
                if not total > 0:
                    raise NormalizationError("weights sum to zero")
                weights = tuple(w / total for w in weights)
        if interval is None:
            interval = (min(points), max(points))
        else:
            interval = (float(interval[0]), float(interval[1]))
        return cls(points, weights, interval)

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def is_uniform(self) -> bool:
        """True when every point carries weight ``1/n`` (to 1e-12)."""
        target = 1.0 / self.n
        return all(abs(w - target) <= WEIGHT_SUM_TOL for w in self.weights)

    @property
    def data_range(self) -> Tuple[float, float]:
        return min(self.points), max(self.points)

    def shifted(self, c: float) -> "Sample":
        lo, hi = self.interval
        return Sample(
            tuple(x + c for x in self.points), self.weights, (lo + c, hi + c)
        )

    def scaled(self, s: float) -> "Sample":
        if not s > 0:
            raise InputError("scale factor must be positive")
        lo, hi = self.interval
        return Sample(
            tuple(x * s for x in self.points), self.weights, (lo * s, hi * s)
        )


@dataclass(frozen=True)
class MomentSet:
    """Mean, central moments ``mu_r`` and raw moments ``mu'_r`` keyed by order."""

    mean: float
    central: Mapping[int, float] = field(default_factory=dict)
    raw: Mapping[int, float] = field(default_factory=dict)
    n: int = 0

    def mu(self, r: int) -> float:
        try:
            return self.central[r]
        except KeyError:
            raise MissingMomentError(f"central moment of order {r} not computed")


@dataclass(frozen=True)
class ShapeStats:
    skewness: float
    kurtosis: float
    studentized_range: float
    std_dev: float


def compute_moments(sample: Sample, max_order: int = 4) -> MomentSet:
    """Central and raw moments of ``sample`` up to ``max_order``.

    >>> s = Sample.from_points([0.0, 1.0])
    >>> compute_moments(s).central[4]
    0.0625
    """
    if max_order < 2:
        raise InputError("max_order must be at least 2")
    if not isinstance(sample, Sample):
        raise InputError("compute_moments expects a Sample")
    xs, ps = sample.points, sample.weights
    mean = math.fsum(p * x for p, x in zip(ps, xs))
    devs = [x - mean for x in xs]
    central = {1: 0.0}
    raw = {1: mean}
    for r in range(2, max_order + 1):
        central[r] = math.fsum(p * d**r for p, d in zip(ps, devs))
        raw[r] = math.fsum(p * x**r for p, x in zip(ps, xs))
    return MomentSet(mean=mean, central=central, raw=raw, n=sample.n)


def central_from_raw(raw: Union[MomentSet, Mapping[int, float]]) -> MomentSet:
    """Convert moments about the origin to central moments (orders 2 to 4)."""
    if isinstance(raw, MomentSet):
        n = raw.n
        raw = raw.raw
    else:
        n = 0
    missing = [r for r in (1, 2, 3, 4) if r not in raw]
    if missing:
        raise MissingMomentError(f"raw moments missing for orders {missing}")
    r1, r2, r3, r4 = (float(raw[k]) for k in (1, 2, 3, 4))
    central = {
        1: 0.0,
        2: r2 - r1**2,
        3: r3 - 3 * r1 * r2 + 2 * r1**3,
        4: r4 - 4 * r1 * r3 + 6 * r1**2 * r2 - 3 * r1**4,
    }
    return MomentSet(mean=r1, central=central, raw=dict(raw), n=n)


def shape_stats(moments: MomentSet, interval: Tuple[float, float]) -> ShapeStats:
    """Signed skewness, kurtosis and studentized range ``(M - m) / sigma``."""
    mu2, mu3, mu4 = moments.mu(2), moments.mu(3), moments.mu(4)
    if not mu2 > 0:
        raise DegenerateSampleError("zero variance: all points coincide")
    sigma = math.sqrt(mu2)
    lo, hi = interval
    return ShapeStats(
        skewness=mu3 / mu2**1.5,
        kurtosis=mu4 / mu2**2,
        studentized_range=(hi - lo) / sigma,
        std_dev=sigma,
    )
