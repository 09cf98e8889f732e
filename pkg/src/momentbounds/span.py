"""Bounds on the span (largest minus smallest root) of a real-rooted polynomial.

A monic ``p`` is first depressed so its roots have zero mean; Newton's
identities then turn the coefficients ``a_2, a_3, a_4`` into the root
moments ``m_2, m_3, m_4`` and every moment bound becomes a span bound.
The bounds assume the roots are real; ``verify=True`` checks that with the
Sturm oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import (
    BoundsError,
    DegreeError,
    InputError,
    NotDepressedError,
    RealRootednessViolation,
)
from .inequalities import Direction

DEPRESSED_RTOL = 1e-10
BRACKET_RTOL = 1e-8


class BoundViolationError(BoundsError):
    """A verified bound failed against the exact value."""


@dataclass(frozen=True)
class Polynomial:
    """Monic real polynomial, coefficients from highest degree down."""

    coefficients: Tuple[float, ...]

    def __post_init__(self):
        c = tuple(float(x) for x in self.coefficients)
        if not c:
            raise InputError("polynomial needs at least one coefficient")
        if not all(math.isfinite(x) for x in c):
            raise InputError("polynomial has non-finite coefficients")
        if c[0] == 0.0:
            raise InputError("leading coefficient must be non-zero")
        if c[0] != 1.0:
            c = tuple(x / c[0] for x in c)
        object.__setattr__(self, "coefficients", c)

    @classmethod
    def from_roots(cls, roots: Sequence[float]) -> "Polynomial":
        coeffs = [1.0]
        for r in roots:
            coeffs = [a - r * b for a, b in zip(coeffs + [0.0], [0.0] + coeffs)]
        return cls(tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def coefficient(self, k: int) -> float:
        """``a_k``, the coefficient of ``x^(n-k)``; zero beyond the degree."""
        return self.coefficients[k] if k <= self.degree else 0.0

    def scale(self) -> float:
        """Characteristic root magnitude ``max |a_k|^(1/k)``."""
        n = self.degree
        return max([1.0] + [abs(self.coefficients[k]) ** (1.0 / k) for k in range(1, n + 1)])

    def __call__(self, x: float) -> float:
        acc = 0.0
        for c in self.coefficients:
            acc = acc * x + c
        return acc


@dataclass(frozen=True)
class PowerSums:
    """Power sums ``alpha_k`` of the roots and the root moments ``m_k = alpha_k / n``."""

    n: int
    a2: float
    a3: float
    a4: float
    alpha: Dict[int, float] = field(default_factory=dict)

    @property
    def m2(self) -> float:
        return -2 * self.a2 / self.n

    @property
    def m3(self) -> float:
        return -3 * self.a3 / self.n

    @property
    def m4(self) -> float:
        return 2 * (self.a2**2 - 2 * self.a4) / self.n

    @property
    def fourth_proxy(self) -> float:
        """``a_2^2 - 2 a_4``, which equals ``n m_4 / 2``."""
        return self.a2**2 - 2 * self.a4


@dataclass(frozen=True)
class SpanBound:
    name: str
    value: float
    direction: Direction
    applicable: bool = True
    note: Optional[str] = None

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "direction": self.direction.value,
            "value": None if math.isnan(self.value) else self.value,
            "applicable": self.applicable,
            "note": self.note,
        }


@dataclass(frozen=True)
class SpanReport:
    bounds: List[SpanBound]
    exact: Optional[float] = None
    shift: float = 0.0
    depressed: Optional[Polynomial] = None

    def violations(self, rtol: float = BRACKET_RTOL) -> List[SpanBound]:
        if self.exact is None:
            return []
        tol = rtol * max(1.0, self.exact)
        bad = []
        for b in self.bounds:
            if not b.applicable:
                continue
            if b.direction is Direction.LOWER and b.value > self.exact + tol:
                bad.append(b)
            if b.direction is Direction.UPPER and b.value < self.exact - tol:
                bad.append(b)
        return bad

    def to_dict(self) -> dict:
        return {
            "bounds": [b.to_dict() for b in self.bounds],
            "exact": self.exact,
            "shift": self.shift,
            "depressed": None if self.depressed is None else list(self.depressed.coefficients),
        }


def _as_poly(p) -> Polynomial:
    return p if isinstance(p, Polynomial) else Polynomial(tuple(p))


def depress(p) -> Tuple[Polynomial, float]:
    """``q(y) = p(y + t)`` with ``t = -a_1 / n``, so that ``q`` has no ``y^(n-1)`` term."""
    p = _as_poly(p)
    n = p.degree
    if n < 2:
        raise DegreeError("depress needs degree >= 2")
    t = -p.coefficients[1] / n + 0.0  # + 0.0 turns -0.0 into 0.0
    # Taylor shift by repeated synthetic division
    c = list(p.coefficients)
    for k in range(n):
        for i in range(1, n + 1 - k):
            c[i] += t * c[i - 1]
    c[1] = 0.0
    return Polynomial(tuple(c)), t


def power_sums(p) -> PowerSums:
    """Root power sums of a depressed polynomial via Newton's identities.

    Coefficients past the degree count as zero, so ``m_4`` is meaningful
    for every degree ``n >= 2``.
    """
    p = _as_poly(p)
    n = p.degree
    if n < 1:
        raise DegreeError("power sums need degree >= 1")
    a = [p.coefficient(k) for k in range(0, 5)]
    if abs(a[1]) > DEPRESSED_RTOL * p.scale():
        raise NotDepressedError(f"coefficient of x^(n-1) is {a[1]!r}, expected 0")
    alpha: Dict[int, float] = {}
    for k in range(1, 5):
        acc = sum(a[j] * alpha[k - j] for j in range(1, k) if k - j >= 1)
        if k <= n:
            acc += k * a[k]
        alpha[k] = -acc
    return PowerSums(n=n, a2=a[2], a3=a[3], a4=a[4], alpha=alpha)


def _neg_a2(ps: PowerSums, scale: float) -> float:
    if ps.a2 > DEPRESSED_RTOL * scale**2:
        raise RealRootednessViolation(
            f"a_2 = {ps.a2!r} > 0: a depressed polynomial with real roots has a_2 <= 0"
        )
    return max(-ps.a2, 0.0)


def _proxy(ps: PowerSums, scale: float) -> float:
    v = ps.fourth_proxy
    if v < -DEPRESSED_RTOL * scale**4:
        raise RealRootednessViolation(f"a_2^2 - 2 a_4 = {v!r} < 0 is impossible for real roots")
    return max(v, 0.0)


def _scale_of(ps: PowerSums) -> float:
    return max(1.0, abs(ps.a2) ** 0.5, abs(ps.a3) ** (1 / 3), abs(ps.a4) ** 0.25)


def span_upper_nagy(ps: PowerSums) -> SpanBound:
    return SpanBound("nagy_upper", 2 * math.sqrt(_neg_a2(ps, _scale_of(ps))), Direction.UPPER)


def span_lower_popoviciu(ps: PowerSums) -> SpanBound:
    v = _neg_a2(ps, _scale_of(ps))
    return SpanBound("popoviciu_lower", 2 * math.sqrt(2 * v / ps.n), Direction.LOWER)


def span_fourth(ps: PowerSums) -> Tuple[SpanBound, SpanBound]:
    """Span bounds from ``a_2^2 - 2 a_4``; the lower one is reported only for ``n >= 5``."""
    v = _proxy(ps, _scale_of(ps))
    n = ps.n
    upper = SpanBound("fourth_upper", 2 * v**0.25, Direction.UPPER)
    value = (24 * v / n) ** 0.25
    if n < 5:
        lower = SpanBound("fourth_lower", value, Direction.LOWER, False, "requires n >= 5")
    else:
        lower = SpanBound("fourth_lower", value, Direction.LOWER)
    return lower, upper


def sixth_inner(ps: PowerSums) -> Tuple[float, float]:
    """The sixth-power lower-bound argument from coefficients and from moments."""
    n, a2, a3, a4 = ps.n, ps.a2, ps.a3, ps.a4
    from_coeffs = 432 / n**3 * (4 * (2 - n) * a2**3 - 9 * n * a3**2 + 8 * n * a2 * a4)
    m2, m3, m4 = ps.m2, ps.m3, ps.m4
    from_moments = 432 * (m2 * m4 - m2**3 - m3**2)
    return from_coeffs, from_moments


def span_lower_sixth(ps: PowerSums) -> SpanBound:
    inner, _ = sixth_inner(ps)
    note = None
    if inner < 0:
        note = f"inner expression {inner:.3g} clamped to 0"
        inner = 0.0
    value = inner ** (1 / 6)
    if ps.n < 5:
        return SpanBound("sixth_lower", value, Direction.LOWER, False, "requires n >= 5")
    return SpanBound("sixth_lower", value, Direction.LOWER, note=note)


def span_report(p, verify: bool = False) -> SpanReport:
    """All span bounds for ``p``; with ``verify`` also the exact span.

    Raises :class:`RealRootednessViolation` when the coefficients (or, with
    ``verify``, the Sturm count) rule out real roots, and
    :class:`BoundViolationError` if a verified bound misses the exact span.
    """
    p = _as_poly(p)
    if p.degree < 1:
        raise DegreeError("span needs degree >= 1")
    if p.degree == 1:
        note = "degree 1: span is 0"
        bounds = [
            SpanBound(name, 0.0, d, False, note)
            for name, d in (
                ("popoviciu_lower", Direction.LOWER),
                ("fourth_lower", Direction.LOWER),
                ("sixth_lower", Direction.LOWER),
                ("fourth_upper", Direction.UPPER),
                ("nagy_upper", Direction.UPPER),
            )
        ]
        return SpanReport(bounds, 0.0 if verify else None, -p.coefficients[1] + 0.0, None)
    q, shift = depress(p)
    ps = power_sums(q)
    low4, up4 = span_fourth(ps)
    bounds = [
        span_lower_popoviciu(ps),
        low4,
        span_lower_sixth(ps),
        up4,
        span_upper_nagy(ps),
    ]
    exact = None
    if verify:
        from .oracles.sturm import sturm_real_roots

        rs = sturm_real_roots(p)
        if not rs.real_rooted:
            raise RealRootednessViolation(f"only {rs.count} of {rs.degree} roots are real")
        exact = rs.span
    report = SpanReport(bounds, exact, shift, q)
    if verify:
        bad = report.violations()
        if bad:
            names = ", ".join(b.name for b in bad)
            raise BoundViolationError(f"bounds {names} miss exact span {exact!r}")
    return report
