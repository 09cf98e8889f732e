"""Real-root isolation with Sturm chains and bisection.

Every float coefficient is a dyadic rational, so the chain is built exactly:
coefficients are scaled to integers and the Euclidean remainders are kept
as primitive integer polynomials. Signs are then evaluated exactly at the
dyadic bisection points, which makes root counts and multiplicities exact
for the polynomial as given; only root locations are limited by ``width``.

Multiple roots come from the square-free cascade ``g_0 = p``,
``g_{k+1} = gcd(g_k, g_k')``: a real root of multiplicity ``m`` is a
distinct root of each ``g_k / g_{k+1}`` for ``k < m``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import List, Optional, Sequence, Tuple

from ..errors import ConvergenceError, DegreeError, InputError, RealRootednessViolation

Poly = List[float]
IntPoly = List[int]


@dataclass(frozen=True)
class RootSet:
    """Real roots of a polynomial; ``roots`` repeats each root by multiplicity."""

    roots: Tuple[float, ...]
    distinct: Tuple[float, ...]
    multiplicities: Tuple[int, ...]
    bracket_width: float
    degree: int

    @property
    def count(self) -> int:
        return len(self.roots)

    @property
    def real_rooted(self) -> bool:
        return self.count == self.degree

    @property
    def span(self) -> float:
        return self.roots[-1] - self.roots[0] if self.roots else 0.0


def _coeffs(p) -> Poly:
    c = [float(x) for x in getattr(p, "coefficients", p)]
    while c and c[0] == 0.0:
        c.pop(0)
    if not c:
        raise InputError("zero polynomial")
    if not all(math.isfinite(x) for x in c):
        raise InputError("polynomial has non-finite coefficients")
    return c


def _horner(p: Sequence[float], x: float) -> float:
    acc = 0.0
    for c in p:
        acc = acc * x + c
    return acc


def root_radius(p: Poly) -> float:
    """Fujiwara bound: every complex root has modulus at most this."""
    lead = p[0]
    q = [c / lead for c in p]
    n = len(q) - 1
    if n == 0:
        return 0.0
    terms = [abs(q[k]) ** (1.0 / k) for k in range(1, n)]
    terms.append((abs(q[n]) / 2) ** (1.0 / n))
    return 2.0 * max(terms)


# exact integer polynomial arithmetic, highest degree first

def _primitive(p: Sequence[Fraction]) -> IntPoly:
    """Positive multiple of ``p`` with coprime integer coefficients."""
    den = reduce(math.lcm, (c.denominator for c in p), 1)
    ints = [int(c * den) for c in p]
    g = reduce(math.gcd, ints, 0) or 1
    return [c // g for c in ints]


def _ideriv(p: IntPoly) -> IntPoly:
    n = len(p) - 1
    return [c * (n - i) for i, c in enumerate(p[:-1])] or [0]


def _irem(a: IntPoly, b: IntPoly) -> List[Fraction]:
    r = [Fraction(c) for c in a]
    db = len(b) - 1
    for i in range(len(r) - db):
        coef = r[i] / b[0]
        if coef:
            for j in range(db + 1):
                r[i + j] -= coef * b[j]
    r = r[len(r) - db:] if db > 0 else []
    while r and r[0] == 0:
        r.pop(0)
    return r


def _iquo(a: IntPoly, b: IntPoly) -> IntPoly:
    """Exact quotient ``a / b`` when ``b`` divides ``a``."""
    r = [Fraction(c) for c in a]
    db = len(b) - 1
    q = []
    for i in range(len(r) - db):
        coef = r[i] / b[0]
        q.append(coef)
        for j in range(db + 1):
            r[i + j] -= coef * b[j]
    return _primitive(q)


def _igcd(a: IntPoly, b: IntPoly) -> IntPoly:
    while len(b) > 1:
        r = _irem(a, b)
        if not r:
            return b
        a, b = b, _primitive(r)
    return [1]


def _sturm_chain(f: IntPoly) -> List[IntPoly]:
    chain = [f, _primitive([Fraction(c) for c in _ideriv(f)])]
    while len(chain[-1]) > 1:
        r = _irem(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-c for c in _primitive(r)])
    return chain


def _sign_at(p: IntPoly, x: float) -> int:
    """Exact sign of ``p(x)`` for a float ``x``."""
    num, den = x.as_integer_ratio()
    # den^n p(num/den) = sum c_i num^(n-i) den^i, and den > 0
    acc = 0
    scale = 1
    for c in p:
        acc = acc * num + c * scale
        scale *= den
    return (acc > 0) - (acc < 0)


def _variations(chain: List[IntPoly], x: float) -> int:
    signs = [s for s in (_sign_at(p, x) for p in chain) if s]
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def _variations_at_infinity(chain: List[IntPoly], positive: bool) -> int:
    signs = []
    for p in chain:
        s = p[0] > 0
        if not positive and (len(p) - 1) % 2 == 1:
            s = not s
        signs.append(s)
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def _refine(f: IntPoly, lo: float, hi: float, width: float) -> float:
    """Bisect ``(lo, hi]``, holding exactly one simple root of ``f``, to ``width``."""
    s_hi = _sign_at(f, hi)
    if s_hi == 0:
        return hi
    while hi - lo > width:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        s = _sign_at(f, mid)
        if s == 0:
            return mid
        if s == s_hi:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def _isolate(f: IntPoly, radius: float, width: float) -> List[float]:
    """Distinct real roots of the square-free integer polynomial ``f``."""
    if len(f) == 1:
        return []
    chain = _sturm_chain(f)
    total = _variations_at_infinity(chain, False) - _variations_at_infinity(chain, True)
    bound = 1.01 * radius + 1.0
    while _variations(chain, -bound) - _variations(chain, bound) != total:
        bound *= 2
    stack = [(-bound, bound, total)]
    roots = []
    while stack:
        lo, hi, cnt = stack.pop()
        if cnt <= 0:
            continue
        if cnt == 1:
            roots.append(_refine(f, lo, hi, width))
            continue
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            raise ConvergenceError("roots closer than float resolution")
        v_lo, v_mid, v_hi = (_variations(chain, x) for x in (lo, mid, hi))
        stack.append((mid, hi, v_mid - v_hi))
        stack.append((lo, mid, v_lo - v_mid))
    if len(roots) != total:
        raise ConvergenceError("Sturm isolation gave an inconsistent root count")
    return sorted(roots)


def _to_int(c: Poly) -> IntPoly:
    return _primitive([Fraction(x) for x in c])


def sturm_real_roots(p, width: Optional[float] = None) -> RootSet:
    """All real roots of ``p`` with multiplicities, bisected to ``width``.

    ``width`` defaults to ``1e-12 * max(1, R)`` with ``R`` the Fujiwara root
    radius. Counts and multiplicities are exact for the given coefficients.
    """
    c = _coeffs(p)
    n = len(c) - 1
    if n < 1:
        raise DegreeError("constant polynomial has no roots")
    radius = root_radius(c)
    if width is None:
        width = 1e-12 * max(1.0, radius)
    cascade = [_to_int(c)]
    while len(cascade[-1]) > 1:
        g = cascade[-1]
        cascade.append(_igcd(g, _primitive([Fraction(x) for x in _ideriv(g)])))
    levels = [_isolate(_iquo(g, g_next), radius, width) for g, g_next in zip(cascade, cascade[1:])]
    distinct = levels[0]
    mult = [1] * len(distinct)
    for roots in levels[1:]:
        for r in roots:
            k = min(range(len(distinct)), key=lambda i: abs(distinct[i] - r))
            mult[k] += 1
    expanded = tuple(r for r, m in zip(distinct, mult) for _ in range(m))
    return RootSet(expanded, tuple(distinct), tuple(mult), width, n)


def exact_span(p) -> float:
    """Largest minus smallest root of a real-rooted polynomial."""
    rs = sturm_real_roots(p)
    if not rs.real_rooted:
        raise RealRootednessViolation(
            f"only {rs.count} of {rs.degree} roots are real"
        )
    return rs.span
