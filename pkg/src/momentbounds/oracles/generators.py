"""Seeded random instances for soundness fuzzing.

Instance ``i`` of a stream depends only on ``(seed, i)``, so a counterexample
can be reproduced from its seed and index alone and parallel workers can
split a stream by index range.
"""

from __future__ import annotations

import itertools
from typing import Iterator, List, Tuple

import numpy as np

from ..errors import InputError
from ..moments import Sample

_SAMPLE, _MATRIX, _POLY = 1, 2, 3

MIN_ROOT_SEPARATION = 0.25


def _rng(seed: int, stream: int, index: int) -> np.random.Generator:
    if seed < 0 or index < 0:
        raise InputError("seed and index must be non-negative")
    return np.random.default_rng([seed, stream, index])


def sample_instance(seed: int, index: int) -> Sample:
    """Sample with ``1..12`` points, mixed uniform and random weights.

    Points are drawn from a random sub-interval of ``[-3, 7]``; some
    instances put atoms on the endpoints or widen the support interval
    beyond the data.
    """
    rng = _rng(seed, _SAMPLE, index)
    n = int(rng.integers(1, 13))
    lo, hi = np.sort(rng.uniform(-3.0, 7.0, 2))
    mode = rng.random()
    if mode < 0.2:
        pts = rng.choice([lo, hi, 0.5 * (lo + hi)], n)
    elif mode < 0.3:
        pts = rng.choice([lo, hi], n)
    else:
        pts = rng.uniform(lo, hi, n)
    if rng.random() < 0.5:
        weights = None
    else:
        w = rng.random(n) + 1e-3
        weights = w / w.sum()
    interval = None
    if rng.random() < 0.3:
        interval = (float(min(pts)) - rng.random(), float(max(pts)) + rng.random())
    return Sample.from_points(pts.tolist(), weights, interval, renormalize=True)


def symmetric_instance(seed: int, index: int) -> np.ndarray:
    """Real symmetric ``n x n`` matrix, ``n`` in ``2..8``, entries in ``[-5, 5]``."""
    rng = _rng(seed, _MATRIX, index)
    n = int(rng.integers(2, 9))
    g = rng.uniform(-5.0, 5.0, (n, n))
    return (g + g.T) / 2


def expand_roots(roots) -> List[float]:
    """Monic coefficients (highest degree first) of ``prod (x - r)``."""
    coeffs = [1.0]
    for r in roots:
        nxt = coeffs + [0.0]
        for k in range(1, len(nxt)):
            nxt[k] -= r * coeffs[k - 1]
        coeffs = nxt
    return coeffs


def real_rooted_instance(seed: int, index: int) -> Tuple[List[float], List[float]]:
    """``(coefficients, sorted roots)`` for degree ``2..8`` with roots in ``[-10, 10]``.

    Roots are redrawn until pairwise separated by ``MIN_ROOT_SEPARATION``
    so that recovered roots are well conditioned in double precision.
    """
    rng = _rng(seed, _POLY, index)
    degree = int(rng.integers(2, 9))
    while True:
        roots = np.sort(rng.uniform(-10.0, 10.0, degree))
        if np.min(np.diff(roots)) >= MIN_ROOT_SEPARATION:
            break
    roots = roots.tolist()
    return expand_roots(roots), roots


def samples(seed: int) -> Iterator[Sample]:
    return (sample_instance(seed, i) for i in itertools.count())


def symmetric_matrices(seed: int) -> Iterator[np.ndarray]:
    return (symmetric_instance(seed, i) for i in itertools.count())


def real_rooted_polynomials(seed: int) -> Iterator[Tuple[List[float], List[float]]]:
    return (real_rooted_instance(seed, i) for i in itertools.count())
