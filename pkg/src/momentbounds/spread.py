"""Bounds on the eigenvalue spread ``max |lambda_i - lambda_j|`` of a matrix.

Lower bounds need a Hermitian matrix and are built from a positive unital
linear functional ``phi`` applied to powers of ``B = A - phi(A) I``. Upper
bounds use ``B = A - (tr A / n) I`` and hold for any square matrix.

Functional indices are 1-based, matching the usual ``a_ii`` notation.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator, List, NamedTuple, Optional, Sequence

import numpy as np

from .errors import InputError, NotApplicableError, PreconditionError
from .inequalities import BoundReport, Direction

HERMITIAN_ATOL = 1e-12


class SquareMatrix:
    """Immutable dense complex ``n x n`` matrix."""

    __slots__ = ("_a",)

    def __init__(self, entries):
        a = np.array(entries, dtype=complex)
        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
            raise InputError(f"expected a non-empty square matrix, got shape {a.shape}")
        if not np.all(np.isfinite(a)):
            raise InputError("matrix has non-finite entries")
        a.setflags(write=False)
        self._a = a

    @property
    def entries(self) -> np.ndarray:
        return self._a

    @property
    def dim(self) -> int:
        return self._a.shape[0]

    def __getitem__(self, idx):
        return self._a[idx]

    def __repr__(self):
        return f"SquareMatrix({self._a.tolist()!r})"

    @property
    def is_hermitian(self) -> bool:
        return bool(np.all(np.abs(self._a - self._a.conj().T) <= HERMITIAN_ATOL))

    @property
    def is_real(self) -> bool:
        return bool(np.all(self._a.imag == 0))

    def trace(self) -> complex:
        return complex(np.trace(self._a))

    def shifted(self, c: float) -> "SquareMatrix":
        return SquareMatrix(self._a + c * np.eye(self.dim))


@dataclass(frozen=True)
class Functional:
    """``trace`` (``tr A / n``), ``diag`` (``a_ii``) or ``pair`` (``(a_ii + a_jj) / 2``)."""

    kind: str
    i: Optional[int] = None
    j: Optional[int] = None

    def __post_init__(self):
        if self.kind == "trace":
            if self.i is not None or self.j is not None:
                raise InputError("trace functional takes no indices")
        elif self.kind == "diag":
            if self.i is None or self.i < 1 or self.j is not None:
                raise InputError("diag functional needs one index >= 1")
        elif self.kind == "pair":
            if self.i is None or self.j is None or min(self.i, self.j) < 1:
                raise InputError("pair functional needs two indices >= 1")
            if self.i == self.j:
                raise InputError("pair functional needs distinct indices")
        else:
            raise InputError(f"unknown functional kind {self.kind!r}")

    @classmethod
    def trace(cls) -> "Functional":
        return cls("trace")

    @classmethod
    def diag(cls, i: int) -> "Functional":
        return cls("diag", i)

    @classmethod
    def pair(cls, i: int, j: int) -> "Functional":
        return cls("pair", i, j)

    @property
    def label(self) -> str:
        if self.kind == "trace":
            return "trace"
        if self.kind == "diag":
            return f"diag({self.i})"
        return f"pair({self.i},{self.j})"

    def weights(self, n: int) -> np.ndarray:
        """Diagonal weights ``w`` with ``phi(X) = sum_k w_k X_kk``."""
        if self.kind == "trace":
            return np.full(n, 1.0 / n)
        idx = [self.i] if self.kind == "diag" else [self.i, self.j]
        if max(idx) > n:
            raise InputError(f"functional {self.label} out of range for n={n}")
        w = np.zeros(n)
        for k in idx:
            w[k - 1] = 1.0 / len(idx)
        return w


def functionals_for(n: int) -> Iterator[Functional]:
    yield Functional.trace()
    for i in range(1, n + 1):
        yield Functional.diag(i)
    for i, j in itertools.combinations(range(1, n + 1), 2):
        yield Functional.pair(i, j)


@dataclass(frozen=True)
class SpreadEstimate:
    name: str
    value: float
    direction: Direction
    functional: Optional[Functional] = None
    parameter: Optional[int] = None
    note: Optional[str] = None

    @property
    def label(self) -> str:
        parts = [self.name]
        if self.functional is not None:
            parts.append(self.functional.label)
        if self.parameter is not None:
            parts.append(f"r={self.parameter}")
        return " ".join(parts)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "direction": self.direction.value,
            "value": self.value,
            "functional": None if self.functional is None else self.functional.label,
            "parameter": self.parameter,
            "note": self.note,
        }


def _as_matrix(A) -> SquareMatrix:
    return A if isinstance(A, SquareMatrix) else SquareMatrix(A)


def _require_hermitian(A: SquareMatrix):
    if not A.is_hermitian:
        raise NotApplicableError("functional-based spread bounds need a Hermitian matrix")


def apply_functional(phi: Functional, A) -> complex:
    A = _as_matrix(A)
    return complex(np.dot(phi.weights(A.dim), np.diag(A.entries)))


def _centered(phi: Functional, A: SquareMatrix) -> np.ndarray:
    return A.entries - apply_functional(phi, A) * np.eye(A.dim)


def _centered_powers(phi: Functional, A: SquareMatrix):
    """``phi(B^2), phi(B^3), phi(B^4)`` from dense products."""
    _require_hermitian(A)
    w = phi.weights(A.dim)
    b = _centered(phi, A)
    b2 = b @ b
    b3 = b2 @ b
    b4 = b2 @ b2
    return tuple(float(np.dot(w, np.diag(p)).real) for p in (b2, b3, b4))


def centered_power(phi: Functional, A, r: int) -> float:
    """``phi(B^r)`` with ``B = A - phi(A) I``, for Hermitian ``A`` and ``r`` in 1..4."""
    A = _as_matrix(A)
    _require_hermitian(A)
    if r not in (1, 2, 3, 4):
        raise InputError("r must be one of 1, 2, 3, 4")
    if r == 1:
        return 0.0
    return _centered_powers(phi, A)[r - 2]


def _offdiag_row_mass(A: SquareMatrix) -> np.ndarray:
    sq = np.abs(A.entries) ** 2
    return sq.sum(axis=1) - np.diag(sq)


def lower_mirsky_pairs(A) -> SpreadEstimate:
    A = _as_matrix(A)
    _require_hermitian(A)
    if A.dim < 2:
        raise NotApplicableError("needs n >= 2")
    d = np.diag(A.entries).real
    best = 0.0
    for i, j in itertools.combinations(range(A.dim), 2):
        best = max(best, (d[i] - d[j]) ** 2 + 4 * abs(A[i, j]) ** 2)
    return SpreadEstimate("mirsky_pairs", math.sqrt(best), Direction.LOWER)


def lower_barnes_hoffman(A) -> SpreadEstimate:
    A = _as_matrix(A)
    _require_hermitian(A)
    if A.dim < 2:
        raise NotApplicableError("needs n >= 2")
    d = np.diag(A.entries).real
    rows = _offdiag_row_mass(A)
    best = max(
        (d[i] - d[j]) ** 2 + 2 * rows[i] + 2 * rows[j]
        for i in range(A.dim)
        for j in range(A.dim)
    )
    return SpreadEstimate("barnes_hoffman", math.sqrt(best), Direction.LOWER)


def lower_offdiag(A) -> SpreadEstimate:
    A = _as_matrix(A)
    _require_hermitian(A)
    return SpreadEstimate("offdiag", 2 * math.sqrt(max(_offdiag_row_mass(A))), Direction.LOWER)


def lower_variance(phi: Functional, A) -> SpreadEstimate:
    A = _as_matrix(A)
    p2 = centered_power(phi, A, 2)
    return SpreadEstimate("variance", 2 * math.sqrt(max(p2, 0.0)), Direction.LOWER, phi)


def lower_fourth(phi: Functional, A) -> SpreadEstimate:
    A = _as_matrix(A)
    p4 = centered_power(phi, A, 4)
    return SpreadEstimate("fourth", (12 * max(p4, 0.0)) ** 0.25, Direction.LOWER, phi)


def lower_sixth_det(phi: Functional, A) -> SpreadEstimate:
    """``(432 (phi(B^2) phi(B^4) - phi(B^2)^3 - phi(B^3)^2))^(1/6)``, clamped at 0."""
    A = _as_matrix(A)
    p2, p3, p4 = _centered_powers(phi, A)
    inner = p2 * p4 - p2**3 - p3**2
    note = None
    if inner < 0:
        note = f"inner expression {inner:.3g} clamped to 0"
        inner = 0.0
    return SpreadEstimate("sixth_det", (432 * inner) ** (1 / 6), Direction.LOWER, phi, note=note)


def upper_trace_power(A, r: int) -> SpreadEstimate:
    """``(2^(2r-1) tr(B^r (B*)^r))^(1/(2r))``; valid for any square matrix."""
    A = _as_matrix(A)
    if r < 1:
        raise InputError("r must be a positive integer")
    n = A.dim
    b = A.entries - (A.trace() / n) * np.eye(n)
    br = np.linalg.matrix_power(b, r)
    t = float(np.trace(br @ br.conj().T).real)
    value = (2 ** (2 * r - 1) * max(t, 0.0)) ** (1 / (2 * r))
    return SpreadEstimate("trace_power", value, Direction.UPPER, parameter=r)


def hankel_psd_bound(phi: Functional, A, M_cap: float, verify: bool = False) -> BoundReport:
    """``phi(A) phi(A^3) - phi(A^2)^2`` against ``M_cap^4 / 27`` for ``0 <= A <= M_cap I``.

    With ``verify`` the spectrum is checked by the eigenvalue oracle and a
    :class:`PreconditionError` is raised if it leaves ``[0, M_cap]``.
    """
    A = _as_matrix(A)
    _require_hermitian(A)
    if verify:
        from .oracles.jacobi import hermitian_eigenvalues

        ev = hermitian_eigenvalues(A)
        tol = 1e-9 * max(1.0, abs(M_cap))
        if ev[0] < -tol or ev[-1] > M_cap + tol:
            raise PreconditionError(
                f"spectrum [{ev[0]:.6g}, {ev[-1]:.6g}] not inside [0, {M_cap}]"
            )
    w = phi.weights(A.dim)
    a = A.entries
    a2 = a @ a
    a3 = a2 @ a
    f1, f2, f3 = (float(np.dot(w, np.diag(p)).real) for p in (a, a2, a3))
    lhs = f1 * f3 - f2**2
    return BoundReport("hankel_psd_upper", lhs, M_cap**4 / 27, Direction.UPPER, note=phi.label)


class BestBounds(NamedTuple):
    lower: Optional[SpreadEstimate]
    upper: SpreadEstimate
    all: List[SpreadEstimate]


def all_estimates(A, powers: Sequence[int] = (1, 2, 3)) -> List[SpreadEstimate]:
    A = _as_matrix(A)
    out: List[SpreadEstimate] = []
    if A.is_hermitian:
        if A.dim >= 2:
            out.append(lower_mirsky_pairs(A))
            out.append(lower_barnes_hoffman(A))
        out.append(lower_offdiag(A))
        for phi in functionals_for(A.dim):
            out.append(lower_variance(phi, A))
            out.append(lower_fourth(phi, A))
            out.append(lower_sixth_det(phi, A))
    for r in powers:
        out.append(upper_trace_power(A, r))
    return out


def best_bounds(A) -> BestBounds:
    """Largest lower and smallest upper estimate over all functionals and ``r`` in 1..3."""
    est = all_estimates(A)
    lowers = [e for e in est if e.direction is Direction.LOWER]
    uppers = [e for e in est if e.direction is Direction.UPPER]
    lower = max(lowers, key=lambda e: e.value) if lowers else None
    upper = min(uppers, key=lambda e: e.value)
    return BestBounds(lower, upper, est)
