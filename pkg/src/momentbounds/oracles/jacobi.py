"""Cyclic Jacobi eigenvalue iteration for real symmetric matrices."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from ..errors import ConvergenceError, NotApplicableError

MAX_SWEEPS = 100
SYMMETRY_ATOL = 1e-12


@dataclass(frozen=True)
class Spectrum:
    eigenvalues: Tuple[float, ...]
    iterations: int
    offdiag_residual: float

    @property
    def spread(self) -> float:
        return self.eigenvalues[-1] - self.eigenvalues[0]


def _entries(A) -> np.ndarray:
    return np.asarray(getattr(A, "entries", A))


def _offdiag_norm(a: np.ndarray) -> float:
    off = a[~np.eye(a.shape[0], dtype=bool)]
    return math.sqrt(float(np.sum(off * off)))


def jacobi_eigenvalues(A, tol: Optional[float] = None) -> Spectrum:
    """Eigenvalues of a real symmetric matrix by cyclic Jacobi sweeps.

    Iterates until the off-diagonal Frobenius norm is at most ``tol``
    (default ``1e-12`` times the Frobenius norm of ``A``).
    """
    raw = _entries(A)
    if np.iscomplexobj(raw):
        if np.any(raw.imag != 0):
            raise NotApplicableError("Jacobi oracle needs a real matrix")
        raw = raw.real
    a = np.array(raw, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NotApplicableError("Jacobi oracle needs a square matrix")
    if np.any(np.abs(a - a.T) > SYMMETRY_ATOL):
        raise NotApplicableError("Jacobi oracle needs a symmetric matrix")
    a = (a + a.T) / 2
    n = a.shape[0]
    scale = math.sqrt(float(np.sum(a * a)))
    if tol is None:
        tol = 1e-12 * scale

    off = _offdiag_norm(a) if n > 1 else 0.0
    sweeps = 0
    while off > tol:
        if sweeps >= MAX_SWEEPS:
            raise ConvergenceError(
                f"Jacobi did not converge in {MAX_SWEEPS} sweeps", residual=off
            )
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                diff = a[q, q] - a[p, p]
                if abs(diff) > 1e150 * abs(apq):
                    # small-angle limit of t = 1/(2 tau), without overflowing tau
                    t = apq / diff
                else:
                    tau = diff / (2.0 * apq)
                    t = math.copysign(1.0, tau) / (abs(tau) + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = a[q, p] = 0.0
        off = _offdiag_norm(a)
    return Spectrum(tuple(sorted(float(x) for x in np.diag(a))), sweeps, off)


def hermitian_eigenvalues(A, tol: Optional[float] = None) -> Tuple[float, ...]:
    """Eigenvalues of a Hermitian matrix.

    Complex input ``X + iY`` is embedded as the real symmetric matrix
    ``[[X, -Y], [Y, X]]``, whose spectrum is that of ``A`` with every
    eigenvalue doubled.
    """
    raw = _entries(A)
    if not np.iscomplexobj(raw) or np.all(raw.imag == 0):
        return jacobi_eigenvalues(np.real(raw), tol).eigenvalues
    if np.any(np.abs(raw - raw.conj().T) > SYMMETRY_ATOL):
        raise NotApplicableError("matrix is not Hermitian")
    x, y = raw.real, raw.imag
    big = np.block([[x, -y], [y, x]])
    ev = jacobi_eigenvalues(big, tol).eigenvalues
    return ev[::2]


def exact_spread(A) -> float:
    """``max lambda - min lambda`` of a Hermitian matrix via the Jacobi oracle."""
    ev = hermitian_eigenvalues(A)
    return ev[-1] - ev[0]
