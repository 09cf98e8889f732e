"""Independent reference computations used to check the bounds.

Nothing here shares arithmetic with the bound evaluators: eigenvalues come
from cyclic Jacobi rotations and polynomial roots from Sturm-chain isolation.
"""

from .jacobi import Spectrum, exact_spread, hermitian_eigenvalues, jacobi_eigenvalues
from .sturm import RootSet, exact_span, sturm_real_roots
from . import generators

__all__ = [
    "Spectrum",
    "RootSet",
    "jacobi_eigenvalues",
    "hermitian_eigenvalues",
    "exact_spread",
    "sturm_real_roots",
    "exact_span",
    "generators",
]
