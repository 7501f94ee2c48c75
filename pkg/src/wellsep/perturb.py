"""Test-matrix families, off-diagonal perturbations and the interlacing check."""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .eigen import eig_symmetric
from .matrix import DenseMatrix, as_array

SEPARATIONS = ("linear", "quadratic")


@dataclass(frozen=True)
class PerturbSpec:
    kind: str = "offdiag_scale"
    factor: float = 0.5
    t: float = 1.0
    seed: int = 0

    def __post_init__(self):
        if self.kind not in ("offdiag_scale", "structured_S"):
            raise ValueError(f"unknown perturbation kind {self.kind!r}")
        if self.kind == "offdiag_scale" and not 0.0 <= self.factor <= 1.0:
            raise ValueError("offdiag_scale factor must lie in [0, 1]")
        if self.kind == "structured_S" and self.t < 0:
            raise ValueError("t must be nonnegative")

    def apply(self, A):
        if self.kind == "offdiag_scale":
            return truncate_offdiag(A, self.factor)
        a = as_array(A)
        s = gen_structured_S(a.shape[0], self.seed)
        return DenseMatrix(a + self.t * s.entries, A.symmetry if isinstance(A, DenseMatrix) else "general")


@dataclass(frozen=True)
class InterlaceResult:
    base_eigs: np.ndarray
    pert_eigs: np.ndarray
    first_violation: Optional[int] = None

    @property
    def interlaced(self):
        return self.first_violation is None


def _diagonal(n, sep):
    if sep not in SEPARATIONS:
        raise ValueError(f"sep must be one of {SEPARATIONS}, got {sep!r}")
    step = n if sep == "linear" else n * n
    return step * np.arange(1, n + 1, dtype=float)


def _radius_cap(diag):
    return 0.4 * min(np.min(np.diff(np.sort(diag))), np.min(np.abs(diag)))


def _check_n(n):
    if n < 2:
        raise ValueError("n must be at least 2")


def gen_separated_symmetric(n, sep="linear", seed=0):
    """Symmetric matrix with diagonal ``i*n`` (or ``i*n**2``) and Gaussian
    off-diagonal entries, scaled so every row radius is at most 40% of both
    the smallest diagonal gap and the smallest diagonal entry.

    One common scale factor is used for all rows to keep exact symmetry.
    """
    _check_n(n)
    rng = np.random.default_rng(seed)
    diag = _diagonal(n, sep)
    g = np.triu(rng.standard_normal((n, n)), 1)
    off = g + g.T
    worst = np.abs(off).sum(axis=1).max()
    cap = _radius_cap(diag)
    if worst > cap:
        off *= cap / worst
    return DenseMatrix(off + np.diag(diag), "symmetric")


def gen_hessenberg_positive(n, seed=0, sep="linear"):
    """Upper Hessenberg matrix with positive entries and disjoint row discs.

    Stored entries are uniform on (0, 1]; each row's off-diagonal part is
    rescaled to the same radius cap as :func:`gen_separated_symmetric`.
    """
    _check_n(n)
    rng = np.random.default_rng(seed)
    diag = _diagonal(n, sep)
    off = np.triu(1.0 - rng.random((n, n)), -1)
    np.fill_diagonal(off, 0.0)
    cap = _radius_cap(diag)
    rows = off.sum(axis=1)
    scale = np.where(rows > cap, cap / np.where(rows > 0, rows, 1.0), 1.0)
    off *= scale[:, None]
    return DenseMatrix(off + np.diag(diag), "general")


def truncate_offdiag(A, c):
    """Keep the diagonal, multiply every off-diagonal entry by ``c``."""
    if not 0.0 <= c <= 1.0:
        raise ValueError("c must lie in [0, 1]")
    a = as_array(A)
    b = c * a
    np.fill_diagonal(b, np.diag(a))
    sym = A.symmetry if isinstance(A, DenseMatrix) else "general"
    return DenseMatrix(b, sym)


def gen_structured_S(n, seed=0):
    """Symmetric perturbation with diagonal in [0.5, 1.5] and off-diagonal
    entries ``g/n`` (g Gaussian) clamped to ``[-1/n, 1/n]``."""
    _check_n(n)
    rng = np.random.default_rng(seed)
    g = np.triu(rng.standard_normal((n, n)), 1) / n
    g = np.clip(g, -1.0 / n, 1.0 / n)
    s = g + g.T
    s[np.diag_indices(n)] = rng.uniform(0.5, 1.5, n)
    return DenseMatrix(s, "symmetric")


def check_interlacing(A, S, t):
    """Do the sorted spectra of A and A + tS interlace, lam_1 <= mu_1 <= lam_2 <= ...?"""
    if t < 0:
        raise ValueError("t must be nonnegative")
    a = as_array(A)
    s = as_array(S)
    if a.shape != s.shape:
        raise ValueError("A and S must have the same shape")
    base = np.sort(eig_symmetric(a).eigenvalues.real)
    pert = np.sort(eig_symmetric(a + t * s).eigenvalues.real)
    slack = 1e-9 * (1.0 + np.linalg.norm(a))
    chain = np.empty(2 * len(base))
    chain[0::2] = base
    chain[1::2] = pert
    bad = np.nonzero(chain[:-1] > chain[1:] + slack)[0]
    first = int(bad[0] // 2) if bad.size else None
    return InterlaceResult(base, pert, first)
