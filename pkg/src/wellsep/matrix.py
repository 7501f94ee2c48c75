"""Dense square matrix container shared by every module."""

from dataclasses import dataclass

import numpy as np

SYMMETRY_TAGS = ("general", "symmetric")


@dataclass(frozen=True, eq=False)
class DenseMatrix:
    """Immutable dense square matrix.

    Real input is kept as float64 and complex input as complex128. The
    ``symmetry`` tag is checked exactly on construction.
    """

    entries: np.ndarray
    symmetry: str = "general"

    def __post_init__(self):
        arr = np.array(self.entries, copy=True)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
            raise ValueError(f"expected a nonempty square matrix, got shape {arr.shape}")
        if np.iscomplexobj(arr):
            arr = arr.astype(np.complex128)
        else:
            arr = arr.astype(np.float64)
        if self.symmetry not in SYMMETRY_TAGS:
            raise ValueError(f"unknown symmetry tag {self.symmetry!r}")
        if self.symmetry == "symmetric" and not np.array_equal(arr, arr.T):
            raise ValueError("matrix tagged symmetric is not exactly symmetric")
        arr.setflags(write=False)
        object.__setattr__(self, "entries", arr)

    @property
    def n(self):
        return self.entries.shape[0]

    @property
    def is_real(self):
        return not np.iscomplexobj(self.entries)

    @property
    def diagonal(self):
        return np.diag(self.entries)

    def copy(self):
        """Writable ndarray copy of the entries."""
        return self.entries.copy()

    def __array__(self, dtype=None, copy=None):
        if dtype is None:
            return self.entries
        return self.entries.astype(dtype)

    def __eq__(self, other):
        if not isinstance(other, DenseMatrix):
            return NotImplemented
        return self.symmetry == other.symmetry and np.array_equal(self.entries, other.entries)

    __hash__ = None


def as_array(A):
    """Return the entries of ``A`` (DenseMatrix or array_like) as a square ndarray."""
    if isinstance(A, DenseMatrix):
        return A.entries
    arr = np.asarray(A)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {arr.shape}")
    if not np.iscomplexobj(arr):
        arr = arr.astype(np.float64, copy=False)
    return arr


def as_dense(A, symmetry=None):
    """Coerce to DenseMatrix; tag symmetric automatically when exactly symmetric."""
    if isinstance(A, DenseMatrix):
        return A
    arr = as_array(A)
    if symmetry is None:
        symmetry = "symmetric" if np.array_equal(arr, arr.T) else "general"
    return DenseMatrix(arr, symmetry)
