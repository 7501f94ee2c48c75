"""Gershgorin discs and separation diagnostics."""

from dataclasses import dataclass
import math

import numpy as np

from .matrix import as_array

RADIUS_MODES = ("row", "col", "min")


@dataclass(frozen=True)
class GershgorinDisc:
    index: int
    center: complex
    row_radius: float
    col_radius: float

    @property
    def min_radius(self):
        return min(self.row_radius, self.col_radius)

    def radius(self, mode="row"):
        if mode == "row":
            return self.row_radius
        if mode == "col":
            return self.col_radius
        if mode == "min":
            return self.min_radius
        raise ValueError(f"unknown radius mode {mode!r}")

    def contains(self, z, mode="row", tol=0.0):
        return abs(z - self.center) <= self.radius(mode) + tol


@dataclass(frozen=True)
class SeparationReport:
    discs: tuple
    radius_mode: str
    pairwise_gap: float
    disjoint: bool
    unit_circle_clear: bool
    origin_clear: bool
    sep_constant_linear: float
    sep_constant_quadratic: float
    max_radius: float

    @property
    def n(self):
        return len(self.discs)

    @property
    def centers(self):
        return np.array([d.center for d in self.discs], dtype=complex)

    @property
    def radii(self):
        return np.array([d.radius(self.radius_mode) for d in self.discs])


def _check_mode(mode):
    if mode not in RADIUS_MODES:
        raise ValueError(f"radius mode must be one of {RADIUS_MODES}, got {mode!r}")


def compute_discs(A, mode="row"):
    """One disc per row of ``A``.

    All three radii are stored; ``mode`` is validated here and only matters
    to downstream consumers (see :func:`separation_report`).
    """
    _check_mode(mode)
    a = as_array(A)
    mag = np.abs(a)
    np.fill_diagonal(mag, 0.0)
    row = mag.sum(axis=1)
    col = mag.sum(axis=0)
    centers = np.diag(a)
    return [
        GershgorinDisc(i, complex(centers[i]), float(row[i]), float(col[i]))
        for i in range(a.shape[0])
    ]


def separation_report(discs, radius_mode="row"):
    _check_mode(radius_mode)
    discs = tuple(discs)
    if not discs:
        raise ValueError("separation_report needs at least one disc")
    n = len(discs)
    centers = np.array([d.center for d in discs], dtype=complex)
    radii = np.array([d.radius(radius_mode) for d in discs])
    absc = np.abs(centers)

    if n == 1:
        gap = math.inf
        min_dist = math.inf
    else:
        dist = np.abs(centers[:, None] - centers[None, :])
        off = ~np.eye(n, dtype=bool)
        gap = float(np.min((dist - radii[:, None] - radii[None, :])[off]))
        min_dist = float(np.min(dist[off]))

    return SeparationReport(
        discs=discs,
        radius_mode=radius_mode,
        pairwise_gap=gap,
        disjoint=gap > 0,
        unit_circle_clear=bool(np.all(np.abs(absc - 1.0) > radii)),
        origin_clear=bool(np.all(absc > radii)),
        sep_constant_linear=min_dist / n,
        sep_constant_quadratic=min_dist / n**2,
        max_radius=float(radii.max()),
    )


def classify_separation(report):
    """Heuristic separation order: "quadratic", "linear" or "none".

    Asymptotic orders cannot be read off one matrix, so this thresholds the
    separation constants: the minimum center gap divided by n (or n**2) must
    be at least 1, and no radius may exceed the linear constant.
    """
    if report.max_radius > report.sep_constant_linear:
        return "none"
    if report.sep_constant_quadratic >= 1:
        return "quadratic"
    if report.sep_constant_linear >= 1:
        return "linear"
    return "none"


def in_union(z, discs, mode="row", tol=0.0):
    """True when ``z`` lies in at least one disc (with slack ``tol``)."""
    return any(d.contains(z, mode, tol) for d in discs)
