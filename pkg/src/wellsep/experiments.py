"""End-to-end pipelines: error bounds, eigenvector trend, interlacing and
condition-number runs. Each returns plain records that map onto the
result-table schemas in :mod:`wellsep.mmio`."""

from dataclasses import dataclass
import logging
import math

import numpy as np

from . import bounds
from .eigen import eig_general, eig_symmetric, match_to_discs
from .errors import CoincidentCenter, DegenerateDisc, InvalidRegime
from .gershgorin import compute_discs, separation_report
from .matrix import as_array
from .mmio import ResultTable
from .perturb import (
    check_interlacing, gen_hessenberg_positive, gen_separated_symmetric, gen_structured_S, truncate_offdiag,
)

log = logging.getLogger(__name__)

ERROR_BOUNDS_COLUMNS = [
    ("eig_index", "index"), ("lambda", "complex"), ("rel_error", "real"),
    ("bound", "real"), ("approx_center_shifted", "real"),
]
EIGVEC_TREND_COLUMNS = [("entry_index", "index"), ("abs_entry", "real"), ("trend_value", "real")]
PERRON_TRACE_COLUMNS = [
    ("trial", "index"), ("start_kind", "string"), ("iteration", "index"), ("residual", "real"),
]


def solve(A):
    """Oracle spectrum: Jacobi for real symmetric input, QR otherwise."""
    a = as_array(A)
    if not np.iscomplexobj(a) and np.array_equal(a, a.T):
        return eig_symmetric(a)
    return eig_general(a)


@dataclass(frozen=True)
class BoundRecord:
    eig_index: int
    disc_index: int
    lam: complex
    lam_tilde: complex
    a: float
    r1: float
    r2: float
    rel_error: float
    bound: float
    shifted_center: float

    @property
    def holds(self):
        return self.rel_error <= self.bound

    @property
    def degenerate(self):
        return math.isnan(self.bound)


def error_bounds(A, c=0.5, radius_mode="row"):
    """Relative error of every eigenvalue of ``A`` against its counterpart in
    ``truncate_offdiag(A, c)``, with the disc-based bound for that pair.

    Pairs are formed through the Gershgorin disc each eigenvalue is matched
    to. Discs touching the origin give NaN bound fields.
    """
    a = as_array(A)
    b = truncate_offdiag(a, c)
    rep_a = separation_report(compute_discs(a), radius_mode)
    rep_b = separation_report(compute_discs(b), radius_mode)
    if not rep_a.disjoint:
        log.warning("discs of A are not disjoint in %s mode; pairing is by nearest disc",
                    radius_mode)
    spec_a = match_to_discs(solve(a), rep_a)
    spec_b = match_to_discs(solve(b), rep_b).by_disc()
    out = []
    for idx, pair in enumerate(spec_a.pairs):
        i = pair.disc_index
        disc = rep_a.discs[i]
        amag = abs(disc.center)
        r1 = disc.radius(radius_mode)
        r2 = rep_b.discs[i].radius(radius_mode)
        lam_t = spec_b[i].eigenvalue
        rel = bounds.relative_error(pair.eigenvalue, lam_t)
        try:
            region = bounds.error_region(amag, r1, r2)
            bnd, shifted = region.bound, region.shifted_center
        except DegenerateDisc:
            bnd = shifted = float("nan")
        out.append(BoundRecord(idx, i, pair.eigenvalue, lam_t, amag, r1, r2, rel, bnd, shifted))
    return out


def error_bounds_table(records, metadata=None):
    table = ResultTable("error_bounds", ERROR_BOUNDS_COLUMNS, metadata=dict(metadata or {}))
    for r in records:
        table.append(r.eig_index, r.lam, r.rel_error, r.bound, r.shifted_center)
    return table


def eigvec_trend(A, radius_mode="row", spectrum=None):
    """Entry magnitudes of the eigenvector for the largest-modulus eigenvalue,
    alongside the predicted cap ``r_i / |lam - a_i|``.

    Returns ``(lam, abs_entries, trend_values, inverse_gaps)``; coincident
    centers give NaN in the last two.
    """
    a = as_array(A)
    spectrum = spectrum if spectrum is not None else solve(a)
    k = int(np.argmax(np.abs(spectrum.eigenvalues)))
    pair = spectrum.pairs[k]
    discs = compute_discs(a)
    lam = pair.eigenvalue
    trend = np.empty(len(discs))
    inv_gap = np.empty(len(discs))
    for i, d in enumerate(discs):
        try:
            trend[i] = bounds.lemma_entry_bound(d.center, d.radius(radius_mode), lam)
            inv_gap[i] = 1.0 / abs(lam - d.center)
        except CoincidentCenter:
            trend[i] = inv_gap[i] = float("nan")
    return lam, np.abs(pair.eigenvector), trend, inv_gap


def eigvec_trend_table(A, radius_mode="row", metadata=None):
    lam, mags, trend, _ = eigvec_trend(A, radius_mode)
    meta = dict(metadata or {})
    meta["lambda"] = [lam.real, lam.imag]
    table = ResultTable("eigvec_trend", EIGVEC_TREND_COLUMNS, metadata=meta)
    for i, (m, t) in enumerate(zip(mags, trend)):
        table.append(i, float(m), float(t))
    return table


def entry_bound_violations(A, spectrum=None, slack=1e-10):
    """Count off-disc eigenvector entries above ``r_i / |lam - a_i| + slack``
    (row radii). Returns ``(violations, checked)``."""
    a = as_array(A)
    spectrum = spectrum if spectrum is not None else solve(a)
    discs = compute_discs(a)
    bad = checked = 0
    for pair in spectrum.pairs:
        for i, d in enumerate(discs):
            if i == pair.disc_index:
                continue
            cap = bounds.lemma_entry_bound(d.center, d.row_radius, pair.eigenvalue)
            checked += 1
            if abs(pair.eigenvector[i]) > cap + slack:
                bad += 1
    return bad, checked


@dataclass(frozen=True)
class ConditionRecord:
    n: int
    k_est: float
    kappa_computed: float
    kappa_bound: float
    delta_norm: float
    bf_bound: float
    max_eig_shift: float
    status: str

    @property
    def valid(self):
        return self.status == "ok"


CONDITION_COLUMNS = [
    ("trial", "index"), ("n", "index"), ("k_est", "real"), ("kappa_computed", "real"),
    ("kappa_bound", "real"), ("delta_norm", "real"), ("bf_bound", "real"),
    ("max_eig_shift", "real"), ("status", "string"),
]


def condition_check(A, delta):
    """Compare the computed eigenvector condition number and eigenvalue
    shifts under ``A + delta`` with their bounds."""
    a = as_array(A)
    d = as_array(delta)
    n = a.shape[0]
    spec = solve(a)
    k = bounds.estimate_k(spec)
    kappa = bounds.condition_number(spec.eigenvectors)
    dn = bounds.spectral_norm(d)
    pert = solve(a + d).by_disc()
    shift = max(abs(p.eigenvalue - pert[p.disc_index].eigenvalue) for p in spec.pairs)
    try:
        cb = bounds.condition_bound(n, k)
    except InvalidRegime:
        nan = float("nan")
        return ConditionRecord(n, k, kappa, nan, dn, nan, shift, "InvalidRegime")
    return ConditionRecord(n, k, kappa, cb.kappa_bound, dn, bounds.corollary_bound(cb, dn),
                           shift, "ok")


def condition_trials(n, trials, seed=0, delta_scale=0.01, family="symmetric"):
    """Quadratically separated matrices perturbed by a scaled structured
    ``S``; one :class:`ConditionRecord` per trial.

    ``family`` is "symmetric" or "hessenberg" (nonsymmetric, positive).
    """
    if family not in ("symmetric", "hessenberg"):
        raise ValueError(f"unknown family {family!r}")
    out = []
    for trial in range(trials):
        if family == "symmetric":
            a = gen_separated_symmetric(n, "quadratic", seed + trial)
        else:
            a = gen_hessenberg_positive(n, seed + trial, sep="quadratic")
        s = gen_structured_S(n, seed + trial + 10_000)
        out.append(condition_check(a, delta_scale * s.entries))
    return out


def interlace_trials(n, t, trials, seed=0):
    """Interlacing of ``A`` and ``A + tS`` for linearly separated ``A``."""
    out = []
    for trial in range(trials):
        a = gen_separated_symmetric(n, "linear", seed + trial)
        s = gen_structured_S(n, seed + trial + 10_000)
        out.append(check_interlacing(a, s, t))
    return out
