"""Relative-error regions and eigenvalue perturbation bounds.

Naming: a disc of the unperturbed matrix has center ``a * exp(1j*alpha)`` and
radius ``r1``; the perturbed matrix keeps the center and has radius ``r2``.
With ``lam`` in the first disc and ``lam_tilde`` in the second, the ratio
``z = lam_tilde / lam`` lies in the product of the second disc with the
reciprocal of the first, a Cartesian oval. Every magnitude below is invariant
under the common phase ``alpha``.
"""

from dataclasses import dataclass, field
import math

import numpy as np

from .errors import CoincidentCenter, DegenerateDisc, InvalidRegime, ZeroEigenvalue
from .matrix import as_array

_CONSISTENCY_RTOL = 1e-12


def _agree(x, y, what, rtol=_CONSISTENCY_RTOL):
    if abs(x - y) > rtol * max(1.0, abs(x), abs(y)):
        raise AssertionError(f"{what}: {x!r} != {y!r}")


@dataclass(frozen=True)
class InvertedDisc:
    center: complex
    radius: float


def invert_disc(a, alpha, r1):
    """Image of the disc ``|w - a e^{i alpha}| <= r1`` under ``w -> 1/w``.

    The result is centered on the ray at angle ``-alpha``; its nearest and
    farthest points from the origin have moduli ``1/(a+r1)`` and ``1/(a-r1)``.
    """
    if not a > r1 or r1 < 0:
        raise DegenerateDisc(f"need a > r1 >= 0, got a={a}, r1={r1}")
    denom = (a + r1) * (a - r1)
    center = a / denom * complex(math.cos(alpha), -math.sin(alpha))
    radius = r1 / denom
    _agree(abs(center) + radius, 1.0 / (a - r1), "inverted disc far modulus")
    _agree(abs(center) - radius, 1.0 / (a + r1), "inverted disc near modulus")
    return InvertedDisc(center, radius)


@dataclass(frozen=True)
class ErrorRegion:
    a: float
    r1: float
    r2: float
    alpha: float = 0.0
    bound: float = field(init=False)
    approx_center: float = field(init=False)
    approx_radius: float = field(init=False)
    shifted_center: float = field(init=False)

    def __post_init__(self):
        a, r1, r2 = self.a, self.r1, self.r2
        if not a > r1 or r1 < 0 or r2 < 0:
            raise DegenerateDisc(f"need a > r1 >= 0 and r2 >= 0, got a={a}, r1={r1}, r2={r2}")
        denom = (a + r1) * (a - r1)
        bound = (r1 + r2) / (a - r1)
        _agree(bound, (r1 * r1 + a * (r1 + r2) + r1 * r2) / denom, "oval bound forms")
        center = (a * a + r1 * r2) / denom
        shifted = (r1 * r1 + r1 * r2) / denom
        _agree(shifted, center - 1.0, "shifted center")
        set_ = object.__setattr__
        set_(self, "bound", bound)
        set_(self, "approx_center", center)
        set_(self, "approx_radius", a * (r1 + r2) / denom)
        set_(self, "shifted_center", shifted)


def error_region(a, r1, r2, alpha=0.0):
    """Relative-error region for a disc with center modulus ``a``."""
    return ErrorRegion(float(a), float(r1), float(r2), float(alpha))


def oval_sample(region, theta, eta):
    """Boundary point ``z - 1`` of the oval at angles ``theta`` (original disc)
    and ``eta`` (perturbed disc). Broadcasts over array angles."""
    a, r1, r2 = region.a, region.r1, region.r2
    denom = (a + r1) * (a - r1)
    e_t = np.exp(1j * np.asarray(theta, dtype=float))
    e_e = np.exp(1j * np.asarray(eta, dtype=float))
    expanded = (r1 * r1 + a * (r1 * e_t + r2 * e_e) + r1 * r2 * e_t * e_e) / denom
    product = (a + r2 * e_e) * (a + r1 * e_t) / denom - 1.0
    if not np.allclose(expanded, product, rtol=0, atol=_CONSISTENCY_RTOL * max(1.0, region.bound)):
        raise AssertionError("oval parameterizations disagree")
    if expanded.ndim == 0:
        return complex(expanded)
    return expanded


def relative_error(lam, lam_tilde):
    """``|lam - lam_tilde| / |lam|``."""
    if abs(lam) < 1e-300:
        raise ZeroEigenvalue("relative error undefined for a zero eigenvalue")
    return abs(lam - lam_tilde) / abs(lam)


def lemma_entry_bound(a_i, r_i, lam):
    """Cap ``r_i / |lam - a_i|`` on the i-th entry of a unit eigenvector whose
    eigenvalue ``lam`` belongs to some other disc."""
    gap = abs(lam - a_i)
    if gap < 1e-12 * (1.0 + abs(a_i)):
        raise CoincidentCenter(f"eigenvalue {lam} coincides with center {a_i}")
    return r_i / gap


def estimate_k(spectrum):
    """Smallest ``k`` with ``|x_i| <= k / n**2`` for every eigenvector entry
    off its own disc index."""
    n = spectrum.n
    if n < 2:
        raise ValueError("estimate_k needs n >= 2")
    worst = 0.0
    for pair in spectrum.pairs:
        mag = np.abs(pair.eigenvector).copy()
        mag[pair.disc_index] = 0.0
        worst = max(worst, float(mag.max()))
    return n * n * worst


@dataclass(frozen=True)
class ConditionBound:
    n: int
    k: float
    kappa_bound: float
    gram_diag_low: float
    gram_diag_high: float
    gram_offdiag: float
    gram_radius: float


def condition_bound(n, k):
    """Upper bound on the eigenvector-matrix condition number.

    The unit eigenvectors have off-index entries below ``k/n**2``; the Gram
    matrix ``X^T X`` then has diagonal in ``[1 - 3k^2/n^3, 1 + k^2/n^3]`` and
    Gershgorin radius at most ``3k/n``.
    """
    n = int(n)
    k = float(k)
    if k < 0:
        raise ValueError("k must be nonnegative")
    n3 = float(n) ** 3
    denom = n3 - 3 * k * n * n - 3 * k * k
    if denom <= 0:
        raise InvalidRegime(f"n^3 - 3kn^2 - 3k^2 = {denom} <= 0 for n={n}, k={k}")
    kappa = (n3 + 3 * k * n * n + k * k) / denom
    low = 1 - 3 * k * k / n3
    high = 1 + k * k / n3
    radius = 3 * k / n
    _agree(kappa, (high + radius) / (low - radius), "condition bound quotient")
    return ConditionBound(
        n=n, k=k, kappa_bound=kappa,
        gram_diag_low=low, gram_diag_high=high,
        gram_offdiag=2 * k / n**2 + k * k / n3, gram_radius=radius,
    )


def spectral_norm(D, rtol=1e-10, max_iter=10_000):
    """2-norm of ``D`` by power iteration on ``D^H D``."""
    d = as_array(D)
    if not np.any(d):
        return 0.0
    g = d.conj().T @ d
    rng = np.random.default_rng(0)
    v = rng.standard_normal(d.shape[1])
    v /= np.linalg.norm(v)
    est = 0.0
    for _ in range(max_iter):
        w = g @ v
        new = float(np.real(np.vdot(v, w)))
        nw = np.linalg.norm(w)
        if nw == 0.0:
            break
        v = w / nw
        if abs(new - est) <= rtol * abs(new):
            est = new
            break
        est = new
    return math.sqrt(max(est, 0.0))


def _extreme_eigs_hpd(h, rtol, max_iter):
    """Largest and smallest eigenvalues of a Hermitian positive definite ``h``
    by power and inverse-power iteration."""
    n = h.shape[0]
    rng = np.random.default_rng(0)
    start = rng.standard_normal(n)
    start /= np.linalg.norm(start)

    def power(apply):
        v = start.astype(h.dtype)
        rq = float(np.real(np.vdot(v, apply(v))))
        for _ in range(max_iter):
            w = apply(v)
            v = w / np.linalg.norm(w)
            new = float(np.real(np.vdot(v, apply(v))))
            if abs(new - rq) <= rtol * abs(new):
                return new
            rq = new
        return rq

    big = power(lambda v: h @ v)
    small = 1.0 / power(lambda v: np.linalg.solve(h, v))
    return big, small


def condition_number(X, rtol=1e-14, max_iter=100_000):
    """2-norm condition number of ``X`` from the extreme eigenvalues of ``X^H X``."""
    x = np.asarray(X)
    h = x.conj().T @ x
    big, small = _extreme_eigs_hpd(h, rtol, max_iter)
    return math.sqrt(big / small)


def corollary_bound(cond, delta_norm):
    """Bauer-Fike type bound on eigenvalue shifts: ``kappa_bound * ||Delta||_2``."""
    if delta_norm < 0:
        raise ValueError("delta_norm must be nonnegative")
    return cond.kappa_bound * delta_norm
