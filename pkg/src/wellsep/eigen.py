"""Reference dense eigensolvers used to check every bound in the package.

``eig_symmetric`` runs cyclic Jacobi with a round-robin (parallel) ordering so
that each round of disjoint rotations is one vectorized numpy update.
``eig_general`` reduces to Hessenberg form with Householder reflectors, finds
eigenvalues with Francis double-shift QR, and recovers eigenvectors by inverse
iteration.
"""

from dataclasses import dataclass, replace
import logging
import math

import numpy as np
from scipy.optimize import linear_sum_assignment

from .errors import NonConvergence
from .gershgorin import compute_discs, separation_report
from .matrix import as_array

log = logging.getLogger(__name__)

OFF_NORM_RTOL = 1e-12
MAX_SWEEPS = 100
MAX_QR_ITERATIONS = 100
RESIDUAL_RTOL = 1e-8


@dataclass(frozen=True)
class SpectralPair:
    eigenvalue: complex
    eigenvector: np.ndarray
    disc_index: int
    residual: float


@dataclass(frozen=True)
class SpectrumReport:
    pairs: tuple
    matched: bool
    # set when discs are disjoint yet no bijective containing assignment exists
    contradiction: bool = False

    @property
    def n(self):
        return len(self.pairs)

    @property
    def eigenvalues(self):
        return np.array([p.eigenvalue for p in self.pairs])

    @property
    def eigenvectors(self):
        """Eigenvectors as matrix columns, in ``pairs`` order."""
        return np.column_stack([p.eigenvector for p in self.pairs])

    @property
    def disc_indices(self):
        return np.array([p.disc_index for p in self.pairs])

    def by_disc(self):
        """Map disc index -> pair (only meaningful when matched)."""
        return {p.disc_index: p for p in self.pairs}


def fix_phase(x):
    """Scale ``x`` to unit 2-norm with its largest-magnitude entry real positive."""
    x = np.asarray(x)
    x = x / np.linalg.norm(x)
    k = int(np.argmax(np.abs(x)))
    phase = x[k] / abs(x[k])
    x = x / phase
    if np.iscomplexobj(x) and not np.any(x.imag):
        x = x.real
    return x


def _sort_key(value):
    value = complex(value)
    return (value.real, value.imag)


def _round_robin(n):
    """Rounds of disjoint index pairs covering every (p, q), p < q, once."""
    m = n + (n % 2)
    players = list(range(m))
    rounds = []
    for _ in range(m - 1):
        ps, qs = [], []
        for i in range(m // 2):
            p, q = players[i], players[m - 1 - i]
            if p >= n or q >= n:
                continue
            ps.append(min(p, q))
            qs.append(max(p, q))
        if ps:
            rounds.append((np.array(ps), np.array(qs)))
        players = [players[0], players[-1]] + players[1:-1]
    return rounds


def jacobi_eigh(a, tol=OFF_NORM_RTOL, max_sweeps=MAX_SWEEPS):
    """Cyclic Jacobi on a real symmetric ndarray; returns (w, V) unsorted."""
    a = np.array(a, dtype=np.float64)
    n = a.shape[0]
    v = np.eye(n)
    fro = np.linalg.norm(a)
    target = tol * fro
    rounds = _round_robin(n)

    def off_norm():
        return float(np.linalg.norm(a - np.diag(np.diag(a))))

    off = off_norm()
    sweeps = 0
    while off > target:
        if sweeps == max_sweeps:
            raise NonConvergence(
                f"Jacobi did not converge in {max_sweeps} sweeps (off-norm {off:.3e})",
                achieved=off,
            )
        for p, q in rounds:
            apq = a[p, q]
            active = apq != 0.0
            if not np.any(active):
                continue
            c = np.ones_like(apq)
            s = np.zeros_like(apq)
            tau = (a[q[active], q[active]] - a[p[active], p[active]]) / (2.0 * apq[active])
            t = np.where(tau >= 0, 1.0, -1.0) / (np.abs(tau) + np.sqrt(1.0 + tau * tau))
            c[active] = 1.0 / np.sqrt(1.0 + t * t)
            s[active] = t * c[active]

            ap, aq = a[:, p].copy(), a[:, q].copy()
            a[:, p] = c * ap - s * aq
            a[:, q] = s * ap + c * aq
            ap, aq = a[p, :].copy(), a[q, :].copy()
            a[p, :] = c[:, None] * ap - s[:, None] * aq
            a[q, :] = s[:, None] * ap + c[:, None] * aq
            a[p, q] = 0.0
            a[q, p] = 0.0
            vp, vq = v[:, p].copy(), v[:, q].copy()
            v[:, p] = c * vp - s * vq
            v[:, q] = s * vp + c * vq
        sweeps += 1
        off = off_norm()
    return np.diag(a).copy(), v


def hessenberg(a, calc_q=False):
    """Householder reduction of a real square matrix to upper Hessenberg form.

    Returns ``H`` or ``(H, Q)`` with ``Q.T @ a @ Q == H``.
    """
    h = np.array(a, dtype=np.float64)
    n = h.shape[0]
    q = np.eye(n) if calc_q else None
    for k in range(n - 2):
        x = h[k + 1:, k]
        alpha = np.linalg.norm(x)
        if alpha == 0.0:
            continue
        u = x.copy()
        u[0] += math.copysign(alpha, x[0])
        u /= np.linalg.norm(u)
        h[k + 1:, k:] -= 2.0 * np.outer(u, u @ h[k + 1:, k:])
        h[:, k + 1:] -= 2.0 * np.outer(h[:, k + 1:] @ u, u)
        h[k + 2:, k] = 0.0
        if calc_q:
            q[:, k + 1:] -= 2.0 * np.outer(q[:, k + 1:] @ u, u)
    return (h, q) if calc_q else h


def hqr(h, max_iter=MAX_QR_ITERATIONS):
    """Eigenvalues of an upper Hessenberg matrix by Francis double-shift QR.

    Real eigenvalues come out exactly real and complex ones as exact
    conjugate pairs from deflated 2x2 blocks.
    """
    a = np.array(h, dtype=np.float64)
    n = a.shape[0]
    wr = np.zeros(n)
    wi = np.zeros(n)
    anorm = float(np.sum(np.abs(np.triu(a, -1))))
    nn = n - 1
    t = 0.0
    while nn >= 0:
        its = 0
        while True:
            for l in range(nn, 0, -1):
                s = abs(a[l - 1, l - 1]) + abs(a[l, l])
                if s == 0.0:
                    s = anorm
                if abs(a[l, l - 1]) + s == s:
                    a[l, l - 1] = 0.0
                    break
            else:
                l = 0
            x = a[nn, nn]
            if l == nn:
                wr[nn] = x + t
                nn -= 1
                break
            y = a[nn - 1, nn - 1]
            w = a[nn, nn - 1] * a[nn - 1, nn]
            if l == nn - 1:
                p = 0.5 * (y - x)
                q = p * p + w
                z = math.sqrt(abs(q))
                x += t
                if q >= 0.0:
                    z = p + math.copysign(z, p)
                    wr[nn - 1] = wr[nn] = x + z
                    if z != 0.0:
                        wr[nn] = x - w / z
                else:
                    wr[nn - 1] = wr[nn] = x + p
                    wi[nn - 1] = -z
                    wi[nn] = z
                nn -= 2
                break
            if its == max_iter:
                raise NonConvergence(
                    f"QR iteration failed to deflate eigenvalue {nn} in {max_iter} iterations",
                    achieved=abs(a[nn, nn - 1]),
                )
            if its and its % 10 == 0:
                # exceptional shift to break cycles
                t += x
                idx = np.arange(nn + 1)
                a[idx, idx] -= x
                s = abs(a[nn, nn - 1]) + abs(a[nn - 1, nn - 2])
                x = y = 0.75 * s
                w = -0.4375 * s * s
            its += 1

            for m in range(nn - 2, l - 1, -1):
                z = a[m, m]
                r = x - z
                s = y - z
                p = (r * s - w) / a[m + 1, m] + a[m, m + 1]
                q = a[m + 1, m + 1] - z - r - s
                r = a[m + 2, m + 1]
                s = abs(p) + abs(q) + abs(r)
                p /= s
                q /= s
                r /= s
                if m == l:
                    break
                u = abs(a[m, m - 1]) * (abs(q) + abs(r))
                v = abs(p) * (abs(a[m - 1, m - 1]) + abs(z) + abs(a[m + 1, m + 1]))
                if u + v == v:
                    break
            for i in range(m + 2, nn + 1):
                a[i, i - 2] = 0.0
                if i != m + 2:
                    a[i, i - 3] = 0.0

            for k in range(m, nn):
                if k != m:
                    p = a[k, k - 1]
                    q = a[k + 1, k - 1]
                    r = a[k + 2, k - 1] if k != nn - 1 else 0.0
                    x = abs(p) + abs(q) + abs(r)
                    if x != 0.0:
                        p /= x
                        q /= x
                        r /= x
                s = math.copysign(math.sqrt(p * p + q * q + r * r), p)
                if s == 0.0:
                    continue
                if k == m:
                    if l != m:
                        a[k, k - 1] = -a[k, k - 1]
                else:
                    a[k, k - 1] = -s * x
                p += s
                x = p / s
                y = q / s
                z = r / s
                q /= p
                r /= p
                last = k != nn - 1
                cols = slice(k, nn + 1)
                pv = a[k, cols] + q * a[k + 1, cols]
                if last:
                    pv += r * a[k + 2, cols]
                    a[k + 2, cols] -= pv * z
                a[k + 1, cols] -= pv * y
                a[k, cols] -= pv * x
                rows = slice(l, min(nn, k + 3) + 1)
                pv = x * a[rows, k] + y * a[rows, k + 1]
                if last:
                    pv += z * a[rows, k + 2]
                    a[rows, k + 2] -= pv * r
                a[rows, k + 1] -= pv * q
                a[rows, k] -= pv
    return wr + 1j * wi


def inverse_iteration(a, lam, rng, steps=2, max_steps=8):
    """Eigenvector for eigenvalue ``lam`` by shifted inverse iteration.

    Runs ``steps`` solves, then keeps going (up to ``max_steps``) while the
    residual exceeds the acceptance threshold.
    """
    n = a.shape[0]
    lam = complex(lam)
    scale = 1.0 + np.linalg.norm(a)
    shift = lam + 1e-10 * (1.0 + abs(lam))
    if lam.imag == 0.0:
        shift = shift.real
        x = rng.standard_normal(n)
    else:
        x = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    m = a - shift * np.eye(n)
    x /= np.linalg.norm(x)
    for step in range(max_steps):
        try:
            y = np.linalg.solve(m, x)
        except np.linalg.LinAlgError:
            m = m - 1e-8 * (1.0 + abs(lam)) * np.eye(n)
            y = np.linalg.solve(m, x)
        x = y / np.linalg.norm(y)
        if step + 1 >= steps:
            res = np.linalg.norm(a @ x - lam * x)
            if res <= RESIDUAL_RTOL * scale:
                break
    return x


def _finish(a, values, vectors):
    scale = 1.0 + np.linalg.norm(a)
    pairs = []
    for lam, x in zip(values, vectors):
        x = fix_phase(x)
        res = float(np.linalg.norm(a @ x - lam * x))
        if res > RESIDUAL_RTOL * scale:
            raise NonConvergence(f"eigenpair residual {res:.3e} above tolerance", achieved=res)
        pairs.append(SpectralPair(complex(lam), x, -1, res))
    pairs.sort(key=lambda p: _sort_key(p.eigenvalue))
    report = SpectrumReport(tuple(pairs), matched=False)
    return match_to_discs(report, separation_report(compute_discs(a), "row"))


def eig_symmetric(A):
    """Full spectrum of a real symmetric matrix by cyclic Jacobi.

    Pairs are sorted ascending and matched to row-mode Gershgorin discs.
    """
    a = as_array(A)
    if np.iscomplexobj(a):
        raise ValueError("eig_symmetric expects a real matrix")
    if not np.array_equal(a, a.T):
        raise ValueError("eig_symmetric expects a symmetric matrix")
    w, v = jacobi_eigh(a)
    return _finish(a, w, v.T)


def eig_general(A, seed=0):
    """Full spectrum of a real square matrix.

    Hessenberg reduction + Francis double-shift QR for eigenvalues; inverse
    iteration (seeded, deterministic) for eigenvectors. Conjugate partners
    share conjugated eigenvectors.
    """
    a = as_array(A)
    if np.iscomplexobj(a):
        raise ValueError("eig_general expects a real matrix")
    w = hqr(hessenberg(a))
    rng = np.random.default_rng(seed)
    vectors = []
    for lam in w:
        if lam.imag < 0.0:
            vectors.append(None)
            continue
        vectors.append(inverse_iteration(a, lam, rng))
    for i, lam in enumerate(w):
        if vectors[i] is None:
            partner = int(np.argmin(np.abs(w - np.conj(lam))))
            src = vectors[partner]
            if src is None:
                src = inverse_iteration(a, lam, rng)
            vectors[i] = np.conj(src)
    values = [complex(x.real, x.imag) if x.imag else complex(x.real, 0.0) for x in w]
    return _finish(a, values, vectors)


def match_to_discs(spectrum, report):
    """Assign each eigenvalue to a Gershgorin disc.

    First choice is the disc minimizing ``|lam - center| - radius``; when that
    is a bijection the spectrum is ``matched``. Otherwise a minimum total
    distance bijection (Hungarian) is used and ``matched`` is False. Disjoint
    discs without a bijective nearest assignment flag ``contradiction``.
    """
    lam = spectrum.eigenvalues
    centers = report.centers
    radii = report.radii
    if len(lam) != len(centers):
        raise ValueError("spectrum and discs have different sizes")
    gap = np.abs(lam[:, None] - centers[None, :]) - radii[None, :]
    nearest = np.argmin(gap, axis=1)
    matched = len(set(nearest.tolist())) == len(lam)
    if matched:
        assign = nearest
    else:
        # radii drop out of any perfect matching's total, so this also
        # minimizes the summed signed gap
        rows, cols = linear_sum_assignment(np.abs(lam[:, None] - centers[None, :]))
        assign = np.empty(len(lam), dtype=int)
        assign[rows] = cols
    contradiction = report.disjoint and not matched
    if contradiction:
        log.warning("disjoint discs but no bijective disc assignment; oracle contradiction")
    pairs = tuple(replace(p, disc_index=int(j)) for p, j in zip(spectrum.pairs, assign))
    return SpectrumReport(pairs, matched=matched, contradiction=contradiction)
