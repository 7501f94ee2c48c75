"""Power method with a diagonal-seeded start vector for Perron vectors."""

from dataclasses import dataclass, field
import statistics

import numpy as np

from .errors import ShiftCollision
from .matrix import DenseMatrix, as_array


@dataclass
class PowerTrace:
    start_kind: str
    K: float
    iterations: int
    error_log: list
    converged: bool
    dominant_value: float
    dominant_vector: np.ndarray


def default_shift(A):
    return 2.0 * float(np.max(np.real(np.diag(as_array(A)))))


def perron_seed(A, K=None):
    """Unit vector with entries proportional to ``1/|A(i,i) - K|``."""
    a = as_array(A)
    if K is None:
        K = default_shift(a)
    gaps = np.abs(np.diag(a) - K)
    if np.any(gaps < 1e-12 * (1.0 + abs(K))):
        raise ShiftCollision(f"shift K={K} coincides with a diagonal entry")
    x = 1.0 / gaps
    return x / np.linalg.norm(x)


def power_method(A, start, tol=1e-8, max_iter=10_000, start_kind="custom", K=float("nan")):
    """Power iteration ``v <- A v / ||A v||``.

    ``error_log[k]`` is the Rayleigh residual ``||A v_k - rho_k v_k||`` after
    ``k`` steps (``k = 0`` is the start vector). Stops once it drops to
    ``tol * ||A||_F``; ``iterations`` is the number of steps taken.
    """
    a = as_array(A)
    v = np.asarray(start, dtype=a.dtype if np.iscomplexobj(a) else float).copy()
    nv = np.linalg.norm(v)
    if nv == 0:
        raise ValueError("start vector must be nonzero")
    v /= nv
    threshold = tol * np.linalg.norm(a)
    log = []
    converged = False
    rho = 0.0
    for it in range(max_iter + 1):
        w = a @ v
        rho = np.vdot(v, w)
        res = float(np.linalg.norm(w - rho * v))
        log.append(res)
        if res <= threshold:
            converged = True
            break
        if it == max_iter:
            break
        v = w / np.linalg.norm(w)
    k = int(np.argmax(np.abs(v)))
    if np.real(v[k]) < 0:
        v = -v
    return PowerTrace(
        start_kind=start_kind, K=K, iterations=len(log) - 1, error_log=log,
        converged=converged, dominant_value=float(np.real(rho)), dominant_vector=v,
    )


def gen_perron_test(n, seed=0):
    """Symmetric positive matrix: diagonal a shuffle of 1..n, off-diagonal uniform(0, 1)."""
    if n < 2:
        raise ValueError("n must be at least 2")
    rng = np.random.default_rng(seed)
    u = np.triu(1.0 - rng.random((n, n)), 1)
    a = u + u.T
    a[np.diag_indices(n)] = rng.permutation(np.arange(1, n + 1)).astype(float)
    return DenseMatrix(a, "symmetric")


@dataclass
class StartComparison:
    n: int
    trials: int
    tol: float
    seed: int
    K: float = None
    random_iterations: list = field(default_factory=list)
    seeded_iterations: list = field(default_factory=list)
    excluded: int = 0
    traces: list = field(default_factory=list)

    @property
    def mean_random(self):
        return statistics.fmean(self.random_iterations) if self.random_iterations else float("nan")

    @property
    def mean_seeded(self):
        return statistics.fmean(self.seeded_iterations) if self.seeded_iterations else float("nan")

    @property
    def median_random(self):
        return statistics.median(self.random_iterations) if self.random_iterations else float("nan")

    @property
    def median_seeded(self):
        return statistics.median(self.seeded_iterations) if self.seeded_iterations else float("nan")

    @property
    def mean_saving(self):
        savings = [r - s for r, s in zip(self.random_iterations, self.seeded_iterations)]
        return statistics.fmean(savings) if savings else float("nan")

    def summary(self):
        return {
            "n": self.n, "trials": self.trials, "tol": self.tol, "seed": self.seed,
            "K": "2*max(diag)" if self.K is None else self.K,
            "mean_random": self.mean_random, "mean_seeded": self.mean_seeded,
            "median_random": self.median_random, "median_seeded": self.median_seeded,
            "mean_saving": self.mean_saving, "excluded": self.excluded,
        }


def compare_starts(n, trials, K=None, tol=1e-8, seed=0, max_iter=10_000):
    """Iteration counts of random vs diagonal-seeded starts on fresh
    :func:`gen_perron_test` matrices.

    Trial ``i`` draws its matrix and random start from the stream
    ``(seed, i)``. The random start is uniform on [0, 1)^n, normalized.
    ``K=None`` uses twice the largest diagonal entry of each matrix.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    out = StartComparison(n=n, trials=trials, tol=tol, seed=seed, K=K)
    for trial in range(trials):
        rng = np.random.default_rng([seed, trial])
        a = gen_perron_test(n, seed=int(rng.integers(2**63)))
        shift = default_shift(a) if K is None else K
        x0 = rng.random(n)
        rand = power_method(a, x0, tol, max_iter, start_kind="random", K=shift)
        seeded = power_method(a, perron_seed(a, shift), tol, max_iter,
                              start_kind="diagonal_seeded", K=shift)
        out.traces.append((trial, rand))
        out.traces.append((trial, seeded))
        if not (rand.converged and seeded.converged):
            out.excluded += 1
            continue
        out.random_iterations.append(rand.iterations)
        out.seeded_iterations.append(seeded.iterations)
    return out
