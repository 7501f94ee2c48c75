# Eigenvector entries versus diagonal entries
#
# Even when discs overlap, the eigenvector of the largest eigenvalue tends to
# have large entries where A(i,i) is close to lambda. Drop bfw62a.mtx or
# pde225.mtx into ./data (scripts/fetch_matrices.py) to run on those;
# otherwise a synthetic matrix with mixed diagonal scales is used.
from pathlib import Path

import numpy as np
from scipy.stats import spearmanr

from wellsep import read_matrix_market
from wellsep.experiments import eigvec_trend, error_bounds

data = Path(__file__).resolve().parent.parent / "data"
mats = {p.stem: read_matrix_market(p) for p in sorted(data.glob("*.mtx"))}
if not mats:
    rng = np.random.default_rng(0)
    mats["synthetic"] = rng.uniform(-1, 1, (60, 60)) + np.diag(rng.uniform(1, 60, 60))

for name, A in mats.items():
    lam, mags, trend, inv_gap = eigvec_trend(A)
    ok = np.isfinite(inv_gap)
    rho = spearmanr(mags[ok], inv_gap[ok]).statistic
    print(f"{name}: lambda = {lam:.4g}, Spearman(|x_i|, 1/|A(i,i) - lambda|) = {rho:.3f}")
    top = np.argsort(mags)[::-1][:5]
    for i in top:
        print(f"   entry {i:3d}: |x_i| = {mags[i]:.3e}, 1/|A(i,i)-lambda| = {inv_gap[i]:.3e}")
    recs = [r for r in error_bounds(A, 0.5) if not r.degenerate]
    print(f"   relative error within bound for {sum(r.holds for r in recs)}/{len(recs)} pairs")
