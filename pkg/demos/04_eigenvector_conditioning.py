# Conditioning of the eigenvector matrix for O(n^2) separation
#
# When off-index eigenvector entries satisfy |x_i| < k/n^2, the eigenvector
# matrix X has
#     kappa(X) <= (n^3 + 3kn^2 + k^2) / (n^3 - 3kn^2 - 3k^2),
# and by Bauer-Fike each eigenvalue of A + Delta lies within kappa * ||Delta||_2
# of an eigenvalue of A.
from wellsep import condition_bound
from wellsep.experiments import condition_trials

print("closed form, n=10, k=1:", condition_bound(10, 1).kappa_bound)

for family in ("symmetric", "hessenberg"):
    print(family)
    for r in condition_trials(20, 4, seed=0, family=family):
        print(f"  k={r.k_est:6.3f} kappa={r.kappa_computed:.5f} bound={r.kappa_bound:.4f} "
              f"shift={r.max_eig_shift:.4f} <= {r.bf_bound:.4f}  [{r.status}]")
