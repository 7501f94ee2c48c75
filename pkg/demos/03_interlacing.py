# Interlacing under a structured positive perturbation
#
# For a positive definite matrix whose diagonal entries are spaced ~n apart,
# adding t*S (S with positive O(1) diagonal and O(1/n) off-diagonal) moves
# each eigenvalue up without passing the next one:
#     lam_1 <= mu_1 <= lam_2 <= mu_2 <= ... <= lam_n <= mu_n.
import numpy as np

from wellsep import check_interlacing, gen_separated_symmetric, gen_structured_S

n = 50
A = gen_separated_symmetric(n, "linear", seed=0)
S = gen_structured_S(n, seed=1)
for t in (0.25, 0.5, 1.0):
    r = check_interlacing(A, S, t)
    shift = r.pert_eigs - r.base_eigs
    print(f"t={t:4}: interlaced={r.interlaced}, shifts in [{shift.min():.3f}, {shift.max():.3f}]")

# Too large a step breaks it: eigenvalues overtake their neighbours.
r = check_interlacing(np.diag([1.0, 2.0, 3.0]), np.eye(3), 5.0)
print("big step:", r.interlaced, "first violation at", r.first_violation)
