# Gershgorin discs and separation diagnostics
#
# Every eigenvalue of a square matrix lies in the union of its row discs
# (center A[i, i], radius = sum of |A[i, j]| over j != i), and also in the
# union of its column discs.
import numpy as np

from wellsep import compute_discs, eig_general, gen_separated_symmetric, separation_report
from wellsep.gershgorin import classify_separation

A = np.array([[5.0, 1.0], [2.0, 10.0]])
for d in compute_discs(A):
    print(f"disc {d.index}: center {d.center.real:g}, row {d.row_radius:g}, "
          f"col {d.col_radius:g}, min {d.min_radius:g}")

# A generated well separated matrix: diagonal i*n, off-diagonals scaled so
# the discs are disjoint and clear of the origin and unit circle.
M = gen_separated_symmetric(8, "linear", seed=1)
rep = separation_report(compute_discs(M), "row")
print("pairwise gap      ", round(rep.pairwise_gap, 3))
print("disjoint          ", rep.disjoint)
print("unit circle clear ", rep.unit_circle_clear)
print("sep constants     ", rep.sep_constant_linear, rep.sep_constant_quadratic)
print("classified as     ", classify_separation(rep))

# With disjoint discs each disc holds exactly one eigenvalue; the oracle
# solver assigns them.
spec = eig_general(M)
for p in spec.pairs:
    d = rep.discs[p.disc_index]
    print(f"lambda {p.eigenvalue.real:8.4f} in disc {p.disc_index} "
          f"(|lambda - center| = {abs(p.eigenvalue - d.center):.3f} <= {d.row_radius:.3f})")
