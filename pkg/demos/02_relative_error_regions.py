# Relative-error regions from Gershgorin parameters
#
# If lam sits in a disc with center a and radius r1, and lam_tilde of a
# perturbed matrix sits in the disc with the same center and radius r2, then
# z = lam_tilde / lam lies in the product of the second disc with the
# reciprocal of the first. That region is an oval, and
#     |lam - lam_tilde| / |lam| = |1 - z| <= (r1 + r2) / (a - r1).
import numpy as np

from wellsep import error_region, invert_disc, oval_sample
from wellsep.experiments import error_bounds
from wellsep.perturb import gen_hessenberg_positive, gen_separated_symmetric

# reciprocal of the disc |w - 2| <= 1 is the disc centered 2/3, radius 1/3
inv = invert_disc(2.0, 0.0, 1.0)
print("inverted disc:", inv.center, inv.radius)

region = error_region(10.0, 1.0, 1.0)
print("bound         ", region.bound)
print("circle approx ", region.approx_center, "+/-", region.approx_radius)

grid = np.linspace(0, 2 * np.pi, 200, endpoint=False)
th, et = np.meshgrid(grid, grid)
zm1 = oval_sample(region, th, et)
print("max |z - 1| on the oval", np.abs(zm1).max(), "(attained at theta = eta = 0)")

# Symmetric matrix of dimension 100, perturbed by halving its off-diagonals.
A = gen_separated_symmetric(100, "linear", seed=3)
recs = error_bounds(A, c=0.5)
ratio = [r.rel_error / r.bound for r in recs]
print(f"symmetric: all within bound: {all(r.holds for r in recs)}, "
      f"worst rel_error/bound {max(ratio):.2e}")

# Upper Hessenberg matrix with positive entries, same protocol. The center
# of the approximating circle, shifted by one, often bounds the error too.
H = gen_hessenberg_positive(100, seed=3)
recs = error_bounds(H, c=0.5)
below = np.mean([r.rel_error <= r.shifted_center for r in recs])
print(f"hessenberg: all within bound: {all(r.holds for r in recs)}, "
      f"fraction under shifted center {below:.2f}")
for r in recs[:5]:
    print(f"  lambda {r.lam.real:9.3f}  rel_error {r.rel_error:.3e}  "
          f"center {r.shifted_center:.3e}  bound {r.bound:.3e}")
