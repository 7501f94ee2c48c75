# Seeding the power method from the diagonal
#
# Eigenvector entries of a matrix with spread-out diagonal roughly follow
# 1/|A(i,i) - lambda|. Starting the power method from x_i = 1/|A(i,i) - K|
# for a large K exploits this for the Perron vector.
import numpy as np

from wellsep import compare_starts, gen_perron_test, perron_seed, power_method

A = gen_perron_test(100, seed=0)
seeded = power_method(A, perron_seed(A), tol=1e-8, start_kind="diagonal_seeded")
random = power_method(A, np.random.default_rng(0).random(100), tol=1e-8, start_kind="random")
print("iterations: seeded", seeded.iterations, "random", random.iterations)
print("log10 residual, first 10 steps:")
print("  seeded", np.round(np.log10(seeded.error_log[:10]), 2))
print("  random", np.round(np.log10(random.error_log[:10]), 2))

cmp = compare_starts(100, trials=50, tol=1e-8, seed=0)
for key, value in cmp.summary().items():
    print(f"{key:>14}: {value}")
