import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from wellsep.eigen import (
    SpectralPair, SpectrumReport, eig_general, eig_symmetric, fix_phase, hessenberg, hqr,
    jacobi_eigh, match_to_discs,
)
from wellsep.errors import NonConvergence
from wellsep.gershgorin import GershgorinDisc, compute_discs, separation_report
from wellsep.perturb import gen_hessenberg_positive, gen_separated_symmetric


def _sym(n, seed):
    rng = np.random.default_rng(seed)
    a = rng.standard_normal((n, n))
    return a + a.T


class TestSymmetric:
    def test_classic_2x2(self):
        rep = eig_symmetric([[2.0, 1.0], [1.0, 2.0]])
        np.testing.assert_allclose(rep.eigenvalues.real, [1, 3], atol=1e-14)
        s = 1 / np.sqrt(2)
        np.testing.assert_allclose(rep.pairs[0].eigenvector, [s, -s], atol=1e-14)
        np.testing.assert_allclose(rep.pairs[1].eigenvector, [s, s], atol=1e-14)

    def test_diagonal(self):
        rep = eig_symmetric(np.diag([9.0, 4.0]))
        np.testing.assert_array_equal(rep.eigenvalues.real, [4, 9])
        np.testing.assert_array_equal(rep.pairs[0].eigenvector, [0, 1])
        np.testing.assert_array_equal(rep.disc_indices, [1, 0])

    @pytest.mark.parametrize("n", [1, 2, 3, 10, 37])
    def test_reconstruction(self, n):
        a = _sym(n, n)
        rep = eig_symmetric(a)
        x = rep.eigenvectors
        err = np.linalg.norm(x @ np.diag(rep.eigenvalues.real) @ x.T - a)
        assert err <= 1e-9 * np.linalg.norm(a)
        assert np.linalg.norm(x.T @ x - np.eye(n)) <= 1e-9

    def test_matches_lapack(self):
        a = _sym(25, 7)
        np.testing.assert_allclose(eig_symmetric(a).eigenvalues.real,
                                   np.linalg.eigvalsh(a), atol=1e-10)

    def test_sorted_and_unit(self):
        rep = eig_symmetric(_sym(12, 2))
        vals = rep.eigenvalues.real
        assert np.all(np.diff(vals) >= 0)
        for p in rep.pairs:
            assert abs(np.linalg.norm(p.eigenvector) - 1) <= 1e-12
            k = np.argmax(np.abs(p.eigenvector))
            assert p.eigenvector[k] > 0

    def test_rejects_nonsymmetric(self):
        with pytest.raises(ValueError):
            eig_symmetric([[1.0, 2.0], [0.0, 1.0]])

    def test_nonconvergence_reports_off_norm(self):
        with pytest.raises(NonConvergence) as info:
            jacobi_eigh(_sym(8, 1), max_sweeps=1)
        assert info.value.achieved > 0


class TestGeneral:
    def test_rotation(self):
        vals = eig_general([[0.0, 1.0], [-1.0, 0.0]]).eigenvalues
        np.testing.assert_allclose(vals, [-1j, 1j], atol=1e-14)

    def test_triangular(self):
        np.testing.assert_allclose(eig_general([[1.0, 5.0], [0.0, 2.0]]).eigenvalues, [1, 2])

    @pytest.mark.parametrize("seed", range(5))
    def test_trace_identity(self, seed):
        a = np.random.default_rng(seed).standard_normal((20, 20))
        s = eig_general(a).eigenvalues.sum()
        assert abs(s - np.trace(a)) <= 1e-8 * (1 + abs(np.trace(a)))

    @pytest.mark.parametrize("seed", range(3))
    def test_against_lapack(self, seed):
        a = np.random.default_rng(seed).standard_normal((30, 30))
        ours = eig_general(a).eigenvalues
        ref = np.linalg.eigvals(a)
        for z in ours:
            assert np.min(np.abs(ref - z)) <= 1e-9 * np.linalg.norm(a)

    @pytest.mark.parametrize("seed", range(3))
    def test_conjugate_pairs_exact(self, seed):
        vals = eig_general(np.random.default_rng(seed).standard_normal((15, 15))).eigenvalues
        nonreal = vals[vals.imag != 0]
        assert len(nonreal) % 2 == 0
        for z in nonreal:
            assert np.min(np.abs(nonreal - np.conj(z))) <= 1e-10

    def test_residuals(self):
        a = np.random.default_rng(9).standard_normal((25, 25))
        rep = eig_general(a)
        scale = 1 + np.linalg.norm(a)
        for p in rep.pairs:
            assert p.residual <= 1e-8 * scale
            assert abs(np.linalg.norm(p.eigenvector) - 1) <= 1e-12

    def test_hessenberg_family(self):
        a = gen_hessenberg_positive(40, 1).entries
        rep = eig_general(a)
        assert rep.matched
        np.testing.assert_allclose(np.sort(rep.eigenvalues.real),
                                   np.sort(np.linalg.eigvals(a).real), atol=1e-9)

    def test_hessenberg_reduction(self):
        a = np.random.default_rng(4).standard_normal((9, 9))
        h, q = hessenberg(a, calc_q=True)
        assert np.all(np.tril(h, -2) == 0)
        np.testing.assert_allclose(q.T @ a @ q, h, atol=1e-12)
        np.testing.assert_allclose(q.T @ q, np.eye(9), atol=1e-13)

    def test_hqr_iteration_cap(self):
        with pytest.raises(NonConvergence):
            hqr(hessenberg(np.random.default_rng(0).standard_normal((6, 6))), max_iter=0)

    def test_rejects_complex(self):
        with pytest.raises(ValueError):
            eig_general([[1j, 0], [0, 1]])


@settings(max_examples=25, deadline=None)
@given(st.integers(2, 8), st.integers(0, 10_000))
def test_permutation_similarity(n, seed):
    rng = np.random.default_rng(seed)
    a = rng.standard_normal((n, n))
    p = rng.permutation(n)
    b = a[np.ix_(p, p)]
    va, vb = eig_general(a).eigenvalues, eig_general(b).eigenvalues
    for z in va:
        assert np.min(np.abs(vb - z)) <= 1e-9 * (1 + np.linalg.norm(a))


def _spectrum(values):
    pairs = tuple(SpectralPair(complex(v), np.array([1.0]), -1, 0.0) for v in values)
    return SpectrumReport(pairs, matched=False)


def _discs(*pairs):
    return [GershgorinDisc(i, complex(c), r, r) for i, (c, r) in enumerate(pairs)]


def test_match_nearest_containing():
    rep = match_to_discs(_spectrum([4.9, 10.1]), separation_report(_discs((5, 1), (10, 1))))
    assert rep.matched and list(rep.disc_indices) == [0, 1]


def test_match_overlap_agrees_with_brute_force():
    lam = np.array([2.5, 2.6])
    centers = np.array([2.0, 3.0])
    # brute force over both bijections: minimum total distance
    costs = {perm: sum(abs(lam[i] - centers[perm[i]]) for i in range(2))
             for perm in [(0, 1), (1, 0)]}
    best = min(costs, key=costs.get)
    rep = match_to_discs(_spectrum(lam), separation_report(_discs((2, 1), (3, 1))))
    assert rep.matched and tuple(rep.disc_indices) == best


def test_match_falls_back_to_bijection():
    rep = match_to_discs(_spectrum([2.0, 2.01]), separation_report(_discs((2, 1), (2.5, 1))))
    assert not rep.matched and not rep.contradiction
    assert sorted(rep.disc_indices) == [0, 1]


def test_match_flags_contradiction():
    # both "eigenvalues" inside disc 0 although discs are disjoint
    rep = match_to_discs(_spectrum([2.0, 2.1]), separation_report(_discs((2, 1), (9, 1))))
    assert rep.contradiction


def test_match_diagonal_identity():
    a = np.diag([3.0, -1.0, 8.0, 5.0])
    rep = eig_symmetric(a)
    for p in rep.pairs:
        assert a[p.disc_index, p.disc_index] == p.eigenvalue.real
    assert rep.matched


def test_fix_phase_complex():
    x = fix_phase(np.array([1j, 2j, -0.5j]))
    np.testing.assert_allclose(x, np.array([1, 2, -0.5]) / np.linalg.norm([1, 2, -0.5]))


def test_generated_families_matched():
    a = gen_separated_symmetric(30, "linear", 5)
    rep = eig_symmetric(a)
    assert rep.matched and not rep.contradiction
    centers = np.diag(a.entries)
    radii = separation_report(compute_discs(a)).radii
    for p in rep.pairs:
        assert abs(p.eigenvalue - centers[p.disc_index]) <= radii[p.disc_index]
