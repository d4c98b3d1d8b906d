import itertools

import numpy as np
import pytest

import qcomm as qc
from qcomm import algebra, solver
from qcomm.errors import EnumerationCapExceeded, NotMember
from qcomm.poly import Polynomial

from conftest import match_matrices, random_context

PAPER_DIAG = [np.array([-5, 2, -3], dtype=complex), np.array([4, 1, 2], dtype=complex)]


def paper31_eq():
    s = qc.WeightedCirculantSpec.from_weights([1, 1, 8])
    ctx = qc.weighted_circulant_context(s)
    return solver.MatrixPolyEquation(ctx, list(PAPER_DIAG))


def paper32_eq():
    ctx = qc.companion_context([1, 2, 3])
    return solver.MatrixPolyEquation(ctx, list(PAPER_DIAG))


def test_build_scalar_polys_paper():
    for eq in (paper31_eq(), paper32_eq()):
        gs = solver.build_scalar_polys(eq)
        assert np.max(np.abs(gs[0].coeffs - [4, -5, 1])) < 1e-10
        assert np.max(np.abs(gs[1].coeffs - [1, 2, 1])) < 1e-10
        assert np.max(np.abs(gs[2].coeffs - [2, -3, 1])) < 1e-10


def test_build_scalar_polys_zero_coefficients(rng):
    ctx = random_context(rng, 3)
    z = np.zeros((3, 3), dtype=complex)
    eq = solver.MatrixPolyEquation(ctx, [z, z, z])
    for g in solver.build_scalar_polys(eq):
        assert g.degree == 3
        assert np.max(np.abs(g.coeffs[:3])) < 1e-12


def test_solve_paper31():
    ss = solver.solve(paper31_eq())
    assert ss.counts == [2, 1, 2]
    assert ss.total == 4
    assert len(ss.solutions) == 4
    assert all(s.residual < 1e-10 for s in ss.solutions)


def test_solve_linear_equation(rng):
    ctx = random_context(rng, 4)
    a1 = algebra.from_diag_coords(ctx, rng.standard_normal(4) + 1j * rng.standard_normal(4))
    ss = solver.solve(solver.MatrixPolyEquation(ctx, [a1]))
    assert ss.total == 1
    assert np.max(np.abs(ss.solutions[0].X + a1)) < 1e-8


def test_count_solutions_paper():
    counts, total = solver.count_solutions(paper31_eq())
    assert counts == [2, 1, 2]
    assert total == 4


def test_count_all_zero_coefficients(rng):
    ctx = random_context(rng, 3)
    z = np.zeros((3, 3), dtype=complex)
    counts, total = solver.count_solutions(solver.MatrixPolyEquation(ctx, [z, z]))
    assert counts == [1, 1, 1]
    assert total == 1
    ss = solver.solve(solver.MatrixPolyEquation(ctx, [z, z]))
    assert np.max(np.abs(ss.solutions[0].X)) < 1e-6


def test_abramov_bound_random(rng):
    for _ in range(50):
        d = int(rng.integers(1, 6))
        n = int(rng.integers(1, 5))
        ctx = random_context(rng, d)
        coeffs = [
            rng.uniform(-2, 2, d) + 1j * rng.uniform(-2, 2, d) for _ in range(n)
        ]
        counts, total = solver.count_solutions(solver.MatrixPolyEquation(ctx, coeffs))
        assert total == np.prod(counts)
        assert total <= n ** d


def test_input_form_independence(rng):
    ctx = random_context(rng, 3)
    u1 = rng.standard_normal(3) + 1j * rng.standard_normal(3)
    u2 = rng.standard_normal(3) + 1j * rng.standard_normal(3)
    as_vec = [u1, u2]
    as_mat = [algebra.from_diag_coords(ctx, u) for u in (u1, u2)]
    as_poly = [
        Polynomial(algebra.vandermonde_solve(ctx.eigenvalues, u)) for u in (u1, u2)
    ]
    sets = [
        solver.solve(solver.MatrixPolyEquation(ctx, c)).solutions
        for c in (as_vec, as_mat, as_poly)
    ]
    xs = [[s.X for s in sols] for sols in sets]
    assert match_matrices(xs[0], xs[1]) < 1e-7
    assert match_matrices(xs[0], xs[2]) < 1e-7


def test_diagonalizer_independence(rng):
    # same equation, structured closed-form T vs eigensolver T
    for _ in range(5):
        d = int(rng.integers(2, 5))
        w = rng.uniform(0.5, 2, d) * np.exp(1j * rng.uniform(0, 2 * np.pi, d))
        spec = qc.WeightedCirculantSpec.from_weights(w)
        coeffs = [
            Polynomial(rng.uniform(-2, 2, d) + 1j * rng.uniform(-2, 2, d))
            for _ in range(2)
        ]
        ctx_s = qc.weighted_circulant_context(spec)
        ctx_g = qc.make_context(qc.weighted_circulant_matrix(spec))
        xs = [s.X for s in solver.solve(solver.MatrixPolyEquation(ctx_s, coeffs)).solutions]
        ys = [s.X for s in solver.solve(solver.MatrixPolyEquation(ctx_g, coeffs)).solutions]
        assert len(xs) == len(ys)
        assert match_matrices(xs, ys) < 1e-7


def test_diagonalizer_independence_double_root_needs_coarser_tol():
    # the worked problem has an exact double root; through the generic
    # eigensolver the scalar coefficients pick up ~1e-14 noise, the double
    # root splits by its square root (~1e-7), and the 1e-8 default keeps the
    # halves apart. A coarser cluster_tol restores the mathematical count.
    eq_struct = paper31_eq()
    q = qc.weighted_circulant_matrix(qc.WeightedCirculantSpec.from_weights([1, 1, 8]))
    ctx_gen = qc.make_context(q)
    vals = [
        Polynomial(algebra.vandermonde_solve(eq_struct.ctx.eigenvalues, v))
        for v in PAPER_DIAG
    ]
    eq_gen = solver.MatrixPolyEquation(ctx_gen, vals)
    xs = [s.X for s in solver.solve(eq_struct).solutions]
    ys = [s.X for s in solver.solve(eq_gen, cluster_tol=1e-6).solutions]
    assert match_matrices(xs, ys) < 1e-7


def test_solutions_commute_with_q():
    ss = solver.solve(paper32_eq())
    q = paper32_eq().ctx.Q
    for s in ss.solutions:
        assert np.linalg.norm(s.X @ q - q @ s.X, "fro") < 1e-8


def test_brute_force_quadratic_agreement(rng):
    # d <= 3, n = 2: re-solve each scalar quadratic by the closed formula
    for _ in range(10):
        d = int(rng.integers(2, 4))
        ctx = random_context(rng, d)
        coeffs = [rng.integers(-3, 4, d).astype(complex) for _ in range(2)]
        eq = solver.MatrixPolyEquation(ctx, coeffs)
        ss = solver.solve(eq)
        per_index = []
        for i in range(d):
            b, c = coeffs[0][i], coeffs[1][i]
            disc = np.sqrt(b * b - 4 * c + 0j)
            rs = {(-b + disc) / 2, (-b - disc) / 2}
            uniq = []
            for r in rs:
                if not any(abs(r - u) < 1e-7 for u in uniq):
                    uniq.append(r)
            per_index.append(uniq)
        expected = [
            algebra.from_diag_coords(ctx, np.array(tup))
            for tup in itertools.product(*per_index)
        ]
        got = [s.X for s in ss.solutions]
        assert len(expected) == len(got)
        assert match_matrices(expected, got) < 1e-7


def test_verify_solution_zero_case(rng):
    ctx = random_context(rng, 3)
    z = np.zeros((3, 3), dtype=complex)
    eq = solver.MatrixPolyEquation(ctx, [z, z])
    assert solver.verify_solution(eq, z) == 0


def test_verify_solution_matches_naive(rng):
    ctx = random_context(rng, 4)
    n = 3
    mats = [
        algebra.from_diag_coords(ctx, rng.standard_normal(4) + 1j * rng.standard_normal(4))
        for _ in range(n)
    ]
    eq = solver.MatrixPolyEquation(ctx, mats)
    x = np.eye(4, dtype=complex)
    naive = np.linalg.matrix_power(x, n)
    for k, a in enumerate(mats, start=1):
        naive = naive + a @ np.linalg.matrix_power(x, n - k)
    assert abs(solver.verify_solution(eq, x) - np.linalg.norm(naive, "fro")) < 1e-12


def test_non_member_coefficient_rejected():
    ctx = qc.companion_context([1, 2, 3])
    bad = np.zeros((3, 3), dtype=complex)
    bad[0, 1] = 1.0
    eq = solver.MatrixPolyEquation(ctx, [bad])
    with pytest.raises(NotMember):
        solver.solve(eq)


def test_enumeration_cap(rng):
    ctx = random_context(rng, 4)
    coeffs = [rng.standard_normal(4) + 1j * rng.standard_normal(4) for _ in range(3)]
    eq = solver.MatrixPolyEquation(ctx, coeffs)
    _, total = solver.count_solutions(eq)
    assert total == 81
    with pytest.raises(EnumerationCapExceeded):
        solver.solve(eq, enumeration_cap=10)
    ss = solver.solve(eq, enumeration_cap=10, truncate=True)
    assert len(ss.solutions) == 10
    assert ss.total == 81
    assert any("truncated" in w for w in ss.warnings)


def test_double_root_counts_once():
    # g with a double root contributes one distinct root, kept as multiplicity
    eq = paper32_eq()
    ss = solver.solve(eq)
    assert ss.counts[1] == 1
    assert ss.distinct_roots[1][0].multiplicity == 2


def test_solutions_enumerated_lexicographically():
    ss = solver.solve(paper31_eq())
    assert [s.indices for s in ss.solutions] == [
        (0, 0, 0),
        (0, 0, 1),
        (1, 0, 0),
        (1, 0, 1),
    ]
