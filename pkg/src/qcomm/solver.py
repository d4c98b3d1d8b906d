"""Solve X^n + A_1 X^(n-1) + ... + A_n = O inside the commutant of Q.

In the eigenbasis of Q the matrix equation splits into d independent scalar
polynomial equations g_i, one per eigenvalue; picking one distinct root of
each g_i and conjugating the resulting diagonal back gives every solution.
The total count is the product of the per-index distinct-root counts and
never exceeds n^d.
"""

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from . import algebra, linalg, poly
from .errors import DimensionMismatch, EnumerationCapExceeded

DEFAULT_RESIDUAL_TOL = 1e-9
DEFAULT_ENUMERATION_CAP = 10 ** 6


@dataclass
class MatrixPolyEquation:
    """A monic matrix polynomial equation over the commutant of ctx.Q.

    coeffs lists the n coefficients from the X^(n-1) term down to the
    constant term; each entry may be a d x d matrix (a member of the
    algebra), a Polynomial (its representation polynomial), or a length-d
    vector of diagonal coordinates.
    """

    ctx: algebra.QContext
    coeffs: list

    @property
    def n(self):
        return len(self.coeffs)


def _coeff_diag_values(eq):
    """n x d array: row k holds the diag-coordinates of coefficient k+1."""
    d = eq.ctx.d
    out = np.empty((eq.n, d), dtype=complex)
    for k, c in enumerate(eq.coeffs):
        if isinstance(c, poly.Polynomial):
            out[k] = c(eq.ctx.eigenvalues)
            continue
        arr = np.asarray(c, dtype=complex)
        if arr.ndim == 1:
            if arr.shape != (d,):
                raise DimensionMismatch(
                    f"coefficient {k + 1}: expected {d} diag coordinates"
                )
            out[k] = arr
        else:
            out[k] = algebra.diag_coords(eq.ctx, arr)
    return out


def _coeff_matrices(eq):
    vals = None
    mats = []
    for k, c in enumerate(eq.coeffs):
        if not isinstance(c, poly.Polynomial):
            arr = np.asarray(c, dtype=complex)
            if arr.ndim == 2:
                mats.append(linalg.as_cmatrix(arr))
                continue
        if vals is None:
            vals = _coeff_diag_values(eq)
        mats.append(algebra.from_diag_coords(eq.ctx, vals[k]))
    return mats


def build_scalar_polys(eq):
    """The d monic degree-n scalar polynomials, one per eigenvalue."""
    vals = _coeff_diag_values(eq)
    n, d = vals.shape
    gs = []
    for i in range(d):
        asc = np.empty(n + 1, dtype=complex)
        asc[n] = 1.0
        for k in range(n):
            asc[n - 1 - k] = vals[k, i]
        gs.append(poly.Polynomial(asc))
    return gs


def verify_solution(eq, x):
    """Equation residual ||X^n + sum A_k X^(n-k)||_F by Horner evaluation."""
    x = linalg.as_cmatrix(x)
    if x.shape != eq.ctx.Q.shape:
        raise DimensionMismatch(f"expected {eq.ctx.Q.shape}, got {x.shape}")
    mats = _coeff_matrices(eq)
    acc = x + mats[0]
    for a in mats[1:]:
        acc = acc @ x + a
    return linalg.frobenius(acc)


def commutation_residual(eq, x):
    """||XQ - QX||_F, the membership half of the solution certificate."""
    q = eq.ctx.Q
    return linalg.frobenius(x @ q - q @ x)


@dataclass
class Solution:
    indices: tuple
    u: np.ndarray
    X: np.ndarray
    residual: float


@dataclass
class SolutionSet:
    scalar_polys: list
    distinct_roots: list
    counts: list
    total: int
    solutions: list
    warnings: list = field(default_factory=list)


def _cluster(g, cluster_tol):
    tol = 1e-8 if cluster_tol is None else cluster_tol
    s = poly.scale(g)
    rs = poly.roots(g)
    clusters = poly.cluster_roots(rs, tol * s, tol, poly=g)
    # counts that move under a 4x tolerance swing mean n_i sits on the
    # numerical knife edge; report both.
    lo = len(poly.cluster_roots(rs, tol * s / 4, tol / 4))
    hi = len(poly.cluster_roots(rs, tol * s * 4, tol * 4))
    flag = None
    if lo != len(clusters) or hi != len(clusters):
        flag = (hi, lo)
    return clusters, flag


def count_solutions(eq, cluster_tol=None):
    """Per-index distinct-root counts and their product."""
    gs = build_scalar_polys(eq)
    counts = []
    for g in gs:
        clusters, _ = _cluster(g, cluster_tol)
        counts.append(len(clusters))
    return counts, math.prod(counts)


def solve(
    eq,
    cluster_tol=None,
    residual_tol=DEFAULT_RESIDUAL_TOL,
    enumeration_cap=DEFAULT_ENUMERATION_CAP,
    truncate=False,
):
    """Enumerate all solutions of the equation in the commutant of Q.

    Root tuples are enumerated lexicographically, with the distinct roots of
    each scalar polynomial sorted by (real, imag). Every candidate is built
    as T diag(u) T^-1 and certified by its equation residual; residuals over
    residual_tol * (1+||X||_F)^n * (1+max ||A_k||_F) are reported in
    warnings, never dropped.
    """
    gs = build_scalar_polys(eq)
    all_clusters = []
    warnings_out = list(eq.ctx.warnings)
    for i, g in enumerate(gs):
        clusters, flag = _cluster(g, cluster_tol)
        if flag is not None:
            warnings_out.append(
                f"g_{i + 1}: distinct-root count is tolerance-sensitive "
                f"(merged {flag[0]}, split {flag[1]}, using {len(clusters)})"
            )
        all_clusters.append(clusters)
    counts = [len(c) for c in all_clusters]
    total = math.prod(counts)
    if total > enumeration_cap and not truncate:
        raise EnumerationCapExceeded(
            f"{total} solutions exceed cap {enumeration_cap}; pass truncate=True"
        )

    mats = _coeff_matrices(eq)
    coeff_norm = max(linalg.frobenius(a) for a in mats) if mats else 0.0
    n = eq.n
    solutions = []
    truncated = False
    for indices in itertools.product(*(range(c) for c in counts)):
        if len(solutions) >= enumeration_cap:
            truncated = True
            break
        u = np.array(
            [all_clusters[i][j].representative for i, j in enumerate(indices)]
        )
        x = algebra.from_diag_coords(eq.ctx, u)
        acc = x + mats[0]
        for a in mats[1:]:
            acc = acc @ x + a
        resid = linalg.frobenius(acc)
        scale = (1.0 + linalg.frobenius(x)) ** n * (1.0 + coeff_norm)
        if resid > residual_tol * scale:
            warnings_out.append(
                f"solution {indices}: residual {resid:.3e} exceeds "
                f"{residual_tol * scale:.3e}"
            )
        solutions.append(Solution(indices, u, x, resid))
    if truncated:
        warnings_out.append(
            f"enumeration truncated at {enumeration_cap} of {total} solutions"
        )
    return SolutionSet(gs, all_clusters, counts, total, solutions, warnings_out)
