"""The commutant algebra of a matrix Q with distinct eigenvalues.

Every matrix commuting with Q is a polynomial in Q of degree <= d-1, and in
the eigenbasis of Q the whole algebra becomes diagonal: a member is fully
described by its d diagonal coordinates (the values of its representation
polynomial at the eigenvalues). This module converts between the three
views: matrix, representation polynomial, diagonal coordinates.
"""

import warnings
from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .errors import (
    DimensionMismatch,
    IllConditionedWarning,
    NotDistinctEigenvalues,
    NotMember,
)
from .poly import Polynomial

DEFAULT_TOL = 1e-8


@dataclass
class QContext:
    """A verified diagonalization of Q, shared by all algebra operations.

    provenance records where T came from: "generic" for the eigensolver,
    or a structured tag ("weighted-circulant", "circulant", "companion")
    when T is a closed form.
    """

    Q: np.ndarray
    dec: linalg.EigenDecomposition
    d: int
    distinct_tol: float
    provenance: str = "generic"
    warnings: list = field(default_factory=list)

    @property
    def eigenvalues(self):
        return self.dec.eigenvalues

    @property
    def T(self):
        return self.dec.T

    @property
    def T_inv(self):
        return self.dec.T_inv


def make_context(q, distinct_tol=DEFAULT_TOL):
    """Diagonalize Q and verify its eigenvalues are numerically distinct."""
    q = linalg.as_cmatrix(q)
    dec = linalg.eig(q)
    if not linalg.check_distinct(dec, distinct_tol):
        raise NotDistinctEigenvalues(
            f"minimum eigenvalue gap {dec.min_gap:.3e} below threshold"
        )
    ctx = QContext(q, dec, q.shape[0], distinct_tol)
    if dec.cond_T > 1e8:
        ctx.warnings.append(f"ill-conditioned eigenbasis: cond_T ~ {dec.cond_T:.2e}")
    return ctx


def is_member(ctx, a, tol=DEFAULT_TOL):
    """True iff ||AQ - QA||_F <= tol * (1+||A||_F) * (1+||Q||_F)."""
    a = linalg.as_cmatrix(a)
    if a.shape != ctx.Q.shape:
        raise DimensionMismatch(f"expected {ctx.Q.shape}, got {a.shape}")
    comm = linalg.frobenius(a @ ctx.Q - ctx.Q @ a)
    return comm <= tol * (1.0 + linalg.frobenius(a)) * (1.0 + linalg.frobenius(ctx.Q))


def vandermonde_solve(nodes, values):
    """Solve sum_j c_j * x_i^j = v_i by the Björck–Pereyra progressive scheme.

    Falls back to LU on nearly coincident nodes (excluded upstream by the
    distinct-eigenvalue check, but cheap insurance).
    """
    x = np.asarray(nodes, dtype=complex)
    a = np.array(values, dtype=complex)
    n = len(x)
    if n != len(a):
        raise DimensionMismatch("nodes and values must have equal length")
    gap = linalg._min_gap(x)
    if n > 1 and gap < 1e-12 * max(1.0, float(np.max(np.abs(x)))):
        V = np.vander(x, increasing=True)
        return linalg.solve(V, a)
    for k in range(n - 1):
        for j in range(n - 1, k, -1):
            a[j] = (a[j] - a[j - 1]) / (x[j] - x[j - k - 1])
    for k in range(n - 2, -1, -1):
        for j in range(k, n - 1):
            a[j] -= x[k] * a[j + 1]
    return a


def _similar_diag(ctx, a):
    """T^-1 A T, its diagonal, and the off-diagonal Frobenius mass."""
    m = ctx.T_inv @ a @ ctx.T
    diag = np.diag(m).copy()
    off = linalg.frobenius(m - np.diag(diag))
    return diag, off


def diag_coords(ctx, a, tol=DEFAULT_TOL):
    """Diagonal of T^-1 A T, in the context's eigenvalue order.

    This is the forgiving projection: small off-diagonal residue is kept as
    a diagnostic, gross commutation failure raises NotMember.
    """
    a = linalg.as_cmatrix(a)
    if a.shape != ctx.Q.shape:
        raise DimensionMismatch(f"expected {ctx.Q.shape}, got {a.shape}")
    if not is_member(ctx, a, max(tol, 1e-6)):
        raise NotMember("matrix does not commute with Q")
    diag, _ = _similar_diag(ctx, a)
    return diag


def offdiag_mass(ctx, a):
    """Off-diagonal Frobenius mass of T^-1 A T (membership diagnostic)."""
    _, off = _similar_diag(ctx, linalg.as_cmatrix(a))
    return off


def repr_poly(ctx, a, tol=DEFAULT_TOL):
    """Representation polynomial of a member: the unique degree <= d-1
    polynomial f with A = f(Q).

    Coefficients come from the Vandermonde system in the eigenvalues with
    the diagonal of T^-1 A T as right-hand side. Rejects non-members (by
    off-diagonal mass) with NotMember; warns when the node set is badly
    conditioned.
    """
    a = linalg.as_cmatrix(a)
    if a.shape != ctx.Q.shape:
        raise DimensionMismatch(f"expected {ctx.Q.shape}, got {a.shape}")
    diag, off = _similar_diag(ctx, a)
    bound = tol * (1.0 + linalg.frobenius(a)) * ctx.dec.cond_T
    if off > bound:
        raise NotMember(
            f"off-diagonal mass {off:.3e} of T^-1 A T exceeds tolerance {bound:.3e}"
        )
    vcond = np.linalg.cond(np.vander(ctx.eigenvalues, increasing=True))
    if vcond > 1e10:
        warnings.warn(
            f"Vandermonde system condition ~ {vcond:.2e}; coefficients may be inaccurate",
            IllConditionedWarning,
        )
    return Polynomial(vandermonde_solve(ctx.eigenvalues, diag))


def from_diag_coords(ctx, u):
    """T diag(u) T^-1: the member with the given diagonal coordinates."""
    u = np.asarray(u, dtype=complex)
    if u.shape != (ctx.d,):
        raise DimensionMismatch(f"expected {ctx.d} coordinates, got shape {u.shape}")
    return (ctx.T * u) @ ctx.T_inv


def from_repr_poly(ctx, p):
    """Evaluate a polynomial at Q.

    Degree <= d-1 uses the Horner sum in powers of Q directly; higher
    degrees are reduced by evaluating at the eigenvalues and rebuilding from
    diagonal coordinates, which is the same member by Cayley–Hamilton and
    numerically steadier than forming Q**d.
    """
    if not isinstance(p, Polynomial):
        p = Polynomial(p)
    if p.degree >= ctx.d:
        return from_diag_coords(ctx, p(ctx.eigenvalues))
    eye = np.eye(ctx.d, dtype=complex)
    acc = np.zeros_like(ctx.Q)
    for c in p.coeffs[::-1]:
        acc = acc @ ctx.Q + c * eye
    return acc
