"""Complex univariate polynomials: evaluation, root finding, root clustering.

Coefficients are stored in ascending order: coeffs[j] multiplies x**j.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DegreeZero, ZeroPolynomial


class Polynomial:
    """Dense complex polynomial with ascending coefficients.

    Trailing (high-order) zero coefficients are trimmed at construction,
    so the leading coefficient is nonzero unless the polynomial is
    identically zero (empty coefficient vector).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        c = np.atleast_1d(np.asarray(coeffs, dtype=complex))
        nz = np.nonzero(c)[0]
        self.coeffs = c[: nz[-1] + 1] if nz.size else c[:0]

    @property
    def degree(self):
        """Degree, or -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __call__(self, z):
        """Evaluate at ``z`` (scalar or array) by Horner's scheme."""
        z = np.asarray(z, dtype=complex)
        acc = np.zeros_like(z)
        for c in self.coeffs[::-1]:
            acc = acc * z + c
        return acc if acc.shape else complex(acc)

    def derivative(self):
        if len(self.coeffs) <= 1:
            return Polynomial([])
        j = np.arange(1, len(self.coeffs))
        return Polynomial(self.coeffs[1:] * j)

    def monic(self):
        if self.degree < 0:
            raise ZeroPolynomial("cannot normalize the zero polynomial")
        return Polynomial(self.coeffs / self.coeffs[-1])

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)})"


def from_roots(rs):
    """Monic polynomial with the given roots, by incremental factor expansion."""
    coeffs = np.array([1.0 + 0.0j])
    for r in rs:
        coeffs = np.concatenate(([0.0j], coeffs)) - r * np.concatenate((coeffs, [0.0j]))
    return Polynomial(coeffs)


def scale(p):
    """Coefficient-magnitude normalizer: max(1, max|c_j| / |leading|)."""
    if p.degree < 0:
        return 1.0
    return max(1.0, float(np.max(np.abs(p.coeffs)) / abs(p.coeffs[-1])))


def roots(p):
    """All ``degree(p)`` roots, counted with multiplicity.

    Eigenvalues of the companion matrix, then one Newton polishing pass on
    the original polynomial. Raises ZeroPolynomial / DegreeZero on
    degenerate input, which in the solver pipeline signals a broken monic
    scalar equation rather than a valid empty answer.
    """
    if p.degree < 0:
        raise ZeroPolynomial("zero polynomial has no well-defined root set")
    if p.degree == 0:
        raise DegreeZero("nonzero constant polynomial has no roots")
    c = p.monic().coeffs
    n = p.degree
    comp = np.zeros((n, n), dtype=complex)
    if n > 1:
        comp[1:, :-1] = np.eye(n - 1)
    comp[:, -1] = -c[:-1]
    rs = np.linalg.eigvals(comp)
    dp = p.derivative()
    pv = p(rs)
    dv = dp(rs)
    safe = np.where(np.abs(dv) > 0, dv, 1.0)
    step = np.where(np.abs(dv) > 0, pv / safe, 0.0)
    return rs - step


@dataclass
class RootCluster:
    """A group of numerically coincident roots.

    representative is the mean of the members (multiplicity-weighted,
    order-independent); member_residual is max |p(root)| over members when
    the source polynomial is supplied.
    """

    representative: complex
    multiplicity: int
    member_residual: float = 0.0


def cluster_roots(rs, tol_abs, tol_rel, poly=None):
    """Partition roots into clusters by single-linkage proximity.

    Two roots join one cluster iff some chain connects them with each link
    shorter than tol_abs + tol_rel * max(|r1|, |r2|). Clusters are sorted
    by (real, imag) of their representative, so output order does not
    depend on input order.
    """
    rs = np.asarray(rs, dtype=complex)
    m = len(rs)
    parent = list(range(m))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(m):
        for j in range(i + 1, m):
            thr = tol_abs + tol_rel * max(abs(rs[i]), abs(rs[j]))
            if abs(rs[i] - rs[j]) <= thr:
                parent[find(i)] = find(j)

    groups = {}
    for i in range(m):
        groups.setdefault(find(i), []).append(rs[i])

    clusters = []
    for members in groups.values():
        members = np.asarray(members)
        rep = complex(members.mean())
        resid = float(np.max(np.abs(poly(members)))) if poly is not None else 0.0
        clusters.append(RootCluster(rep, len(members), resid))
    clusters.sort(key=lambda c: (c.representative.real, c.representative.imag))
    return clusters
