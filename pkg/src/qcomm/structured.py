"""Closed-form diagonalizers for weighted circulants, circulants, companions.

A weighted circulant carries nonzero weights on the superdiagonal and in the
bottom-left corner; its characteristic polynomial is x^d - k with k the
product of the weights, so a diagonal conjugation reduces it to a scalar
multiple of the basic cyclic shift, which the DFT matrix diagonalizes. A
companion matrix of a polynomial with distinct roots is diagonalized by the
Vandermonde matrix in those roots. Both paths produce a QContext without
running an eigensolver.
"""

from dataclasses import dataclass

import numpy as np

from . import linalg
from .algebra import QContext
from .errors import (
    NotDistinctEigenvalues,
    NumericalFailure,
    ZeroWeight,
)
from .poly import Polynomial, from_roots


@dataclass(frozen=True)
class WeightedCirculantSpec:
    """Weights (k_1,...,k_d), their product k, and the chosen d-th root of k.

    The root branch is always principal (argument in (-pi/d, pi/d]); any
    branch gives the same solution set, it only relabels the eigenvalues.
    """

    weights: tuple
    k: complex
    lam: complex

    @classmethod
    def from_weights(cls, weights):
        weights = tuple(complex(w) for w in weights)
        if any(w == 0 for w in weights):
            raise ZeroWeight("weighted circulant weights must be nonzero")
        k = complex(np.prod(weights))
        d = len(weights)
        lam = abs(k) ** (1.0 / d) * np.exp(1j * np.angle(k) / d)
        return cls(weights, k, lam)


def cyclic_shift(d):
    """The basic d x d cyclic shift (ones on the superdiagonal and corner)."""
    return weighted_circulant_matrix(WeightedCirculantSpec.from_weights([1.0] * d))


def weighted_circulant_matrix(spec):
    """Matrix with spec.weights[:-1] on the superdiagonal and weights[-1]
    in the bottom-left corner."""
    w = spec.weights
    d = len(w)
    q = np.zeros((d, d), dtype=complex)
    for i in range(d - 1):
        q[i, i + 1] = w[i]
    q[d - 1, 0] = w[d - 1]
    return q


def dft_matrix(d):
    """Unitary DFT matrix: F[r, c] = omega**(r c) / sqrt(d), omega = e^{2 pi i / d}."""
    if d < 1:
        raise ValueError("d must be positive")
    idx = np.arange(d)
    omega = np.exp(2j * np.pi / d)
    return omega ** np.outer(idx, idx) / np.sqrt(d)


def _structured_context(q, eigs, T, T_inv, provenance, distinct_tol, resid_bound):
    dec = linalg.make_decomposition(eigs, T, T_inv)
    resid = linalg.frobenius(T_inv @ q @ T - np.diag(dec.eigenvalues))
    if resid > resid_bound:
        raise NumericalFailure(
            f"closed-form diagonalization residual {resid:.3e} exceeds {resid_bound:.3e}"
        )
    if not linalg.check_distinct(dec, distinct_tol):
        raise NotDistinctEigenvalues(
            f"minimum eigenvalue gap {dec.min_gap:.3e} below threshold"
        )
    return QContext(q, dec, q.shape[0], distinct_tol, provenance=provenance)


def weighted_circulant_context(spec, distinct_tol=1e-8):
    """Closed-form context for a weighted circulant.

    With lam the chosen d-th root of the weight product, the scaling matrix
    L = (k/k_d) diag(1, lam/k_1, lam^2/(k_1 k_2), ...) conjugates Q to
    lam * (cyclic shift), and T = L F^-1 then gives
    T^-1 Q T = diag(lam w^d, lam w^{d-1}, ..., lam w), w = e^{2 pi i / d};
    the i-th eigenvalue is lam * w^(d-i+1).
    """
    w = spec.weights
    d = len(w)
    lam = spec.lam
    diag = np.empty(d, dtype=complex)
    diag[0] = 1.0
    for j in range(1, d):
        diag[j] = lam ** j / np.prod(np.asarray(w[:j], dtype=complex))
    diag *= spec.k / w[-1]
    F = dft_matrix(d)
    F_inv = F.conj().T
    T = diag[:, None] * F_inv
    T_inv = F / diag[None, :]
    omega = np.exp(2j * np.pi / d)
    eigs = lam * omega ** (np.arange(d, 0, -1) % d)
    q = weighted_circulant_matrix(spec)
    return _structured_context(
        q, eigs, T, T_inv, "weighted-circulant", distinct_tol,
        1e-10 * (1.0 + abs(lam)) * max(1.0, np.linalg.cond(T)),
    )


def circulant_scalar_coeffs(a, i):
    """Diag-coordinate i (1-based) of a circulant with first-row coefficients a.

    Direct inverse-DFT-type sum: sum_j a[j-1] * omega^{-(i-1)(j-1)}; equals
    the polynomial with coefficients a evaluated at omega^(d-i+1).
    """
    a = np.asarray(a, dtype=complex)
    d = len(a)
    omega = np.exp(2j * np.pi / d)
    j = np.arange(d)
    return complex(np.sum(a * omega ** (-(i - 1) * j)))


def circulant_context(a, distinct_tol=1e-8):
    """Closed-form context for the circulant with first-row coefficients a.

    Every circulant is diagonalized by T = F^-1; the i-th eigenvalue is the
    coefficient polynomial evaluated at omega^(d-i+1), matching the
    weighted-circulant eigenvalue ordering with unit weights.
    """
    a = np.asarray(a, dtype=complex)
    d = len(a)
    c = cyclic_shift(d)
    q = np.zeros((d, d), dtype=complex)
    power = np.eye(d, dtype=complex)
    for j in range(d):
        q += a[j] * power
        power = power @ c
    F = dft_matrix(d)
    T = F.conj().T
    eigs = np.array([circulant_scalar_coeffs(a, i) for i in range(1, d + 1)])
    scale = 1.0 + float(np.max(np.abs(eigs)))
    return _structured_context(q, eigs, T, F, "circulant", distinct_tol, 1e-10 * scale * d)


def companion_matrix(coeffs):
    """Companion matrix of the monic polynomial with the given ascending
    coefficients (length d+1, leading coefficient 1)."""
    c = np.asarray(coeffs, dtype=complex)
    d = len(c) - 1
    pi = np.zeros((d, d), dtype=complex)
    if d > 1:
        pi[:-1, 1:] = np.eye(d - 1)
    pi[-1, :] = -c[:-1]
    return pi


def companion_context(lambdas, distinct_tol=1e-8):
    """Closed-form context for the companion matrix of prod (x - lambda_i).

    T is the Vandermonde matrix with T[r, c] = lambdas[c]**r, which conjugates
    the companion matrix to diag(lambdas) in the given order.
    """
    lambdas = np.asarray(lambdas, dtype=complex)
    d = len(lambdas)
    gap = linalg._min_gap(lambdas)
    if gap <= distinct_tol * max(1.0, float(np.max(np.abs(lambdas)))):
        raise NotDistinctEigenvalues("companion eigenvalues are not distinct")
    f = from_roots(lambdas)
    pi = companion_matrix(f.coeffs)
    T = np.vander(lambdas, increasing=True).T.astype(complex)
    T_inv = linalg.inverse(T)
    lam_max = float(np.max(np.abs(lambdas)))
    bound = 1e-9 * (1.0 + max(1.0, lam_max) ** d) * max(1.0, np.linalg.cond(T))
    return _structured_context(pi, lambdas, T, T_inv, "companion", distinct_tol, bound)


def characteristic_poly(lambdas):
    """Monic polynomial with the given roots (convenience re-export)."""
    return from_roots(lambdas)


__all__ = [
    "WeightedCirculantSpec",
    "weighted_circulant_matrix",
    "weighted_circulant_context",
    "dft_matrix",
    "cyclic_shift",
    "circulant_scalar_coeffs",
    "circulant_context",
    "companion_matrix",
    "companion_context",
    "characteristic_poly",
    "Polynomial",
]
