"""Polar decomposition, reduced SVD, and the inter-basis conversions.

Both factorizations fall out of the orthogonalized bases:

* polar: V = Φ·H with H = M^{1/2} Hermitian positive definite;
* reduced SVD: V = W·diag(σ)·U† with W the canonical basis Λ,
  σ = d^{1/2} descending, and U the metric's eigenvector matrix.

The conversions Λ = Φ·U, Φ = Λ·U†, and Φ = W·U† move between the bases
using one shared eigendecomposition.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch
from .linalg import (
    DEFAULT_TOLERANCES,
    ToleranceConfig,
    as_matrix,
    gram_metric,
    hermitian_power,
)
from .ortho import (
    Method,
    OrthonormalBasis,
    canonical_orthogonalize,
    require_unitary,
    symmetric_orthogonalize,
)


@dataclass(frozen=True)
class PolarFactors:
    """Right polar factorization V = Φ·H.

    ``orthonormal`` is the symmetric basis Φ (n x m), ``positive`` the
    Hermitian positive definite H = M^{1/2} (m x m).
    """

    orthonormal: OrthonormalBasis
    positive: np.ndarray


@dataclass(frozen=True)
class SvdFactors:
    """Reduced SVD V = W·diag(σ)·U†.

    ``left`` is n x m column-orthonormal, ``singular_values`` descending
    and non-negative, ``right`` m x m unitary.
    """

    left: np.ndarray
    singular_values: np.ndarray
    right: np.ndarray


def polar_decompose(v, cfg: ToleranceConfig = DEFAULT_TOLERANCES) -> PolarFactors:
    """Factor a full-column-rank V into Φ·M^{1/2}.

    The orthonormal factor is exactly the symmetric orthogonalization of
    V; the positive factor is the Hermitian square root of the metric.
    """
    v = as_matrix(v)
    basis = symmetric_orthogonalize(v, cfg)
    positive = hermitian_power(gram_metric(v), 0.5, cfg)
    return PolarFactors(orthonormal=basis, positive=positive)


def reduced_svd(v, cfg: ToleranceConfig = DEFAULT_TOLERANCES) -> SvdFactors:
    """Reduced SVD of a full-column-rank V via the canonical basis.

    The left factor is the canonical basis Λ, the singular values are
    the square roots of the metric eigenvalues, and the right factor is
    the metric's eigenvector matrix, all from one eigendecomposition.
    """
    v = as_matrix(v)
    basis = canonical_orthogonalize(v, cfg)
    eigen = basis.source_eigen
    sigma = np.sqrt(np.maximum(eigen.eigenvalues, 0.0))
    return SvdFactors(left=basis.matrix, singular_values=sigma, right=eigen.eigenvectors)


def canonical_from_symmetric(phi: OrthonormalBasis, u) -> OrthonormalBasis:
    """Convert a symmetric basis to the canonical one: Λ = Φ·U.

    ``u`` must be the eigenvector matrix of the metric of the original V.
    """
    if phi.method is not Method.SYMMETRIC:
        raise ValueError(f"expected a symmetric-method basis, got {phi.method}")
    u = require_unitary(u)
    if u.shape[0] != phi.matrix.shape[1]:
        raise DimensionMismatch(
            f"U must be {phi.matrix.shape[1]}x{phi.matrix.shape[1]}, got {u.shape}"
        )
    return OrthonormalBasis(
        matrix=phi.matrix @ u, method=Method.CANONICAL, source_eigen=phi.source_eigen
    )


def symmetric_from_canonical(lam: OrthonormalBasis, u) -> OrthonormalBasis:
    """Convert a canonical basis back to the symmetric one: Φ = Λ·U†."""
    if lam.method is not Method.CANONICAL:
        raise ValueError(f"expected a canonical-method basis, got {lam.method}")
    u = require_unitary(u)
    if u.shape[0] != lam.matrix.shape[1]:
        raise DimensionMismatch(
            f"U must be {lam.matrix.shape[1]}x{lam.matrix.shape[1]}, got {u.shape}"
        )
    return OrthonormalBasis(
        matrix=lam.matrix @ u.conj().T,
        method=Method.SYMMETRIC,
        source_eigen=lam.source_eigen,
    )


def symmetric_from_svd(factors: SvdFactors) -> OrthonormalBasis:
    """Recover the symmetric basis from a reduced SVD: Φ = W·U†.

    Any ambiguity inside a degenerate singular-value cluster cancels
    between W and U, so the product matches V·M^{-1/2} even then.
    """
    left = as_matrix(factors.left)
    right = as_matrix(factors.right)
    if right.shape[0] != left.shape[1]:
        raise DimensionMismatch(
            f"right factor must be {left.shape[1]}x{left.shape[1]}, got {right.shape}"
        )
    return OrthonormalBasis(matrix=left @ right.conj().T, method=Method.SYMMETRIC)


def reconstruct_polar(factors: PolarFactors) -> np.ndarray:
    """Multiply the polar factors back together: Φ·H."""
    phi = as_matrix(factors.orthonormal.matrix)
    h = as_matrix(factors.positive)
    if phi.shape[1] != h.shape[0]:
        raise DimensionMismatch(
            f"cannot multiply {phi.shape} orthonormal factor by {h.shape} positive factor"
        )
    return phi @ h


def reconstruct_svd(factors: SvdFactors) -> np.ndarray:
    """Multiply the SVD factors back together: W·diag(σ)·U†."""
    left = as_matrix(factors.left)
    right = as_matrix(factors.right)
    sigma = np.asarray(factors.singular_values, dtype=float)
    if sigma.ndim != 1 or sigma.shape[0] != left.shape[1] or right.shape[0] != sigma.shape[0]:
        raise DimensionMismatch(
            f"inconsistent SVD factor shapes {left.shape}, {sigma.shape}, {right.shape}"
        )
    return (left * sigma) @ right.conj().T
