"""Symmetric, canonical, and general orthogonalization.

Given a full-column-rank V (columns are the vectors), every orthonormal
basis of its column space has the form Z = V·M^{-1/2}·B for a unitary B,
where M = V†V.  B = I gives the symmetric basis Φ, the unique choice
that treats all input vectors democratically; B = U, the eigenvector
matrix of M, gives the canonical basis Λ = V·U·d^{-1/2} aligned with
the metric's eigenstructure.

Both are computed from one shared eigendecomposition of M, with Φ
assembled as (V·U·d^{-1/2})·U†.  That expression equals V·M^{-1/2}
exactly and keeps the analytic identities Λ = Φ·U and Φ = Λ·U† tight to
a few ulps regardless of how ill-conditioned the metric is.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, NotUnitary
from .linalg import (
    DEFAULT_TOLERANCES,
    HermitianEigen,
    ToleranceConfig,
    as_matrix,
    gram_metric,
    hermitian_eigen,
    max_abs,
    require_positive_definite,
)

# Unitarity residual bound per matrix dimension, matching the eigenvector
# matrix contract of the eigensolver.
UNITARY_TOL = 1e-12


class Method(enum.Enum):
    """How an orthonormal basis was produced."""

    SYMMETRIC = "symmetric"
    CANONICAL = "canonical"
    GENERAL = "general"


@dataclass(frozen=True)
class OrthonormalBasis:
    """Column-orthonormal matrix tagged with the method that built it.

    ``source_eigen`` carries the (U, d) of the metric used in the
    construction when available, so derived factorizations can reuse the
    identical eigendecomposition.
    """

    matrix: np.ndarray
    method: Method
    source_eigen: HermitianEigen | None = None


@dataclass(frozen=True)
class OrthonormalityReport:
    """Result of the Z†Z = I check: max residual and a pass flag."""

    residual: float
    passed: bool


def verify_orthonormal(
    z, cfg: ToleranceConfig = DEFAULT_TOLERANCES
) -> OrthonormalityReport:
    """Report max|Z†Z - I| and whether it clears ``orthonormality_tol``.

    A failing matrix yields ``passed=False``, never an exception.
    """
    z = as_matrix(z)
    product = z.conj().T @ z
    residual = max_abs(product - np.eye(z.shape[1]))
    return OrthonormalityReport(residual=residual, passed=residual <= cfg.orthonormality_tol)


def require_unitary(b) -> np.ndarray:
    """Validate that B is square with max|B†B - I| <= 1e-12 * dim."""
    b = as_matrix(b)
    if b.shape[0] != b.shape[1]:
        raise DimensionMismatch(f"unitary matrix must be square, got {b.shape}")
    residual = max_abs(b.conj().T @ b - np.eye(b.shape[0]))
    bound = UNITARY_TOL * b.shape[0]
    if residual > bound:
        raise NotUnitary(f"max|B†B - I| = {residual:.3e} exceeds {bound:.3e}")
    return b


def _metric_eigen(v: np.ndarray, cfg: ToleranceConfig) -> HermitianEigen:
    eigen = hermitian_eigen(gram_metric(v), cfg)
    require_positive_definite(eigen, cfg)
    return eigen


def _canonical_matrix(v: np.ndarray, eigen: HermitianEigen) -> np.ndarray:
    # Columns arrive ordered by descending eigenvalue because the
    # eigendecomposition is.
    return (v @ eigen.eigenvectors) * eigen.eigenvalues**-0.5


def _symmetric_matrix(v: np.ndarray, eigen: HermitianEigen) -> np.ndarray:
    return _canonical_matrix(v, eigen) @ eigen.eigenvectors.conj().T


def symmetric_orthogonalize(
    v, cfg: ToleranceConfig = DEFAULT_TOLERANCES
) -> OrthonormalBasis:
    """Symmetric orthogonalization Φ = V·M^{-1/2}.

    Parameters
    ----------
    v : array_like
        n x m matrix of full column rank within ``rank_tol``.

    Returns
    -------
    OrthonormalBasis
        Φ with ``method=SYMMETRIC`` and the metric eigendecomposition
        attached.

    Raises
    ------
    SingularMetric
        If the metric fails the rank cutoff, with condition diagnostics.
    """
    v = as_matrix(v)
    eigen = _metric_eigen(v, cfg)
    phi = _symmetric_matrix(v, eigen)
    return OrthonormalBasis(matrix=phi, method=Method.SYMMETRIC, source_eigen=eigen)


def canonical_orthogonalize(
    v, cfg: ToleranceConfig = DEFAULT_TOLERANCES
) -> OrthonormalBasis:
    """Canonical orthogonalization Λ = V·U·d^{-1/2}.

    Column j of Λ pairs with the j-th largest metric eigenvalue; the
    (U, d) used are attached as ``source_eigen``.
    """
    v = as_matrix(v)
    eigen = _metric_eigen(v, cfg)
    lam = _canonical_matrix(v, eigen)
    return OrthonormalBasis(matrix=lam, method=Method.CANONICAL, source_eigen=eigen)


def orthogonalize_general(
    v, b, cfg: ToleranceConfig = DEFAULT_TOLERANCES
) -> OrthonormalBasis:
    """General orthogonalization Z = V·M^{-1/2}·B for unitary B.

    ``b = I`` reproduces the symmetric basis bit for bit; ``b`` equal to
    the metric's eigenvector matrix reproduces the canonical basis.
    """
    v = as_matrix(v)
    b = require_unitary(b)
    if b.shape[0] != v.shape[1]:
        raise DimensionMismatch(
            f"B must be {v.shape[1]}x{v.shape[1]} for a matrix with "
            f"{v.shape[1]} columns, got {b.shape}"
        )
    eigen = _metric_eigen(v, cfg)
    z = _symmetric_matrix(v, eigen) @ b
    return OrthonormalBasis(matrix=z, method=Method.GENERAL, source_eigen=eigen)
