#!/usr/bin/env python3
"""Residual growth as the metric condition number increases.

Builds square matrices with a prescribed singular value spread, so
cond(V†V) is controlled exactly, and tracks the key residuals as the
conditioning worsens.  Shows where the default tolerances stop being
comfortable (the rank cutoff rejects inputs with cond around 1/rank_tol).

Usage:
    python scripts/condition_sweep.py --dim 6 --trials 20
"""

import argparse

import numpy as np

import lowdin as lo


def controlled_matrix(rng, n, metric_condition):
    """Square V with cond(V†V) equal to the requested value."""
    spread = np.sqrt(metric_condition)
    singulars = np.geomspace(1.0, 1.0 / spread, n)
    q1, _ = np.linalg.qr(rng.standard_normal((n, n)))
    q2, _ = np.linalg.qr(rng.standard_normal((n, n)))
    return q1 @ np.diag(singulars) @ q2.T


def worst_residuals(rng, n, metric_condition, trials):
    worst = {"orthonormality": 0.0, "polar": 0.0, "svd": 0.0, "relations": 0.0}
    for _ in range(trials):
        v = controlled_matrix(rng, n, metric_condition)
        phi = lo.symmetric_orthogonalize(v)
        lam = lo.canonical_orthogonalize(v)
        polar = lo.polar_decompose(v)
        svd = lo.reduced_svd(v)
        u = phi.source_eigen.eigenvectors
        scale = 1.0 + lo.max_abs(v)
        worst["orthonormality"] = max(
            worst["orthonormality"],
            lo.verify_orthonormal(phi.matrix).residual,
            lo.verify_orthonormal(lam.matrix).residual,
        )
        worst["polar"] = max(
            worst["polar"], lo.max_abs(lo.reconstruct_polar(polar) - v) / scale
        )
        worst["svd"] = max(
            worst["svd"], lo.max_abs(lo.reconstruct_svd(svd) - v) / scale
        )
        worst["relations"] = max(
            worst["relations"],
            lo.max_abs(lam.matrix - phi.matrix @ u),
            lo.max_abs(phi.matrix - lam.matrix @ u.conj().T),
        )
    return worst


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--dim", type=int, default=6)
    parser.add_argument("--trials", type=int, default=20)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = np.random.default_rng(args.seed)
    print(f"dim {args.dim}, {args.trials} trials per condition level")
    print(
        f"{'cond(V†V)':>10}{'orthonorm':>12}{'polar':>12}{'svd':>12}{'relations':>12}"
    )
    for exponent in range(0, 11, 2):
        cond = 10.0**exponent
        worst = worst_residuals(rng, args.dim, cond, args.trials)
        print(
            f"{cond:>10.0e}{worst['orthonormality']:>12.2e}{worst['polar']:>12.2e}"
            f"{worst['svd']:>12.2e}{worst['relations']:>12.2e}"
        )


if __name__ == "__main__":
    main()
