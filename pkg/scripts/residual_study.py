#!/usr/bin/env python3
"""Residual survey over a random matrix ensemble.

Draws full-rank matrices with uniform entries, runs every factorization
and cross-identity, and prints worst/median residuals per check.  Useful
for eyeballing how much headroom the tolerance contracts have.

Usage:
    python scripts/residual_study.py --trials 200 --max-dim 8 --complex
"""

import argparse

import numpy as np

import lowdin as lo

CHECKS = (
    "phi_orthonormality",
    "lambda_orthonormality",
    "polar_reconstruction",
    "svd_reconstruction",
    "lambda_vs_phi_u",
    "phi_vs_lambda_udagger",
    "phi_vs_w_udagger",
    "projection_sums_vs_d",
    "gram_vs_sscp_spectra",
)


def draw(rng, max_dim, complex_, cond_limit):
    while True:
        n = int(rng.integers(1, max_dim + 1))
        m = int(rng.integers(1, n + 1))
        v = rng.uniform(-1.0, 1.0, (n, m))
        if complex_:
            v = v + 1j * rng.uniform(-1.0, 1.0, (n, m))
        sv = np.linalg.svd(v, compute_uv=False)
        if sv[-1] > 0.0 and (sv[0] / sv[-1]) ** 2 <= cond_limit:
            return v


def residuals_for(v):
    phi = lo.symmetric_orthogonalize(v)
    lam = lo.canonical_orthogonalize(v)
    polar = lo.polar_decompose(v)
    svd = lo.reduced_svd(v)
    u = phi.source_eigen.eigenvectors
    d = phi.source_eigen.eigenvalues
    scale = 1.0 + lo.max_abs(v)
    sums = lo.projection_square_sums(v, lam)
    spectra = lo.gram_sscp_eigenvalue_check(v)
    return {
        "phi_orthonormality": lo.verify_orthonormal(phi.matrix).residual,
        "lambda_orthonormality": lo.verify_orthonormal(lam.matrix).residual,
        "polar_reconstruction": lo.max_abs(lo.reconstruct_polar(polar) - v) / scale,
        "svd_reconstruction": lo.max_abs(lo.reconstruct_svd(svd) - v) / scale,
        "lambda_vs_phi_u": lo.max_abs(lam.matrix - phi.matrix @ u),
        "phi_vs_lambda_udagger": lo.max_abs(phi.matrix - lam.matrix @ u.conj().T),
        "phi_vs_w_udagger": lo.max_abs(
            phi.matrix - lo.symmetric_from_svd(svd).matrix
        ),
        "projection_sums_vs_d": float(np.max(np.abs(sums - d) / d)),
        "gram_vs_sscp_spectra": spectra.max_relative_gap,
    }


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--trials", type=int, default=200)
    parser.add_argument("--max-dim", type=int, default=8)
    parser.add_argument("--complex", action="store_true", dest="complex_")
    parser.add_argument("--cond-limit", type=float, default=1e6)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = np.random.default_rng(args.seed)
    table = {name: [] for name in CHECKS}
    for _ in range(args.trials):
        v = draw(rng, args.max_dim, args.complex_, args.cond_limit)
        for name, value in residuals_for(v).items():
            table[name].append(value)

    kind = "complex" if args.complex_ else "real"
    print(
        f"{args.trials} {kind} draws, n <= {args.max_dim}, "
        f"cond(V†V) <= {args.cond_limit:.0e}"
    )
    print(f"{'check':<24}{'median':>12}{'worst':>12}")
    for name in CHECKS:
        values = np.array(table[name])
        print(f"{name:<24}{np.median(values):>12.2e}{np.max(values):>12.2e}")


if __name__ == "__main__":
    main()
