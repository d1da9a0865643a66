"""Command line front end.

Reads a matrix from a delimited text file, runs one of the
decompositions or checks, writes the factor matrices as
``<command>_<factor>.<ext>`` files plus a ``report.json``, and exits 0
only if every residual clears its tolerance.  Exit status 2 flags an
input or usage problem, 3 a numerical failure (singular metric, no
convergence), and 1 a run whose residuals missed the configured
tolerances.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .decompositions import polar_decompose, reconstruct_polar, reconstruct_svd, reduced_svd
from .errors import LinalgError, SingularMetric
from .linalg import DEFAULT_TOLERANCES, ToleranceConfig, max_abs
from .matrixio import MatrixFileError, parse_matrix_file, write_matrix_file
from .ortho import canonical_orthogonalize, symmetric_orthogonalize, verify_orthonormal
from .pca import gram_sscp_eigenvalue_check, principal_components, projection_square_sums

COMMANDS = ("symmetric", "canonical", "polar", "svd", "pca", "verify", "relations")

# Pass/fail bounds for residuals that have no ToleranceConfig field: the
# analytic relations are exact identities up to a few ulps, the spectral
# and projection-sum matches hold to roundoff amplified by conditioning.
RELATION_TOL = 1e-12
PROJECTION_SUM_TOL = 1e-9
GRAM_SSCP_TOL = 1e-9


@dataclass
class RunConfig:
    """Everything one CLI invocation needs."""

    command: str
    input_path: Path
    output_dir: Path = Path(".")
    tolerances: ToleranceConfig = DEFAULT_TOLERANCES
    output_precision: int = 17
    format: str = "csv"

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        if not 1 <= self.output_precision <= 17:
            raise ValueError("output precision must be between 1 and 17")
        if self.format not in ("csv", "tsv"):
            raise ValueError(f"unknown format {self.format!r}")


@dataclass
class VerificationReport:
    """Machine-readable outcome written to ``report.json``."""

    command: str
    rows: int
    cols: int
    residuals: dict
    eigenvalues: list
    singular_values: list
    condition_estimate: float | None
    passed: bool
    elapsed_ms: float
    error: dict | None = None

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "rows": self.rows,
            "cols": self.cols,
            "residuals": {k: _json_number(v) for k, v in sorted(self.residuals.items())},
            "eigenvalues": [_json_number(v) for v in self.eigenvalues],
            "singular_values": [_json_number(v) for v in self.singular_values],
            "condition_estimate": _json_number(self.condition_estimate),
            "pass": self.passed,
            "elapsed_ms": self.elapsed_ms,
            "error": self.error,
        }


def _json_number(value):
    if value is None:
        return None
    value = float(value)
    if math.isfinite(value):
        return value
    return "inf" if value > 0 else ("-inf" if value < 0 else "nan")


def _tolerance_for(name: str, cfg: ToleranceConfig) -> float:
    return {
        "orthonormality": cfg.orthonormality_tol,
        "polar_reconstruction": cfg.reconstruction_tol,
        "svd_reconstruction": cfg.reconstruction_tol,
        "relation_lambda_phi_u": RELATION_TOL,
        "relation_phi_w_udagger": RELATION_TOL,
        "projection_sum_gap": PROJECTION_SUM_TOL,
        "gram_sscp_gap": GRAM_SSCP_TOL,
    }[name]


@dataclass
class _CommandOutput:
    residuals: dict = field(default_factory=dict)
    files: dict = field(default_factory=dict)
    eigenvalues: list = field(default_factory=list)
    singular_values: list = field(default_factory=list)
    condition: float | None = None


def _relative_reconstruction(product: np.ndarray, v: np.ndarray) -> float:
    return max_abs(product - v) / (1.0 + max_abs(v))


def _run_symmetric(v, cfg) -> _CommandOutput:
    out = _CommandOutput()
    basis = symmetric_orthogonalize(v, cfg)
    out.residuals["orthonormality"] = verify_orthonormal(basis.matrix, cfg).residual
    out.eigenvalues = list(basis.source_eigen.eigenvalues)
    out.condition = basis.source_eigen.condition_estimate()
    out.files["symmetric_Phi"] = basis.matrix
    return out


def _run_canonical(v, cfg) -> _CommandOutput:
    out = _CommandOutput()
    basis = canonical_orthogonalize(v, cfg)
    out.residuals["orthonormality"] = verify_orthonormal(basis.matrix, cfg).residual
    out.eigenvalues = list(basis.source_eigen.eigenvalues)
    out.condition = basis.source_eigen.condition_estimate()
    out.files["canonical_Lambda"] = basis.matrix
    return out


def _run_polar(v, cfg) -> _CommandOutput:
    out = _CommandOutput()
    factors = polar_decompose(v, cfg)
    out.residuals["orthonormality"] = verify_orthonormal(
        factors.orthonormal.matrix, cfg
    ).residual
    out.residuals["polar_reconstruction"] = _relative_reconstruction(
        reconstruct_polar(factors), v
    )
    eigen = factors.orthonormal.source_eigen
    out.eigenvalues = list(eigen.eigenvalues)
    out.condition = eigen.condition_estimate()
    out.files["polar_Phi"] = factors.orthonormal.matrix
    out.files["polar_H"] = factors.positive
    return out


def _run_svd(v, cfg) -> _CommandOutput:
    out = _CommandOutput()
    factors = reduced_svd(v, cfg)
    out.residuals["orthonormality"] = verify_orthonormal(factors.left, cfg).residual
    out.residuals["svd_reconstruction"] = _relative_reconstruction(
        reconstruct_svd(factors), v
    )
    sigma = factors.singular_values
    out.singular_values = list(sigma)
    smallest = float(sigma[-1])
    out.condition = (float(sigma[0]) / smallest) ** 2 if smallest > 0.0 else math.inf
    out.files["svd_W"] = factors.left
    out.files["svd_sigma"] = sigma
    out.files["svd_Udagger"] = factors.right.conj().T
    return out


def _run_pca(v, cfg) -> _CommandOutput:
    out = _CommandOutput()
    result = principal_components(v, cfg)
    equivalence = gram_sscp_eigenvalue_check(v, cfg)
    basis = canonical_orthogonalize(v, cfg)
    d = basis.source_eigen.eigenvalues
    sums = projection_square_sums(v, basis)
    out.residuals["gram_sscp_gap"] = equivalence.max_relative_gap
    out.residuals["projection_sum_gap"] = float(np.max(np.abs(sums - d) / d))
    out.eigenvalues = list(result.component_scores)
    out.condition = basis.source_eigen.condition_estimate()
    out.files["pca_components"] = result.components
    out.files["pca_scores"] = result.component_scores
    return out


def _run_relations(v, cfg) -> _CommandOutput:
    out = _CommandOutput()
    phi = symmetric_orthogonalize(v, cfg)
    lam = canonical_orthogonalize(v, cfg)
    eigen = phi.source_eigen
    u = eigen.eigenvectors
    svd = reduced_svd(v, cfg)
    lam_from_phi = phi.matrix @ u
    phi_from_lam = lam.matrix @ u.conj().T
    phi_from_svd = svd.left @ svd.right.conj().T
    out.residuals["orthonormality"] = max(
        verify_orthonormal(phi.matrix, cfg).residual,
        verify_orthonormal(lam.matrix, cfg).residual,
    )
    out.residuals["relation_lambda_phi_u"] = max_abs(lam.matrix - lam_from_phi)
    out.residuals["relation_phi_w_udagger"] = max_abs(phi.matrix - phi_from_svd)
    out.eigenvalues = list(eigen.eigenvalues)
    out.singular_values = list(svd.singular_values)
    out.condition = eigen.condition_estimate()
    out.files["relations_Phi"] = phi.matrix
    out.files["relations_Lambda"] = lam.matrix
    out.files["relations_U"] = u
    out.files["relations_Lambda_from_Phi"] = lam_from_phi
    out.files["relations_Phi_from_Lambda"] = phi_from_lam
    out.files["relations_Phi_from_svd"] = phi_from_svd
    return out


def _run_verify(v, cfg) -> _CommandOutput:
    out = _CommandOutput()
    phi = symmetric_orthogonalize(v, cfg)
    lam = canonical_orthogonalize(v, cfg)
    polar = polar_decompose(v, cfg)
    svd = reduced_svd(v, cfg)
    eigen = phi.source_eigen
    u = eigen.eigenvectors
    d = eigen.eigenvalues
    sums = projection_square_sums(v, lam)
    equivalence = gram_sscp_eigenvalue_check(v, cfg)
    out.residuals["orthonormality"] = max(
        verify_orthonormal(phi.matrix, cfg).residual,
        verify_orthonormal(lam.matrix, cfg).residual,
        verify_orthonormal(svd.left, cfg).residual,
    )
    out.residuals["polar_reconstruction"] = _relative_reconstruction(
        reconstruct_polar(polar), v
    )
    out.residuals["svd_reconstruction"] = _relative_reconstruction(
        reconstruct_svd(svd), v
    )
    out.residuals["relation_lambda_phi_u"] = max_abs(lam.matrix - phi.matrix @ u)
    out.residuals["relation_phi_w_udagger"] = max_abs(
        phi.matrix - svd.left @ svd.right.conj().T
    )
    out.residuals["projection_sum_gap"] = float(np.max(np.abs(sums - d) / d))
    out.residuals["gram_sscp_gap"] = equivalence.max_relative_gap
    out.eigenvalues = list(d)
    out.singular_values = list(svd.singular_values)
    out.condition = eigen.condition_estimate()
    return out


_RUNNERS = {
    "symmetric": _run_symmetric,
    "canonical": _run_canonical,
    "polar": _run_polar,
    "svd": _run_svd,
    "pca": _run_pca,
    "relations": _run_relations,
    "verify": _run_verify,
}


def _describe_error(exc: Exception) -> dict:
    info = {"type": type(exc).__name__, "message": str(exc)}
    for attr in ("eigenvalue_index", "eigenvalue", "condition", "sweeps", "off_norm"):
        value = getattr(exc, attr, None)
        if value is not None:
            info[attr] = _json_number(value) if isinstance(value, float) else value
    return info


def run(config: RunConfig) -> int:
    """Execute one command and write its factor files and report."""
    started = time.perf_counter()
    try:
        matrix = parse_matrix_file(config.input_path, config.format)
    except (MatrixFileError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    cfg = config.tolerances
    error = None
    out = _CommandOutput()
    try:
        out = _RUNNERS[config.command](matrix, cfg)
    except LinalgError as exc:
        error = _describe_error(exc)
        if isinstance(exc, SingularMetric):
            out.condition = exc.condition

    passed = error is None and all(
        residual <= _tolerance_for(name, cfg)
        for name, residual in out.residuals.items()
    )

    config.output_dir.mkdir(parents=True, exist_ok=True)
    extension = config.format
    for name, values in out.files.items():
        write_matrix_file(
            config.output_dir / f"{name}.{extension}",
            values,
            fmt=config.format,
            precision=config.output_precision,
        )
    report = VerificationReport(
        command=config.command,
        rows=matrix.shape[0],
        cols=matrix.shape[1],
        residuals=out.residuals,
        eigenvalues=out.eigenvalues,
        singular_values=out.singular_values,
        condition_estimate=out.condition,
        passed=passed,
        elapsed_ms=round((time.perf_counter() - started) * 1000.0, 3),
        error=error,
    )
    report_path = config.output_dir / "report.json"
    report_path.write_text(
        json.dumps(report.to_dict(), indent=2, sort_keys=True) + "\n",
        encoding="utf-8",
    )
    if error is not None:
        print(f"error: {error['type']}: {error['message']}", file=sys.stderr)
        return 3
    return 0 if passed else 1


def _precision_arg(text: str) -> int:
    value = int(text)
    if not 1 <= value <= 17:
        raise argparse.ArgumentTypeError("precision must be between 1 and 17")
    return value


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lowdin",
        description="Orthogonalize a matrix and verify the derived factorizations.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    descriptions = {
        "symmetric": "symmetric orthogonalization Phi = V M^(-1/2)",
        "canonical": "canonical orthogonalization Lambda = V U d^(-1/2)",
        "polar": "polar decomposition V = Phi M^(1/2)",
        "svd": "reduced singular value decomposition V = W diag(sigma) U†",
        "pca": "principal components of the SSCP matrix V V†",
        "verify": "run every factorization and report all residuals",
        "relations": "emit Phi by three routes and check the inter-basis identities",
    }
    for name in COMMANDS:
        sub = subparsers.add_parser(name, help=descriptions[name])
        sub.add_argument("--input", required=True, help="matrix file to read")
        sub.add_argument(
            "--output-dir", default=".", help="directory for factor files and report.json"
        )
        sub.add_argument("--format", choices=("csv", "tsv"), default="csv")
        sub.add_argument(
            "--precision",
            type=_precision_arg,
            default=17,
            help="significant digits in output files (17 = shortest round trip)",
        )
        sub.add_argument("--tol-hermiticity", type=float, default=None)
        sub.add_argument("--tol-orthonormality", type=float, default=None)
        sub.add_argument("--tol-reconstruction", type=float, default=None)
        sub.add_argument("--rank-tol", type=float, default=None)
        sub.add_argument("--tol-eigen-convergence", type=float, default=None)
        sub.add_argument("--max-sweeps", type=int, default=None)
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    overrides = {
        "hermiticity_tol": args.tol_hermiticity,
        "orthonormality_tol": args.tol_orthonormality,
        "reconstruction_tol": args.tol_reconstruction,
        "rank_tol": args.rank_tol,
        "eigen_convergence_tol": args.tol_eigen_convergence,
        "max_sweeps": args.max_sweeps,
    }
    try:
        tolerances = ToleranceConfig(
            **{k: v for k, v in overrides.items() if v is not None}
        )
        config = RunConfig(
            command=args.command,
            input_path=Path(args.input),
            output_dir=Path(args.output_dir),
            tolerances=tolerances,
            output_precision=args.precision,
            format=args.format,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return run(config)


if __name__ == "__main__":
    raise SystemExit(main())
