import json
from pathlib import Path
from typing import Optional

import numpy as np
import typer

from ossermanCliff.cayley import Eigenspace, cayley_jacobi, cayley_tensor, obstruction_nullspace
from ossermanCliff.clifford import (
    clifford_profile, clifford_system_from_family, curvature_from_clifford, radon_number
)
from ossermanCliff.config import Command, OutputFormat, RecoveryConfig, RunConfig
from ossermanCliff.exceptions import (
    AmbiguousClustering, ExceedsRadonBound, HypothesesViolated, InvalidMu, NotOsserman,
    ObstructionDetected, OssermanCliffError, RecoveryError
)
from ossermanCliff.io import CliffordIO, ReportIO, TensorIO, TraceIO
from ossermanCliff.log import setup_logging
from ossermanCliff.osserman import (
    duality_check, osserman_check, radon_guarantees_hypotheses, sixteen_dimensional_criterion
)
from ossermanCliff.pipeline import RecoveryTrace, recover_clifford
from ossermanCliff.utils import cluster_spectrum, make_rng, orthogonal_complement, random_unit_vector

app = typer.Typer(help="Osserman curvature tensors and Clifford structures.", no_args_is_help=True)

EXIT_NOT_OSSERMAN = 1
EXIT_RADON = 2
EXIT_INVALID_MU = 3
EXIT_INPUT = 4
EXIT_HYPOTHESES = 1
EXIT_OBSTRUCTION = 5
EXIT_STAGE = 6


def _parse_mu(text: str):
    if not text.strip():
        return []
    try:
        return [float(v) for v in text.split(",")]
    except ValueError as e:
        raise typer.BadParameter(f"--mu expects comma separated numbers, got '{text}'") from e


def _load_config(path: Optional[Path]) -> RecoveryConfig:
    try:
        return RecoveryConfig.from_json(path) if path else RecoveryConfig()
    except ValueError as e:
        typer.echo(f"error: {e}", err=True)
        raise typer.Exit(code=EXIT_INPUT)


def _sibling(path: Path, suffix: str) -> Path:
    return path.with_name(f"{path.stem}_{suffix}.json")


def _emit(document: dict, frame, fmt: OutputFormat):
    if fmt is OutputFormat.STRUCTURED:
        typer.echo(json.dumps(document, indent=2))
    else:
        typer.echo(frame.to_string(index=False))


def _load_tensor(path: Path, tol: float = 1e-10):
    # any rejection of the document, including non-finite or misshapen components
    try:
        return TensorIO.read(path, tol)
    except (OssermanCliffError, ValueError) as e:
        typer.echo(f"error: {e}", err=True)
        raise typer.Exit(code=EXIT_INPUT)


@app.callback()
def main(verbose: int = typer.Option(0, "--verbose", "-v", count=True, help="-v info, -vv debug")):
    setup_logging(verbose)


@app.command()
def generate(n: int = typer.Option(..., "--n", min=1, help="dimension"),
             nu: int = typer.Option(0, "--nu", min=0, help="number of generators"),
             lambda0: float = typer.Option(1.0, "--lambda0"),
             mu: str = typer.Option("", "--mu", help="comma separated eigenvalues, one per generator"),
             seed: Optional[int] = typer.Option(None, "--seed", help="rotate the family by a random orthogonal matrix"),
             out: Path = typer.Option(Path("tensor.json"), "--out")):
    """Build the tensor of a Clifford structure and write it with its system."""
    mu_values = _parse_mu(mu)
    if len(mu_values) == 1 and nu > 1:
        mu_values = mu_values * nu
    if len(mu_values) != nu:
        typer.echo(f"error: {len(mu_values)} eigenvalues given for ν={nu}", err=True)
        raise typer.Exit(code=EXIT_INVALID_MU)
    try:
        system = clifford_system_from_family(n, lambda0, mu_values, seed)
    except ExceedsRadonBound as e:
        typer.echo(f"error: {e}", err=True)
        raise typer.Exit(code=EXIT_RADON)
    except InvalidMu as e:
        typer.echo(f"error: {e}", err=True)
        raise typer.Exit(code=EXIT_INVALID_MU)

    R = curvature_from_clifford(system)
    TensorIO.write(out, R)
    system_path = _sibling(out, "system")
    CliffordIO.write(system_path, system)
    typer.echo(f"profile: {clifford_profile(system)}")
    typer.echo(f"tensor written to {out}, system written to {system_path}")


@app.command()
def verify(input_path: Path = typer.Argument(..., help="curvature tensor document"),
           samples: int = typer.Option(200, "--samples", min=2),
           tol: float = typer.Option(1e-9, "--tol", help="relative agreement tolerance"),
           seed: int = typer.Option(0, "--seed"),
           fmt: OutputFormat = typer.Option(OutputFormat.TEXT, "--format"),
           duality: bool = typer.Option(True, "--duality/--no-duality"),
           config_path: Optional[Path] = typer.Option(None, "--config",
                                                     help="RecoveryConfig JSON document; its tolerances apply"),
           progress: bool = typer.Option(False, "--progress", help="show a progress bar over the samples"),
           out: Optional[Path] = typer.Option(None, "--out", help="also write the report document")):
    """Sample the Jacobi spectrum and report the Osserman property."""
    try:
        run = RunConfig(Command.VERIFY, input_path, samples, tol, seed, fmt)
    except ValueError as e:
        raise typer.BadParameter(str(e)) from e
    tols = _load_config(config_path).tolerances
    R = _load_tensor(run.input_path, tols.symmetry)
    try:
        report = osserman_check(R, run.samples, run.rel_tol, run.seed,
                                progress=progress, symmetry_tol=tols.symmetry)
    except AmbiguousClustering as e:
        typer.echo(f"not certified: {e}", err=True)
        raise typer.Exit(code=EXIT_NOT_OSSERMAN)

    dual = None
    if duality and report.is_osserman:
        dual = duality_check(R, run.samples, tols.duality, run.seed, rel_tol=run.rel_tol)
    sixteen = sixteen_dimensional_criterion(report.profile) if R.n == 16 else None
    document = ReportIO.to_document(report, dual, sixteen)
    if out is not None:
        ReportIO.write(out, report, dual, sixteen)

    frame = report.to_frame()
    if dual is not None:
        frame.loc[len(frame)] = ["duality_max_residual", f"{max(dual.max_residual, dual.max_kernel_residual):.3e}"]
        frame.loc[len(frame)] = ["duality_violations", len(dual.violations)]
    if sixteen is not None:
        frame.loc[len(frame)] = ["sixteen_dimensional_criterion", sixteen]
    _emit(document, frame, run.format)
    raise typer.Exit(code=0 if report.is_osserman else EXIT_NOT_OSSERMAN)


@app.command()
def recover(input_path: Path = typer.Argument(..., help="curvature tensor document"),
            samples: Optional[int] = typer.Option(None, "--samples", min=2),
            tol: Optional[float] = typer.Option(None, "--tol", help="clustering tolerance"),
            seed: Optional[int] = typer.Option(None, "--seed"),
            fmt: OutputFormat = typer.Option(OutputFormat.TEXT, "--format"),
            force: bool = typer.Option(False, "--force", help="attempt recovery outside the dimension hypotheses"),
            config_path: Optional[Path] = typer.Option(None, "--config", help="RecoveryConfig JSON document"),
            progress: bool = typer.Option(False, "--progress",
                                          help="show a progress bar over the verification samples"),
            out: Path = typer.Option(Path("recovered_system.json"), "--out")):
    """Recover a Clifford structure and write it with the stage trace."""
    config = _load_config(config_path).with_overrides(samples=samples, seed=seed, cluster=tol, force=force or None)
    R = _load_tensor(input_path, config.tolerances.symmetry)

    trace = RecoveryTrace()
    trace_path = _sibling(out, "trace")
    try:
        system = recover_clifford(R, config, trace, progress=progress)
    except RecoveryError as e:
        TraceIO.write(trace_path, trace, e)
        typer.echo(f"error: {e}", err=True)
        if isinstance(e, NotOsserman):
            raise typer.Exit(code=EXIT_NOT_OSSERMAN)
        if isinstance(e, HypothesesViolated):
            raise typer.Exit(code=EXIT_HYPOTHESES)
        if isinstance(e, ObstructionDetected):
            raise typer.Exit(code=EXIT_OBSTRUCTION)
        raise typer.Exit(code=EXIT_STAGE)

    CliffordIO.write(out, system)
    TraceIO.write(trace_path, trace)
    document = TraceIO.to_document(trace)
    _emit(document, trace.to_frame(), fmt)
    if fmt is OutputFormat.TEXT:
        typer.echo(f"recovered ν={system.nu}, λ₀={system.lambda0:.12g}, μ={list(system.mu)}")
        typer.echo(f"reconstruction residual {trace.stages[-1].residual:.3e}; system written to {out}")


@app.command()
def cayley(alpha: float = typer.Option(1.0, "--alpha", help="negative for the non-compact dual"),
           emit_tensor: Optional[Path] = typer.Option(None, "--emit-tensor"),
           obstruction: Optional[Eigenspace] = typer.Option(None, "--obstruction"),
           samples: int = typer.Option(64, "--samples", min=32),
           tol: float = typer.Option(1e-8, "--tol"),
           seed: int = typer.Option(0, "--seed"),
           fmt: OutputFormat = typer.Option(OutputFormat.TEXT, "--format")):
    """Cayley projective plane: spectrum, tensor and the linear-section obstruction."""
    X = random_unit_vector(16, make_rng(seed))
    B = orthogonal_complement(X)
    profile = cluster_spectrum(np.linalg.eigvalsh(B.T @ cayley_jacobi(X, alpha) @ B))
    document = {"alpha": alpha, "profile": profile.to_dict()}
    if emit_tensor is not None:
        TensorIO.write(emit_tensor, cayley_tensor(alpha))
        document["tensor"] = str(emit_tensor)
    if obstruction is not None:
        document["obstruction"] = {
            "eigenspace": obstruction.value,
            "nullspace_dim": obstruction_nullspace(obstruction, samples, tol, seed),
        }
    if fmt is OutputFormat.STRUCTURED:
        typer.echo(json.dumps(document, indent=2))
        return
    typer.echo(f"Jacobi spectrum on X^⊥ (α={alpha:g}): {profile}")
    if emit_tensor is not None:
        typer.echo(f"tensor written to {emit_tensor}")
    if obstruction is not None:
        typer.echo(f"linear sections into E_{obstruction.value}: {document['obstruction']['nullspace_dim']}")


@app.command()
def radon(n: int = typer.Argument(..., min=1),
          fmt: OutputFormat = typer.Option(OutputFormat.TEXT, "--format")):
    """Print the Radon–Hurwitz number ρ(n)."""
    rho = radon_number(n)
    if fmt is OutputFormat.STRUCTURED:
        typer.echo(json.dumps({"n": n, "rho": rho, "guarantees_hypotheses": radon_guarantees_hypotheses(n)}))
    else:
        typer.echo(rho)


if __name__ == "__main__":
    app()
