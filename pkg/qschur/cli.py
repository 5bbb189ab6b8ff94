"""CLI entrypoint for qschur."""

from __future__ import annotations

import json
import sys
from pathlib import Path
from typing import Any, Optional

import typer
from rich import box
from rich.console import Console
from rich.panel import Panel
from rich.table import Table
from rich.text import Text

from qschur import __version__
from qschur.arith import ScalarRing, cyclotomic_polynomial, euler_phi, l_of
from qschur.codec import decode_operator, decode_vector, encode_scalar, encode_vector
from qschur.config import CONFIG_FILENAME, load_config, write_default_config
from qschur.errors import ScalarMismatchError
from qschur.merge import merge_reports
from qschur.models import FAIL, ReportBundle
from qschur.qcomb import qbinom, qbinom_at_eps
from qschur.report import write_html
from qschur.runner import RunResult, expand_suite_names, run_suites
from qschur.storage import dumps, read_json, read_json_source, write_json
from qschur.tensor import TensorSession, compositions

app = typer.Typer(
    name="qschur",
    help=(
        "qschur - exact affine quantum Schur-Weyl computations and property checks.\n\n"
        "Examples:\n"
        "  qschur qbinom --c 4 --t 2 --lprime 3\n"
        "  qschur act --n 2 --r 2 --op '{\"op\": \"T\", \"k\": 1}' --vector vec.json\n"
        "  qschur weights --n 3 --r 2\n"
        "  qschur verify hecke --n 2 --r 2 --trials 100 --seed 0\n"
        "  qschur verify all --preset quick --pretty\n"
        "  qschur schur-functor --n 2 --N 3 --r 2\n"
        "  qschur report-merge a.json b.json --out merged.json"
    ),
    add_completion=False,
)
console = Console(stderr=True)


def _print_banner() -> None:
    heading = Text()
    heading.append("qschur", style="bold cyan")
    heading.append("  |  affine quantum Schur-Weyl toolkit", style="bold white")
    subtitle = Text(f"v{__version__}  •  exact arithmetic, seeded checks", style="dim")
    console.print(
        Panel(
            Text.assemble(heading, "\n", subtitle),
            border_style="cyan",
            box=box.ROUNDED,
            padding=(0, 1),
        )
    )


def _emit(payload: Any) -> None:
    typer.echo(dumps(payload))


def _ring(lprime: Optional[int]) -> ScalarRing:
    if lprime is None:
        return ScalarRing.generic()
    if lprime < 1:
        raise typer.BadParameter(f"--lprime must be >= 1, got {lprime}")
    return ScalarRing.at_root_of_unity(lprime)


def _load_operator_payload(op: str) -> Any:
    try:
        if op.lstrip().startswith("{"):
            return json.loads(op)
        return read_json(Path(op))
    except (ValueError, OSError) as exc:
        raise typer.BadParameter(f"--op is neither a JSON file nor a JSON string: {exc}") from exc


def _render_summary_table(result: RunResult) -> None:
    table = Table(title="qschur Verification Summary")
    table.add_column("Suite")
    table.add_column("Configuration")
    table.add_column("Status")
    table.add_column("Failures", justify="right")
    table.add_column("Duration (s)", justify="right")
    for item in result.statuses:
        colour = "red" if item.status == FAIL else "green"
        table.add_row(
            item.suite,
            item.config,
            f"[{colour}]{item.status}[/{colour}]",
            str(item.failures),
            f"{item.duration_seconds:.2f}",
        )
    console.print(table)


def _bundle_payload(bundle: ReportBundle) -> dict[str, Any]:
    """A single report prints bare; several print as a bundle."""
    if len(bundle.reports) == 1 and not bundle.conflicts:
        return bundle.reports[0].to_dict()
    return bundle.to_dict()


def _finish(bundle: ReportBundle, out: Optional[Path], html: Optional[Path]) -> None:
    payload = _bundle_payload(bundle)
    if out is not None:
        write_json(out, payload)
        console.print(f"[green]Report written:[/green] {out}")
    if html is not None:
        write_html(bundle, html)
        console.print(f"[green]HTML report:[/green] {html}")
    _emit(payload)
    if bundle.status == FAIL:
        console.print("[red]Verification failed.[/red]")
        raise typer.Exit(code=1)


def _run_verification(
    suite: str,
    overrides: dict[str, Any],
    preset: str,
    config_path: Optional[Path],
    log_file: Optional[Path],
    pretty: bool,
) -> RunResult:
    try:
        names = expand_suite_names(suite)
        config = load_config(config_path)
        result = run_suites(
            names,
            config,
            preset,
            overrides,
            console=console,
            log_path=log_file,
            command_text=" ".join(["qschur", *sys.argv[1:]]),
        )
    except ValueError as exc:
        raise typer.BadParameter(str(exc)) from exc
    if pretty:
        _render_summary_table(result)
    return result


@app.command("qbinom")
def qbinom_command(
    c: int = typer.Option(..., "--c", help="Upper argument (any integer)"),
    t: int = typer.Option(..., "--t", help="Lower argument (t >= 0)"),
    lprime: Optional[int] = typer.Option(None, "--lprime", help="Evaluate at a primitive l'-th root of unity"),
) -> None:
    """Print the Gaussian binomial [c over t], generic or at a root of unity."""
    if t < 0:
        raise typer.BadParameter(f"--t must be >= 0, got {t}")
    if lprime is not None and lprime < 1:
        raise typer.BadParameter(f"--lprime must be >= 1, got {lprime}")
    value = qbinom(c, t) if lprime is None else qbinom_at_eps(c, t, lprime)
    _emit({"c": c, "t": t, "lprime": lprime, "value": str(value), "scalar": encode_scalar(value)})


@app.command("cyclotomic")
def cyclotomic_command(
    lprime: int = typer.Option(..., "--lprime", help="Order of the root of unity"),
) -> None:
    """Print the cyclotomic polynomial coefficients, phi(l') and l."""
    if lprime < 1:
        raise typer.BadParameter(f"--lprime must be >= 1, got {lprime}")
    _emit(
        {
            "lprime": lprime,
            "coefficients": list(cyclotomic_polynomial(lprime)),
            "phi": euler_phi(lprime),
            "l": l_of(lprime),
        }
    )


@app.command("act")
def act_command(
    n: int = typer.Option(..., "--n", help="Rank parameter n"),
    r: int = typer.Option(..., "--r", help="Tensor degree r"),
    op: str = typer.Option(..., "--op", help="Operator JSON, inline or as a file path"),
    vector: Optional[Path] = typer.Option(None, "--vector", help="Vector JSON file; standard input when omitted or '-'"),
    lprime: Optional[int] = typer.Option(None, "--lprime", help="Specialize at a primitive l'-th root of unity"),
    enable_affine_node: bool = typer.Option(False, "--enable-affine-node", help="Allow E_n/F_n (experimental)"),
) -> None:
    """Apply an operator expression to a tensor-space vector."""
    ring = _ring(lprime)
    try:
        session = TensorSession(n, r, ring, affine_node=enable_affine_node)
        expr = decode_operator(_load_operator_payload(op), ring)
        vec = decode_vector(read_json_source(vector), ring)
        result = session.apply_expr(expr, vec)
    except (ValueError, ScalarMismatchError, FileNotFoundError) as exc:
        raise typer.BadParameter(str(exc)) from exc
    _emit(encode_vector(result))


@app.command("weights")
def weights_command(
    n: int = typer.Option(..., "--n", help="Number of parts"),
    r: int = typer.Option(..., "--r", help="Total size"),
) -> None:
    """Print the compositions of r into n parts."""
    if n < 1 or r < 0:
        raise typer.BadParameter(f"Need n >= 1 and r >= 0, got n={n}, r={r}")
    items = compositions(n, r)
    _emit({"n": n, "r": r, "count": len(items), "compositions": [lam.to_json() for lam in items]})


@app.command("verify")
def verify_command(
    suite: str = typer.Argument(..., help="Suite name or 'all'"),
    n: Optional[int] = typer.Option(None, "--n", help="Rank parameter n (collapses the grid)"),
    r: Optional[int] = typer.Option(None, "--r", help="Tensor degree r (collapses the grid)"),
    big_n: Optional[int] = typer.Option(None, "--N", help="Ambient size N for the schur suite"),
    lprime: Optional[list[int]] = typer.Option(None, "--lprime", help="Root-of-unity order; repeatable"),
    generic: bool = typer.Option(False, "--generic", help="Also run over the generic ring"),
    trials: Optional[int] = typer.Option(None, "--trials", help="Random samples per identity"),
    seed: Optional[int] = typer.Option(None, "--seed", help="Seed for all sampled inputs"),
    window_lo: Optional[int] = typer.Option(None, "--window-lo", help="Lower bound of index window"),
    window_hi: Optional[int] = typer.Option(None, "--window-hi", help="Upper bound of index window"),
    support: Optional[int] = typer.Option(None, "--support", help="Max terms per random vector"),
    coeff_bound: Optional[int] = typer.Option(None, "--coeff-bound", help="Max |coefficient| of random vectors"),
    enable_affine_node: bool = typer.Option(
        False,
        "--enable-affine-node",
        help="Record experimental checks for the affine node E_n/F_n",
    ),
    pretty: bool = typer.Option(False, "--pretty", help="Print a summary table on stderr"),
    out: Optional[Path] = typer.Option(None, "--out", help="Also write the report JSON to this path"),
    html: Optional[Path] = typer.Option(None, "--html", help="Render an HTML report to this path"),
    preset: str = typer.Option("acceptance", "--preset", "-p", help=f"Preset name from {CONFIG_FILENAME}"),
    config_path: Optional[Path] = typer.Option(None, "--config", help=f"Config file (default ./{CONFIG_FILENAME})"),
    log_file: Optional[Path] = typer.Option(None, "--log-file", help="Append per-run status lines to this file"),
) -> None:
    """Run a verification suite and print its report as JSON."""
    _print_banner()
    if (window_lo is None) != (window_hi is None):
        raise typer.BadParameter("--window-lo and --window-hi must be given together")

    lprimes: Optional[list[Optional[int]]] = None
    if lprime or generic:
        lprimes = ([None] if generic else []) + list(lprime or [])

    overrides: dict[str, Any] = {
        "n": n,
        "r": r,
        "N": big_n,
        "lprimes": lprimes,
        "trials": trials,
        "seed": seed,
        "window": None if window_lo is None else [window_lo, window_hi],
        "support_bound": support,
        "coeff_bound": coeff_bound,
        "enable_affine_node": True if enable_affine_node else None,
    }
    resolved_config = config_path if config_path is not None else Path.cwd() / CONFIG_FILENAME
    result = _run_verification(suite, overrides, preset, resolved_config, log_file, pretty)
    _finish(result.bundle, out, html)


@app.command("schur-functor")
def schur_functor_command(
    n: int = typer.Option(..., "--n", help="Small rank n"),
    big_n: int = typer.Option(..., "--N", help="Ambient rank N (N >= n)"),
    r: int = typer.Option(..., "--r", help="Tensor degree r"),
    lprime: Optional[int] = typer.Option(None, "--lprime", help="Specialize at a primitive l'-th root of unity"),
    trials: Optional[int] = typer.Option(None, "--trials", help="Random samples per identity"),
    seed: Optional[int] = typer.Option(None, "--seed", help="Seed for all sampled inputs"),
    pretty: bool = typer.Option(False, "--pretty", help="Print a summary table on stderr"),
    out: Optional[Path] = typer.Option(None, "--out", help="Also write the report JSON to this path"),
    html: Optional[Path] = typer.Option(None, "--html", help="Render an HTML report to this path"),
    log_file: Optional[Path] = typer.Option(None, "--log-file", help="Append per-run status lines to this file"),
) -> None:
    """Check the truncation idempotent, the retraction and transport for one (n, N, r)."""
    _print_banner()
    if big_n < n:
        raise typer.BadParameter(f"--N must be >= --n, got N={big_n}, n={n}")
    overrides: dict[str, Any] = {
        "n": n,
        "r": r,
        "N": big_n,
        "lprimes": [lprime],
        "trials": trials,
        "seed": seed,
    }
    result = _run_verification("schur", overrides, "acceptance", Path.cwd() / CONFIG_FILENAME, log_file, pretty)
    _finish(result.bundle, out, html)


@app.command("report-merge")
def report_merge_command(
    files: list[Path] = typer.Argument(..., help="Report or bundle JSON files"),
    out: Optional[Path] = typer.Option(None, "--out", help="Write the merged bundle to this path"),
    html: Optional[Path] = typer.Option(None, "--html", help="Render an HTML report to this path"),
) -> None:
    """Merge reports into one deterministic bundle and flag conflicting outcomes."""
    bundles: list[ReportBundle] = []
    for path in files:
        try:
            bundles.append(ReportBundle.from_dict(read_json(path)))
        except (ValueError, KeyError, TypeError, FileNotFoundError) as exc:
            raise typer.BadParameter(f"{path}: {exc}") from exc
    merged = merge_reports(bundles)
    payload = merged.to_dict()
    if out is not None:
        write_json(out, payload)
        console.print(f"[green]Merged report:[/green] {out}")
    if html is not None:
        write_html(merged, html)
        console.print(f"[green]HTML report:[/green] {html}")
    if merged.conflicts:
        table = Table(title="Conflicting outcomes")
        table.add_column("Suite")
        table.add_column("Identity")
        table.add_column("Statuses")
        for item in merged.conflicts:
            table.add_row(str(item.get("suite", "")), str(item.get("id", "")), ", ".join(item.get("statuses", [])))
        console.print(table)
    _emit(payload)
    if merged.status == FAIL:
        raise typer.Exit(code=1)


@app.command("init-config")
def init_config_command(
    path: Path = typer.Option(Path(CONFIG_FILENAME), "--path", help="Where to write the config file"),
    force: bool = typer.Option(False, "--force", help="Overwrite an existing file"),
) -> None:
    """Write the default configuration as YAML."""
    if path.exists() and not force:
        console.print(f"[yellow]{path} already exists; use --force to overwrite.[/yellow]")
        raise typer.Exit(code=1)
    write_default_config(path)
    console.print(f"[green]Config written:[/green] {path}")


if __name__ == "__main__":
    app()
