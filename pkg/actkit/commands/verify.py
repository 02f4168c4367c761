"""Exhaustive enumeration and theorem-verification commands."""

import sys

import click

from actkit.algebra.oracle import (
    SUITES,
    enumerate_acts,
    verify_finite_cancellation,
    verify_internal_cancellation,
    verify_symbolic_theorems,
    verify_unique_decomposition,
)
from actkit.config import ActkitConfig, get_config
from actkit.loaders import resolve_monoid
from actkit.models.report import SuiteReport
from actkit.utils.error import handle_actkit_error
from actkit.utils.exit_codes import VIOLATIONS_FOUND
from actkit.utils.export import export_to_json
from actkit.utils.output import console, emit_json


def run_suites(
    suite: str,
    monoid_ref: str | None,
    max_size: int,
    seed: int,
    trials: int,
    workers: int,
    config: ActkitConfig,
) -> list[SuiteReport]:
    """Run one suite or all of them, in the fixed order of SUITES."""
    selected = SUITES if suite == "all" else (suite,)
    needs_monoid = any(name != "symbolic" for name in selected)
    if needs_monoid and monoid_ref is None:
        raise click.UsageError("--monoid is required for the finite suites")
    monoid = resolve_monoid(monoid_ref, limit=config.max_monoid_size) if needs_monoid else None
    budget = config.effective_enumeration_budget

    reports = []
    for name in selected:
        with console.status(f"[cyan]Running {name} suite...[/cyan]"):
            if name == "decomposition":
                report = verify_unique_decomposition(
                    monoid, max_size, budget, config.brute_force_bound, workers
                )
            elif name == "cancellation":
                report = verify_finite_cancellation(
                    monoid, max_size, budget, config.effective_triple_budget, workers
                )
            elif name == "internal":
                report = verify_internal_cancellation(monoid, max_size, budget, workers)
            else:
                report = verify_symbolic_theorems(seed, trials)
        status = "[green]pass[/green]" if report.passed else "[red]FAIL[/red]"
        console.print(
            f"[dim]{name}: {status} ({report.instances} instances, "
            f"{len(report.violations)} violations)[/dim]"
        )
        reports.append(report)
    return reports


@click.command(name="verify")
@click.option("--monoid", "monoid_ref", default=None, help="Monoid file or builtin:<name>")
@click.option("--max-size", type=click.IntRange(min=1), default=3, help="Largest carrier size")
@click.option(
    "--suite",
    type=click.Choice(["all", *SUITES]),
    default="all",
    help="Suite to run",
)
@click.option("--seed", type=int, default=0, help="Seed for the symbolic suite")
@click.option("--trials", type=click.IntRange(min=0), default=1000, help="Random symbolic acts")
@click.option("--workers", type=click.IntRange(min=1), default=None, help="Worker processes")
@click.option("--out", "out_path", default=None, help="Also write the report to this file")
@click.option("--no-timing", is_flag=True, default=False, help="Omit wall times")
@handle_actkit_error
def verify_cmd(monoid_ref, max_size, suite, seed, trials, workers, out_path, no_timing):
    """Run the exhaustive verification suites.

    Exit code 0 when every suite passes, 1 when violations were found.

    Examples:
        actkit verify --monoid "builtin:cyclic_group(2)" --max-size 3 --suite all
        actkit verify --suite symbolic --seed 0 --trials 1000
    """
    config = get_config()
    reports = run_suites(
        suite, monoid_ref, max_size, seed, trials, workers or config.workers, config
    )
    result = {
        "passed": all(report.passed for report in reports),
        "reports": [report.to_document(timing=not no_timing) for report in reports],
    }
    if out_path:
        export_to_json(result, out_path)
    emit_json(result)
    if not result["passed"]:
        sys.exit(VIOLATIONS_FOUND)


@click.command(name="enumerate")
@click.option("--monoid", "monoid_ref", required=True, help="Monoid file or builtin:<name>")
@click.option("--max-size", type=click.IntRange(min=1), default=3, help="Largest carrier size")
@click.option("--exact", is_flag=True, default=False, help="Only acts of exactly --max-size")
@click.option("--out", "out_path", default=None, help="Also write the catalogue to this file")
@handle_actkit_error
def enumerate_cmd(monoid_ref, max_size, exact, out_path):
    """List one act per isomorphism class, in canonical form.

    Examples:
        actkit enumerate --monoid "builtin:cyclic_group(2)" --max-size 3
    """
    config = get_config()
    monoid = resolve_monoid(monoid_ref, limit=config.max_monoid_size)
    with console.status("[cyan]Enumerating acts...[/cyan]"):
        acts = enumerate_acts(monoid, max_size, config.effective_enumeration_budget, exact)
    result = {
        "monoid": monoid.to_document(),
        "max_size": max_size,
        "exact": exact,
        "count": len(acts),
        "acts": [
            {"elements": list(act.carrier), "action": act.to_document()["action"]} for act in acts
        ],
    }
    if out_path:
        export_to_json(result, out_path)
    emit_json(result)
