import logging

import click

from ..core.config import settings
from ..schemas.closure import ClosureConfig
from ..schemas.output import CommandResult
from ..schemas.suite import GeneratorConfig
from ..services.suite import VerificationSuite
from ..utils.parser import format_group, parse_group
from .deps import EXIT_VERIFICATION_FAILED, chain_options, configure_logging, emit, handle_errors, output_options

logger = logging.getLogger(__name__)


def _report_text(report) -> str:
    lines = []
    for check in report.checks:
        mark = "PASS" if check.passed else "FAIL"
        if check.expected_failure:
            mark += " (expected failure)"
        lines.append(f"{mark:<24} {check.name:<36} [{check.scope}] cases={check.cases} failures={check.failures}")
        if check.counterexample and not check.passed:
            lines.append(f"{'':<24} counterexample: {check.counterexample}")
    lines.append(f"overall: {'PASS' if report.passed else 'FAIL'}")
    return "\n".join(lines)


@click.command(name="verify")
@click.option("--seed", type=int, default=None, help=f"Stream seed (default {settings.seed}).")
@click.option("--cases", type=int, default=None, help=f"Random cases per sampled check (default {settings.cases}).")
@click.option(
    "--calculus-cases",
    type=int,
    default=None,
    help=f"Product and colon cases per value group (default {settings.calculus_cases}).",
)
@click.option("--group", "groups", multiple=True, help="Restrict the valuation checks to these groups.")
@chain_options
@output_options
@handle_errors
def command(seed, cases, calculus_cases, groups, n_max, window, as_json, quiet, verbose):
    """Run every closure check on seeded cases; exits 1 when one fails."""
    configure_logging(quiet, verbose)
    cfg = GeneratorConfig.from_settings(settings, seed=seed, cases=cases, calculus_cases=calculus_cases)
    if groups:
        names = [format_group(parse_group(g)) for g in groups]
        cfg = cfg.model_copy(update={"valuation": cfg.valuation.model_copy(update={"groups": names})})
    suite = VerificationSuite(
        cfg,
        ClosureConfig.from_settings(settings, n_max=n_max, window=window),
        settings.valuation_chain_n_max,
    )
    logger.info(f"running verification suite with seed={cfg.seed}, cases={cfg.cases}")
    report = suite.run()

    inputs = {"seed": str(cfg.seed), "cases": str(cfg.cases), "calculus_cases": str(cfg.calculus_cases)}
    if groups:
        inputs["groups"] = ", ".join(cfg.valuation.groups)
    emit(
        CommandResult(universe="suite", op="verify", inputs=inputs, result=report.model_dump(), certified=report.passed),
        as_json,
        _report_text(report),
    )
    if not report.passed:
        click.get_current_context().exit(EXIT_VERIFICATION_FAILED)
