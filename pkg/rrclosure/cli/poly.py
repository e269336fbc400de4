import logging
from typing import List, Optional

import click

from ..core.config import settings
from ..core.errors import UsageError
from ..models.monomial import MonomialIdeal, colon, multiply, power
from ..schemas.closure import ClosureConfig
from ..schemas.output import CommandResult
from ..services.monomial_closure import MonomialClosureService
from ..utils.file_utils import read_ideal_argument, save_text_file, validate_svg_path
from ..utils.parser import format_poly_ideal, parse_poly_ideal, parse_var_names
from ..utils.svg import staircase_svg
from .deps import chain_options, configure_logging, emit, handle_errors, output_options

logger = logging.getLogger(__name__)

POLY_OPS = ["rr", "chain", "ic", "colon", "mult", "power", "stable", "lstable", "reduction"]


def _require(value, flag: str, op: str):
    if value is None:
        raise UsageError(f"'{op}' needs {flag}")
    return value


@click.command(name="poly")
@click.option("--vars", "vars_text", default="x,y", show_default=True, help="Comma-separated variable names.")
@click.option("--ideal", "ideal_text", required=True, help="Generators, e.g. 'x^4, x^3*y'; '@path' reads a file.")
@click.option("--other", "other_text", default=None, help="Second ideal for colon, mult and reduction.")
@click.option("--k", "k", type=int, default=None, help="Exponent for power.")
@click.option("--svg", "svg_path", default=None, help="Write the staircase of input and result to this file.")
@chain_options
@output_options
@click.argument("op", type=click.Choice(POLY_OPS))
@handle_errors
def command(vars_text, ideal_text, other_text, k, svg_path, n_max, window, as_json, quiet, verbose, op):
    """Operations on monomial ideals."""
    configure_logging(quiet, verbose)
    names = parse_var_names(vars_text)
    ideal = parse_poly_ideal(vars_text, read_ideal_argument(ideal_text))
    other = parse_poly_ideal(vars_text, read_ideal_argument(other_text)) if other_text is not None else None
    service = MonomialClosureService(ClosureConfig.from_settings(settings, n_max=n_max, window=window))
    fmt = lambda i: format_poly_ideal(i, names)  # noqa: E731

    inputs = {"vars": ",".join(names), "ideal": fmt(ideal)}
    if other is not None:
        inputs["other"] = fmt(other)
    if k is not None:
        inputs["k"] = str(k)
    logger.info(f"poly {op} on {inputs['ideal']}")

    result_ideal: Optional[MonomialIdeal] = None
    value = None
    certified = None
    chain: Optional[List[str]] = None
    warnings: List[str] = []
    text = None

    if op == "rr":
        result_ideal, report = service.rr_closure(ideal)
        certified = report.certified
        chain = [fmt(t) for t in report.terms]
        warnings = report.warnings
        where = f" (stabilized at n={report.stabilized_at})" if report.stabilized_at is not None else ""
        text = f"{fmt(result_ideal)}\nstatus: {report.status}{where}"
    elif op == "chain":
        _, report = service.rr_closure(ideal, certify=False)
        result_ideal = report.terms[-1]
        chain = [fmt(t) for t in report.terms]
        warnings = report.warnings
        text = "\n".join(f"n={n}: {term}" for n, term in enumerate(chain, start=1))
    elif op == "ic":
        result_ideal = service.integral_closure_2v(ideal)
    elif op == "colon":
        result_ideal = colon(ideal, _require(other, "--other", op))
    elif op == "mult":
        result_ideal = multiply(ideal, _require(other, "--other", op))
    elif op == "power":
        result_ideal = power(ideal, _require(k, "--k", op))
    elif op == "stable":
        value = service.is_stable(ideal)
    elif op == "lstable":
        verdict = service.is_l_stable(ideal)
        value = verdict.l_stable
        certified = not verdict.capped
        if verdict.capped:
            warnings.append(f"(I^n : I^n) = (I : I) checked only up to n_max={service.config.n_max}")
        if verdict.failed_at is not None:
            text = f"false (first difference at n={verdict.failed_at})"
    elif op == "reduction":
        value = service.is_reduction_of(ideal, _require(other, "--other", op))
        text = "none" if value is None else f"reduction number {value}"

    if result_ideal is not None:
        value = fmt(result_ideal)
    if text is None:
        text = str(value).lower() if isinstance(value, bool) else str(value)

    if svg_path is not None:
        if result_ideal is None:
            raise UsageError(f"--svg needs an operation with an ideal result, not '{op}'")
        destination = validate_svg_path(svg_path)
        save_text_file(staircase_svg(ideal, result_ideal, names, title=f"{op}: {inputs['ideal']}"), destination)
        logger.info(f"staircase written to {destination}")

    emit(
        CommandResult(
            universe="poly",
            op=op,
            inputs=inputs,
            result=value,
            certified=certified,
            chain=chain,
            warnings=warnings,
        ),
        as_json,
        text,
    )
