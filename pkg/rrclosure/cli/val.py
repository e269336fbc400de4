import logging

import click

from ..core.config import settings
from ..models.valuation import cut_inverse, is_idempotent, is_prime, trace
from ..schemas.output import CommandResult
from ..services.valuation_closure import ValuationClosureService
from ..utils.file_utils import read_ideal_argument
from ..utils.parser import format_cut, format_group, parse_val_ideal
from .deps import configure_logging, emit, handle_errors, output_options

logger = logging.getLogger(__name__)

VAL_OPS = ["rr", "hat", "v", "inverse", "trace", "prime", "idempotent"]


@click.command(name="val")
@click.option("--group", "group_text", required=True, help="Value group, e.g. 'lex(Z,Q)'.")
@click.option("--ideal", "ideal_text", required=True, help="Cut, e.g. 'gt m=1 rho=1'; '@path' reads a file.")
@click.option("--nmax", "n_max", type=int, default=None, help="Chain length used to cross-check rr.")
@output_options
@click.argument("op", type=click.Choice(VAL_OPS))
@handle_errors
def command(group_text, ideal_text, n_max, as_json, quiet, verbose, op):
    """Operations on cut ideals of a valuation domain."""
    configure_logging(quiet, verbose)
    cut = parse_val_ideal(group_text, read_ideal_argument(ideal_text))
    service = ValuationClosureService(n_max or settings.valuation_chain_n_max)
    inputs = {"group": format_group(cut.group), "ideal": format_cut(cut)}
    logger.info(f"val {op} on {inputs['ideal']} over {inputs['group']}")

    certified = None
    warnings = []
    text = None
    if op == "rr":
        closed = service.rr_closed_form(cut)
        certified = closed == service.rr_by_chain(cut)
        if not certified:
            warnings.append("closed form and chain union disagree")
        value = format_cut(closed)
    elif op == "hat":
        value = format_cut(service.rr_hat(cut))
    elif op == "v":
        value = format_cut(service.v_closure(cut))
        text = value + (" (divisorial)" if service.is_divisorial(cut) else "")
    elif op == "inverse":
        value = format_cut(cut_inverse(cut))
    elif op == "trace":
        value = format_cut(trace(cut))
    elif op == "prime":
        spec = is_prime(cut)
        value = spec.j if spec is not None else None
        if spec is None:
            text = "not prime"
        else:
            text = f"prime P_{spec.j}" + (", idempotent" if is_idempotent(cut) else "")
    else:
        value = is_idempotent(cut)
        text = str(value).lower()

    emit(
        CommandResult(universe="val", op=op, inputs=inputs, result=value, certified=certified, warnings=warnings),
        as_json,
        text if text is not None else str(value),
    )
