"""Options and error handling shared by every command."""
import functools
import logging
from typing import Callable, Optional

import click
from pydantic import ValidationError

from ..core.config import settings
from ..core.errors import RRClosureError
from ..schemas.output import CommandResult

logger = logging.getLogger(__name__)

EXIT_VERIFICATION_FAILED = 1
EXIT_INTERNAL_ERROR = 3


class InternalError(click.ClickException):
    exit_code = EXIT_INTERNAL_ERROR


def output_options(f: Callable) -> Callable:
    f = click.option("--verbose", is_flag=True, help="Log every step (DEBUG).")(f)
    f = click.option("--quiet", is_flag=True, help="Only log errors.")(f)
    f = click.option("--json", "as_json", is_flag=True, help="Print the structured result document.")(f)
    return f


def chain_options(f: Callable) -> Callable:
    f = click.option("--window", type=int, default=None, help=f"Equal chain terms needed (default {settings.window}).")(f)
    f = click.option("--nmax", "n_max", type=int, default=None, help=f"Largest chain index (default {settings.n_max}).")(f)
    return f


def configure_logging(quiet: bool, verbose: bool) -> None:
    if quiet:
        logging.getLogger().setLevel(logging.ERROR)
    elif verbose:
        logging.getLogger().setLevel(logging.DEBUG)


def handle_errors(f: Callable) -> Callable:
    """Library and configuration errors become usage errors (exit 2); anything else exits 3."""

    @functools.wraps(f)
    def wrapper(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except (click.ClickException, click.exceptions.Exit):
            raise
        except RRClosureError as e:
            raise click.UsageError(str(e))
        except ValidationError as e:
            raise click.UsageError(str(e))
        except Exception as e:
            logger.error(f"Unexpected error: {e}")
            raise InternalError(f"internal error: {e}")

    return wrapper


def emit(result: CommandResult, as_json: bool, text: Optional[str] = None) -> None:
    if as_json:
        click.echo(result.model_dump_json(indent=2))
        return
    if text is not None:
        click.echo(text)
    for warning in result.warnings:
        click.echo(f"warning: {warning}", err=True)
