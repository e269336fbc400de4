import click

from . import poly, val, verify


@click.group(name="rrclosure")
def cli():
    """Ratliff-Rush closures of monomial ideals and of ideals in valuation domains."""


cli.add_command(poly.command, name="poly")
cli.add_command(val.command, name="val")
cli.add_command(verify.command, name="verify")
