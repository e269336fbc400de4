import logging

from .cli import cli
from .core.config import settings

logging.basicConfig(
    level=settings.log_level.upper(),
    format="%(asctime)s %(levelname)s %(name)s: %(message)s",
)


def main():
    cli(prog_name="rrclosure")


if __name__ == "__main__":
    main()
