import pytest
from click.testing import CliRunner

from rrclosure.models.monomial import MonomialIdeal
from rrclosure.schemas.closure import ClosureConfig
from rrclosure.services.monomial_closure import MonomialClosureService
from rrclosure.services.valuation_closure import ValuationClosureService


@pytest.fixture
def witness_ideal():
    """x^4, x^3*y, x*y^3, y^4."""
    return MonomialIdeal.of([(4, 0), (3, 1), (1, 3), (0, 4)])


@pytest.fixture
def witness_closure():
    return MonomialIdeal.of([(4, 0), (3, 1), (2, 2), (1, 3), (0, 4)])


@pytest.fixture
def monomial_service():
    return MonomialClosureService(ClosureConfig())


@pytest.fixture
def valuation_service():
    return ValuationClosureService(chain_n_max=4)


@pytest.fixture
def runner():
    return CliRunner(mix_stderr=False)


def pytest_addoption(parser):
    parser.addoption(
        "--update-golden",
        action="store_true",
        default=False,
        help="Rewrite the golden files under tests/golden from the current output.",
    )


@pytest.fixture
def update_golden(request):
    return request.config.getoption("--update-golden")
