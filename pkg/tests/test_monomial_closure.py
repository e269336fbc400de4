import itertools

import pytest
from hypothesis import given, settings

from rrclosure.core.errors import UnsupportedDimensionError, UsageError
from rrclosure.models.monomial import MonomialIdeal, is_subideal
from rrclosure.schemas.closure import ChainReport, ClosureConfig
from rrclosure.services.monomial_closure import MonomialClosureService

from .strategies import m_primary_ideals, monomial_ideals

SQUARES = MonomialIdeal.of([(2, 0), (0, 2)])
SQUARES_CLOSURE = MonomialIdeal.of([(2, 0), (1, 1), (0, 2)])
MAXIMAL = MonomialIdeal.of([(1, 0), (0, 1)])


def test_chain_term_of_principal_ideal(monomial_service):
    ideal = MonomialIdeal.of([(2, 3)])
    for n in (1, 2, 5):
        assert monomial_service.rr_chain_term(ideal, n) == ideal


def test_chain_term_gains_the_witness_monomial(monomial_service, witness_ideal):
    term = monomial_service.rr_chain_term(witness_ideal, 1)
    assert (2, 2) in term
    assert (2, 2) not in witness_ideal


def test_chain_term_of_squares(monomial_service):
    assert monomial_service.rr_chain_term(SQUARES, 1) == SQUARES
    with pytest.raises(UsageError):
        monomial_service.rr_chain_term(SQUARES, 0)


def test_witness_closure_is_certified(monomial_service, witness_ideal, witness_closure):
    closure, report = monomial_service.rr_closure(witness_ideal)
    assert closure == witness_closure
    assert report.certified
    assert report.stabilized_at == 1
    assert report.terms == [witness_closure] * 3
    assert report.status == "certified"
    assert report.warnings == []


@pytest.mark.parametrize("ideal", [MonomialIdeal.of([(3, 5)]), SQUARES, MonomialIdeal.unit(2)])
def test_closed_ideals(monomial_service, ideal):
    closure, report = monomial_service.rr_closure(ideal)
    assert closure == ideal
    assert report.certified


def test_uncertified_when_disabled(monomial_service, witness_ideal):
    _, report = monomial_service.rr_closure(witness_ideal, certify=False)
    assert report.stabilized_at == 1
    assert report.status == "uncertified"


def test_status_of_a_chain_that_never_settled(witness_ideal):
    report = ChainReport(terms=[witness_ideal], n_max=1, window=1)
    assert report.status == "unstable"


def test_oracle_membership(monomial_service, witness_ideal):
    assert monomial_service.rr_oracle_membership(witness_ideal, (2, 2))
    assert not monomial_service.rr_oracle_membership(witness_ideal, (1, 1))
    for g in witness_ideal.generators:
        assert monomial_service.rr_oracle_membership(witness_ideal, g)
    with pytest.raises(UsageError):
        monomial_service.rr_oracle_membership(witness_ideal, (-1, 2))


def test_oracle_closure(monomial_service, witness_ideal, witness_closure):
    closure, touches_bound = monomial_service.oracle_closure(witness_ideal)
    assert closure == witness_closure
    assert not touches_bound


def test_small_degree_bound_is_flagged(witness_ideal):
    service = MonomialClosureService(ClosureConfig(oracle_degree_bound=4))
    _, touches_bound = service.oracle_closure(witness_ideal)
    assert touches_bound
    _, report = service.rr_closure(witness_ideal)
    assert not report.certified
    assert report.warnings


def test_integral_closure(monomial_service, witness_ideal, witness_closure):
    assert monomial_service.integral_closure_2v(SQUARES) == SQUARES_CLOSURE
    assert monomial_service.integral_closure_2v(witness_ideal) == witness_closure
    principal = MonomialIdeal.of([(3, 5)])
    assert monomial_service.integral_closure_2v(principal) == principal


def test_integral_closure_rounds_up_to_lattice_points(monomial_service):
    # Segment from (0,3) to (2,0) passes (1, 3/2).
    ideal = MonomialIdeal.of([(0, 3), (2, 0)])
    assert monomial_service.integral_closure_2v(ideal) == MonomialIdeal.of([(0, 3), (1, 2), (2, 0)])


def test_integral_closure_needs_two_variables(monomial_service):
    with pytest.raises(UnsupportedDimensionError):
        monomial_service.integral_closure_2v(MonomialIdeal.of([(1, 0, 0)]))


def test_stability(monomial_service, witness_ideal):
    assert monomial_service.is_stable(MonomialIdeal.of([(1, 4)]))
    assert not monomial_service.is_stable(witness_ideal)
    assert not monomial_service.is_stable(MAXIMAL)


def test_l_stability(monomial_service, witness_ideal):
    principal = monomial_service.is_l_stable(MonomialIdeal.of([(2, 1)]))
    assert principal.l_stable and not principal.capped
    squares = monomial_service.is_l_stable(SQUARES)
    assert squares and squares.capped
    assert monomial_service.is_l_stable(witness_ideal).l_stable


def test_reduction(monomial_service, witness_ideal, witness_closure):
    assert monomial_service.is_reduction_of(SQUARES, SQUARES) == 1
    assert monomial_service.is_reduction_of(SQUARES, SQUARES_CLOSURE) == 1
    assert monomial_service.is_reduction_of(witness_ideal, witness_closure) is not None
    with pytest.raises(UsageError):
        monomial_service.is_reduction_of(SQUARES_CLOSURE, SQUARES)


def test_high_powers(monomial_service, witness_ideal):
    n = monomial_service.high_power_index(witness_ideal)
    assert n is not None and n <= 8


@settings(max_examples=20, deadline=None)
@given(monomial_ideals(max_gens=4, max_exp=5))
def test_closure_sits_between_ideal_and_integral_closure(ideal):
    service = MonomialClosureService(ClosureConfig())
    closure, report = service.rr_closure(ideal)
    for earlier, later in zip(report.terms, report.terms[1:]):
        assert is_subideal(earlier, later)
    assert is_subideal(ideal, closure)
    if report.certified:
        assert is_subideal(closure, service.integral_closure_2v(ideal))


@settings(max_examples=20, deadline=None)
@given(monomial_ideals(max_gens=4, max_exp=5))
def test_stable_ideals_are_closed(ideal):
    service = MonomialClosureService(ClosureConfig())
    if service.is_stable(ideal):
        assert service.rr_closure(ideal)[0] == ideal


@settings(max_examples=15, deadline=None)
@given(m_primary_ideals(max_gens=3, max_exp=5))
def test_integral_closure_matches_power_membership(ideal):
    service = MonomialClosureService(ClosureConfig())
    closure = service.integral_closure_2v(ideal)
    k_max = max(max(g) for g in ideal.generators)
    for m in itertools.product(range(9), repeat=2):
        assert (m in closure) == service.integral_oracle_membership(ideal, m, k_max)
