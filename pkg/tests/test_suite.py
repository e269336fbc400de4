import pytest

from rrclosure.core.config import Settings
from rrclosure.core.errors import UsageError
from rrclosure.schemas.suite import GeneratorConfig, MonomialGeneratorConfig, ValuationGeneratorConfig
from rrclosure.models.monomial import MonomialIdeal
from rrclosure.models.valuation import CutIdeal, ValueGroup, cut_colon, cut_multiply
from rrclosure.services.suite import (
    NON_CLOSED_MIN_SAMPLES,
    VerificationSuite,
    _colon_disagreement,
    _product_disagreement,
    poly_case,
    val_case,
)
from rrclosure.utils.sampling import STREAM_PROBE, make_rng


def small_config(**overrides):
    values = {
        "seed": 42,
        "cases": 12,
        "heavy_case_cap": 4,
        "calculus_cases": 40,
        "monomial": MonomialGeneratorConfig(max_gens=4, max_exp=5),
        "valuation": ValuationGeneratorConfig(probes=24),
    }
    values.update(overrides)
    return GeneratorConfig(**values)


@pytest.fixture(scope="module")
def small_report():
    return VerificationSuite(small_config()).run()


def test_small_run_passes(small_report):
    failed = [c.name for c in small_report.checks if not c.passed]
    assert failed == []
    assert small_report.passed


def test_checks_are_sorted_by_name(small_report):
    names = [c.name for c in small_report.checks]
    assert names == sorted(names)
    assert len(names) == len(set(names)) == 25


def test_monotonicity_witness_is_an_expected_failure(small_report):
    check = next(c for c in small_report.checks if c.name == "val_monotonicity_witness")
    assert check.expected_failure and check.witness_found
    assert check.counterexample.startswith('--group "lex(Q,Z)"')


def test_witness_ideal_check(small_report):
    check = next(c for c in small_report.checks if c.name == "poly_witness_ideal")
    assert check.scope == "witness"
    assert check.cases == 7 and check.failures == 0


def test_runs_are_reproducible():
    cfg = small_config(cases=5)
    assert VerificationSuite(cfg).run().without_timing() == VerificationSuite(cfg).run().without_timing()


def test_zero_cases_still_runs_grid_checks():
    report = VerificationSuite(small_config(cases=0)).run()
    assert report.passed
    grid = next(c for c in report.checks if c.name == "val_closed_form_matches_chain")
    assert grid.cases > 0


def test_single_group_with_an_idempotent_prime():
    cfg = small_config(cases=3, valuation=ValuationGeneratorConfig(groups=["lex(Q,Z)"], probes=12))
    report = VerificationSuite(cfg).run()
    assert report.passed
    monotone = next(c for c in report.checks if c.name == "val_monotonicity")
    assert monotone.cases == 0


def test_groups_without_idempotent_primes_need_no_witness():
    cfg = small_config(cases=3, valuation=ValuationGeneratorConfig(groups=["lex(Z,Z)"], probes=12))
    report = VerificationSuite(cfg).run()
    check = next(c for c in report.checks if c.name == "val_monotonicity_witness")
    assert not check.expected_failure
    assert check.passed


def test_errors_inside_a_check_fail_the_run():
    suite = VerificationSuite(small_config(cases=2))

    def check_poly_witness_ideal():
        raise UsageError("boom")

    suite.check_poly_witness_ideal = check_poly_witness_ideal
    report = suite.run()
    broken = next(c for c in report.checks if c.name == "poly_witness_ideal")
    assert not broken.passed
    assert broken.counterexample == "boom"
    assert not report.passed


def test_case_formatting(witness_ideal):
    assert poly_case(witness_ideal) == '--vars x,y --ideal "x^4, x^3*y, x*y^3, y^4"'
    q = ValueGroup.lex("Q")
    assert val_case(q, CutIdeal.of(q, "gt", 1, [1])) == '--group "lex(Q)" --ideal "gt m=1 rho=1"'


def test_cut_calculus_runs_its_own_case_count():
    groups = ValuationGeneratorConfig(groups=["lex(Z,Q)", "lex(Q)"], probes=24)
    cfg = small_config(cases=2, calculus_cases=30, valuation=groups)
    check = VerificationSuite(cfg).check_val_cut_calculus()
    assert check.cases == 60
    assert check.passed


def test_wrong_products_and_colons_are_caught():
    zq = ValueGroup.lex("Z", "Q")
    a = CutIdeal.of(zq, "gt", 2, [0, "1/2"])
    b = CutIdeal.of(zq, "ge", 1, [1])
    rng = make_rng(42, STREAM_PROBE, 0)
    assert _product_disagreement(a, b, cut_multiply(a, b), rng, 200) is None
    assert _colon_disagreement(a, b, cut_colon(a, b), rng, 200) is None
    assert _product_disagreement(a, b, a, rng, 200) is not None
    assert _colon_disagreement(a, b, a, rng, 200) is not None


def test_rho_grid_must_be_scalable():
    with pytest.raises(ValueError):
        ValuationGeneratorConfig(rho_grid=["1/3"])


def test_calculus_cases_come_from_the_environment(monkeypatch):
    monkeypatch.setenv("RRCLOSURE_CALCULUS_CASES", "7")
    current = Settings()
    assert current.calculus_cases == 7
    assert "environment" not in Settings.model_fields
    assert GeneratorConfig.from_settings(current).calculus_cases == 7
    assert GeneratorConfig.from_settings(current, calculus_cases=3).calculus_cases == 3


def test_default_samples_include_ideals_that_are_not_closed():
    suite = VerificationSuite(GeneratorConfig(cases=200))
    grown = [I for I in suite.samples if suite.monomial.rr_closure(I, certify=False)[0] != I]
    assert grown


def test_sandwich_fails_when_every_sample_is_closed():
    suite = VerificationSuite(small_config())
    principal = [MonomialIdeal.of([(i + 1, 1)]) for i in range(NON_CLOSED_MIN_SAMPLES)]
    suite._samples = principal
    check = suite.check_poly_sandwich()
    assert not check.passed
    assert f"non-closed 0 of {len(principal)}" in check.notes
    assert "already closed" in check.counterexample


def test_sandwich_counts_ideals_that_grow():
    suite = VerificationSuite(small_config())
    witness = MonomialIdeal.of([(4, 0), (3, 1), (1, 3), (0, 4)])
    suite._samples = [witness] + [MonomialIdeal.of([(i + 1, 1)]) for i in range(NON_CLOSED_MIN_SAMPLES)]
    check = suite.check_poly_sandwich()
    assert check.passed
    assert f"non-closed 1 of {NON_CLOSED_MIN_SAMPLES + 1}" in check.notes


@pytest.mark.slow
def test_default_run_passes():
    report = VerificationSuite(GeneratorConfig()).run()
    assert report.passed
