import json
from pathlib import Path

import pytest

from rrclosure.cli import cli
from rrclosure.cli import verify as verify_module
from rrclosure.cli.deps import EXIT_INTERNAL_ERROR
from rrclosure.services.monomial_closure import MonomialClosureService
from rrclosure.schemas.suite import CheckResult, SuiteReport

GOLDEN = Path(__file__).parent / "golden"
WITNESS = "x^4, x^3*y, x*y^3, y^4"


def load_golden(name):
    return json.loads((GOLDEN / name).read_text(encoding="utf-8"))


def test_poly_rr_json_matches_golden(runner):
    result = runner.invoke(cli, ["poly", "--ideal", WITNESS, "--json", "rr"])
    assert result.exit_code == 0, result.output
    assert json.loads(result.output) == load_golden("poly_rr_witness.json")


def test_poly_rr_text(runner):
    result = runner.invoke(cli, ["poly", "--ideal", WITNESS, "rr"])
    assert result.exit_code == 0
    assert result.output.splitlines() == [
        "x^4, x^3*y, x^2*y^2, x*y^3, y^4",
        "status: certified (stabilized at n=1)",
    ]


def test_poly_chain_text(runner):
    result = runner.invoke(cli, ["poly", "--ideal", "x^2, y^2", "--nmax", "3", "--window", "2", "chain"])
    assert result.exit_code == 0
    assert result.output.splitlines()[0] == "n=1: x^2, y^2"


def test_poly_algebra_ops(runner):
    colon = runner.invoke(cli, ["poly", "--ideal", "x^3*y", "--other", "x*y", "colon"])
    assert colon.output.strip() == "x^2"
    power = runner.invoke(cli, ["poly", "--ideal", "x, y", "--k", "2", "power"])
    assert power.output.strip() == "x^2, x*y, y^2"
    stable = runner.invoke(cli, ["poly", "--ideal", "x*y^4", "stable"])
    assert stable.output.strip() == "true"
    reduction = runner.invoke(cli, ["poly", "--ideal", "x^2, y^2", "--other", "x^2, x*y, y^2", "reduction"])
    assert reduction.output.strip() == "reduction number 1"


def test_lstable_warns_when_only_checked_up_to_the_cap(runner):
    result = runner.invoke(cli, ["poly", "--ideal", "x^2, y^2", "lstable"])
    assert result.exit_code == 0
    assert result.stdout.strip() == "true"
    assert "warning:" in result.stderr


def test_val_rr_json_matches_golden(runner):
    result = runner.invoke(cli, ["val", "--group", "lex(Q)", "--ideal", "gt m=1 rho=1", "--json", "rr"])
    assert result.exit_code == 0, result.output
    assert json.loads(result.output) == load_golden("val_rr_maximal.json")


def test_val_text_ops(runner):
    args = ["val", "--group", "lex(Q,Z)", "--ideal", "gt m=1 rho=0"]
    assert runner.invoke(cli, args + ["prime"]).output.strip() == "prime P_1, idempotent"
    assert runner.invoke(cli, args + ["v"]).output.strip() == "gt m=1 rho=0 (divisorial)"
    assert runner.invoke(cli, args + ["hat"]).output.strip() == "ge m=1 rho=0"
    assert runner.invoke(cli, args + ["rr"]).output.strip() == "ge m=2 rho=0,0"
    other = ["val", "--group", "lex(Q)", "--ideal", "gt m=1 rho=1"]
    assert runner.invoke(cli, other + ["prime"]).output.strip() == "not prime"
    assert runner.invoke(cli, other + ["trace"]).output.strip() == "gt m=1 rho=0"


def test_parse_errors_exit_with_usage_status(runner):
    result = runner.invoke(cli, ["poly", "--ideal", "x^2, z", "rr"])
    assert result.exit_code == 2
    assert "column 6" in result.stderr
    bad_group = runner.invoke(cli, ["val", "--group", "lex(Z,R)", "--ideal", "ge m=1 rho=0", "rr"])
    assert bad_group.exit_code == 2


def test_unknown_op_and_missing_operand(runner):
    assert runner.invoke(cli, ["poly", "--ideal", "x", "frobnicate"]).exit_code == 2
    missing = runner.invoke(cli, ["poly", "--ideal", "x", "colon"])
    assert missing.exit_code == 2
    assert "--other" in missing.stderr


def test_ideal_read_from_a_file(runner, tmp_path):
    path = tmp_path / "ideal.txt"
    path.write_text(WITNESS + "\n", encoding="utf-8")
    result = runner.invoke(cli, ["poly", "--ideal", f"@{path}", "rr"])
    assert result.exit_code == 0
    assert result.output.splitlines()[0] == "x^4, x^3*y, x^2*y^2, x*y^3, y^4"
    assert runner.invoke(cli, ["poly", "--ideal", f"@{tmp_path / 'missing.txt'}", "rr"]).exit_code == 2


def test_svg_output(runner, tmp_path):
    target = tmp_path / "staircase.svg"
    result = runner.invoke(cli, ["poly", "--ideal", WITNESS, "--svg", str(target), "rr"])
    assert result.exit_code == 0
    assert target.read_text(encoding="utf-8") == (GOLDEN / "staircase_witness_rr.svg").read_text(encoding="utf-8")
    no_ideal = runner.invoke(cli, ["poly", "--ideal", WITNESS, "--svg", str(target), "stable"])
    assert no_ideal.exit_code == 2
    wrong_suffix = runner.invoke(cli, ["poly", "--ideal", WITNESS, "--svg", str(tmp_path / "out.png"), "rr"])
    assert wrong_suffix.exit_code == 2


def test_verify_small_run(runner):
    args = ["verify", "--seed", "1", "--cases", "3", "--calculus-cases", "20", "--group", "lex(Z,Q)"]
    result = runner.invoke(cli, args)
    assert result.exit_code == 0, result.output
    assert result.stdout.splitlines()[-1] == "overall: PASS"


def test_verify_json(runner):
    result = runner.invoke(cli, ["verify", "--cases", "2", "--calculus-cases", "20", "--group", "lex(Q)", "--json"])
    assert result.exit_code == 0
    document = json.loads(result.stdout)
    assert document["universe"] == "suite"
    assert document["certified"] is True
    assert document["inputs"]["groups"] == "lex(Q)"
    assert document["inputs"]["calculus_cases"] == "20"
    calculus = next(c for c in document["result"]["checks"] if c["name"] == "val_cut_calculus")
    assert calculus["cases"] == 20


def test_verify_failure_exits_with_one(runner, monkeypatch):
    failing = SuiteReport(
        seed=42,
        cases=0,
        checks=[CheckResult(name="poly_sandwich", claim="forced", scope="sampled", cases=1, failures=1)],
        passed=False,
    )
    monkeypatch.setattr(verify_module.VerificationSuite, "run", lambda self: failing)
    result = runner.invoke(cli, ["verify", "--cases", "0"])
    assert result.exit_code == 1
    assert result.stdout.splitlines()[-1] == "overall: FAIL"


def test_verify_json_is_reproducible(runner):
    args = ["verify", "--seed", "7", "--cases", "2", "--calculus-cases", "20", "--group", "lex(Z)", "--json"]
    documents = []
    for _ in range(2):
        document = json.loads(runner.invoke(cli, args).stdout)
        for check in document["result"]["checks"]:
            check.pop("elapsed")
        documents.append(document)
    assert documents[0] == documents[1]


@pytest.mark.parametrize("error", [RuntimeError("boom"), ValueError("boom")])
def test_unexpected_errors_exit_with_internal_status(runner, monkeypatch, error):
    def broken(self, ideal, certify=True):
        raise error

    monkeypatch.setattr(MonomialClosureService, "rr_closure", broken)
    result = runner.invoke(cli, ["poly", "--ideal", WITNESS, "rr"])
    assert result.exit_code == EXIT_INTERNAL_ERROR == 3
    assert "internal error: boom" in result.stderr


def test_invalid_chain_settings_exit_with_usage_status(runner):
    result = runner.invoke(cli, ["poly", "--ideal", "x", "--nmax", "0", "rr"])
    assert result.exit_code == 2


@pytest.mark.slow
def test_verify_report_matches_golden(runner, update_golden):
    result = runner.invoke(cli, ["verify", "--seed", "42", "--cases", "200", "--json"])
    assert result.exit_code == 0, result.stderr
    document = json.loads(result.stdout)
    for check in document["result"]["checks"]:
        check.pop("elapsed")
    path = GOLDEN / "verify_seed42_cases200.json"
    if update_golden or not path.exists():
        path.write_text(json.dumps(document, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
        pytest.skip(f"wrote {path.name}")
    assert document == load_golden(path.name)
