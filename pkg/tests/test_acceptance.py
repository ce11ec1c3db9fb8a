"""Acceptance criteria 1-10, one test each, with a pass/fail line per criterion."""
import pytest

from hadamard_cauchy.acceptance import CRITERIA, run_criterion

BUDGET_SECONDS = {1: 10, 2: 60}


@pytest.mark.parametrize("number", sorted(CRITERIA), ids=lambda k: f"criterion_{k}")
def test_criterion(number, capsys):
    result = run_criterion(number)
    with capsys.disabled():
        print("\n" + result.line())
    assert result.passed, result.detail
    if number in BUDGET_SECONDS:
        assert result.seconds < BUDGET_SECONDS[number]


def test_selftest_command(capsys):
    from hadamard_cauchy.cli import main

    assert main(["selftest"]) == 0
    out = capsys.readouterr().out
    assert out.count("[pass] criterion_") == 10
