import pytest

from entanglement_harvest.oracle.invariants import FAST_CHECKS, CheckResult, check_q_factor, run_checks


def test_fast_checks_pass():
    results = run_checks()
    assert len(results) == len(FAST_CHECKS)
    failed = [r for r in results if not r.passed]
    assert not failed, failed


def test_q_factor_check_is_finite_and_tight():
    result = check_q_factor()
    assert result.passed, result.detail
    assert "nan" not in result.detail


def test_q_factor_check_fails_on_non_finite_oracle(monkeypatch):
    monkeypatch.setattr("entanglement_harvest.oracle.invariants.q_time_oracle",
                        lambda k, omega, sw: complex(float("nan"), 0.0))
    assert not check_q_factor().passed


def test_failing_check_is_reported_not_raised(monkeypatch):
    def broken() -> CheckResult:
        raise RuntimeError("boom")

    monkeypatch.setattr("entanglement_harvest.oracle.invariants.FAST_CHECKS", [broken])
    (result,) = run_checks()
    assert not result.passed
    assert "boom" in result.detail


@pytest.mark.audit
def test_audit_checks_pass():
    assert all(r.passed for r in run_checks(audit=True))
