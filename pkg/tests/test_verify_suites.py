"""Every verification suite runs clean at a small size and is seed-stable."""

import pytest

from tropconvex.verify import BASE_CASES, SUITES, run_suite


@pytest.mark.parametrize("name", sorted(SUITES))
def test_suite_passes_small(name):
    cases = max(1, BASE_CASES[name] // 2)
    rep = run_suite(name, seed=7, cases=cases)
    assert rep.ok, rep.failures[:5]
    assert rep.cases > 0


def test_deterministic_for_fixed_seed():
    a = run_suite("semiring", seed=3, cases=200)
    b = run_suite("semiring", seed=3, cases=200)
    assert a.cases == b.cases and a.failures == b.failures


def test_unknown_suite_rejected():
    with pytest.raises(KeyError):
        run_suite("nope")


def test_report_serialization():
    rep = run_suite("paper-examples", seed=7, cases=1)
    payload = rep.to_dict()
    assert payload["suite"] == "paper-examples"
    assert payload["failure_count"] == 0
