"""The frozen reference checks must all pass."""

from wittmat import run_all


def test_all_reference_checks_pass():
    results = run_all()
    assert len(results) == 30
    failures = [f"{r.name}: {r.detail}" for r in results if not r.ok]
    assert not failures, "\n".join(failures)


def test_results_carry_names_and_details():
    results = run_all()
    assert len({r.name for r in results}) == len(results)
    for r in results:
        assert isinstance(r.detail, str)
