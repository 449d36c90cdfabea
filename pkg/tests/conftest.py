import pytest

# (criterion id, description, passed, detail) appended by tests/test_acceptance.py
ACCEPTANCE_RESULTS: list[tuple[str, str, bool, str]] = []


@pytest.fixture
def record():
    def _record(cid: str, description: str, passed: bool, detail: str = "") -> bool:
        ACCEPTANCE_RESULTS.append((cid, description, passed, detail))
        if not passed:
            pytest.fail(f"{cid} {description}: {detail}", pytrace=False)
    return _record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for cid, description, passed, detail in sorted(ACCEPTANCE_RESULTS, key=lambda r: r[0]):
        line = f"{'PASS' if passed else 'FAIL'}  {cid:<4} {description}"
        if detail:
            line += f"  ({detail})"
        terminalreporter.write_line(line)
