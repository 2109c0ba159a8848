import pytest

_ACCEPTANCE: dict[str, str] = {}


@pytest.fixture
def record_criterion():
    """Register ``(label, passed)`` for the acceptance summary printed at the end."""

    def record(label: str, passed: bool) -> None:
        _ACCEPTANCE[label] = "PASS" if passed else "FAIL"

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_ACCEPTANCE, key=lambda s: int(s.split()[1].rstrip(":"))):
        terminalreporter.write_line(f"{_ACCEPTANCE[label]}  {label}")
