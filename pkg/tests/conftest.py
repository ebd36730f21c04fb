from __future__ import annotations

import pytest

_ACCEPTANCE_RESULTS: list[tuple[str, bool, str]] = []


@pytest.fixture
def acceptance():
    """Recorder for acceptance criteria; results are echoed in the terminal
    summary so every criterion gets one pass/fail line."""

    def record(name: str, ok: bool, detail: str = "") -> None:
        _ACCEPTANCE_RESULTS.append((name, ok, detail))

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in _ACCEPTANCE_RESULTS:
        status = "PASS" if ok else "FAIL"
        suffix = f" ({detail})" if detail else ""
        terminalreporter.write_line(f"[{status}] {name}{suffix}")
