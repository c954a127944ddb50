import pytest

_ACCEPTANCE = []


@pytest.fixture(scope="session")
def criterion():
    """Record one acceptance criterion outcome; returns the condition."""

    def record(number, title, ok, detail=""):
        _ACCEPTANCE.append((number, title, bool(ok), detail))
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok, detail in sorted(_ACCEPTANCE, key=lambda r: r[0]):
        line = f"[{'PASS' if ok else 'FAIL'}] {number:>2}. {title}"
        if detail:
            line += f" -- {detail}"
        terminalreporter.write_line(line)
