import pytest

_ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance_log(capsys):
    def log(label, ok, detail, seconds, limit):
        line = f"[{'PASS' if ok else 'FAIL'}] {label}: {detail} ({seconds:.2f}s, limit {limit:g}s)"
        _ACCEPTANCE_LINES.append(line)
        with capsys.disabled():
            print("\n" + line)

    return log


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
