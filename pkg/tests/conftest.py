import re

ACCEPTANCE_LINES = []


def record(line: str) -> None:
    """Collect one acceptance line; also printed, so ``-s`` shows it inline."""
    ACCEPTANCE_LINES.append(line)
    print(line)


def _criterion_number(line: str) -> int:
    m = re.search(r"criterion (\d+)", line)
    return int(m.group(1)) if m else 0


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=_criterion_number):
            terminalreporter.write_line(line)
