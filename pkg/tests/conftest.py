"""Shared recording of acceptance-criterion outcomes.

The acceptance module records one line per criterion; the terminal summary
hook prints them after the run so every pytest invocation shows the
criterion-by-criterion verdicts.
"""

ACCEPTANCE_LINES: list[str] = []


def record_acceptance(line: str) -> None:
    ACCEPTANCE_LINES.append(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
