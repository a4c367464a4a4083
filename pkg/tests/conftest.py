"""Shared acceptance-criteria registry.

Acceptance tests record a verdict per criterion; a terminal-summary
hook prints one PASS/FAIL line for each so the artifact's claims can be
audited at a glance from the pytest output.
"""

CRITERIA: dict[int, tuple[str, bool]] = {}


def record_criterion(number: int, title: str, passed: bool) -> None:
    CRITERIA[number] = (title, passed)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(CRITERIA):
        title, passed = CRITERIA[number]
        verdict = "PASS" if passed else "FAIL"
        terminalreporter.write_line(
            "criterion %2d: %s  %s" % (number, verdict, title)
        )
