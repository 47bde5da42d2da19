"""Prints the acceptance verdicts, one line per criterion, after the run."""

_verdicts = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        name = report.nodeid.split("::")[-1][len("test_criterion_"):]
        _verdicts[name] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _verdicts:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_verdicts):
        number, _, title = name.partition("_")
        terminalreporter.write_line(
            f"{_verdicts[name]}  criterion {int(number):>2}  {title.replace('_', ' ')}")
