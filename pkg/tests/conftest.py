import re

_CRITERION = re.compile(r"test_criterion_(\d+)_")


OUTCOMES: dict[int, str] = {}


def pytest_runtest_logreport(report):
    m = _CRITERION.search(report.nodeid)
    if not m:
        return
    if report.when == "call" or report.outcome != "passed":
        OUTCOMES[int(m.group(1))] = report.outcome


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    outcomes = OUTCOMES
    if not outcomes:
        return
    verdicts = getattr(config, "_acceptance_verdicts", {})
    terminalreporter.section("acceptance criteria")
    for k in sorted(outcomes):
        status = "PASS" if outcomes[k] == "passed" else "FAIL"
        detail = verdicts.get(k, (None, ""))[1]
        terminalreporter.write_line(f"criterion {k:2d}: {status}  {detail}")
