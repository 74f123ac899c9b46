"""Collects the acceptance criteria outcomes and prints one line per criterion."""

_outcomes = {}


def pytest_runtest_logreport(report):
    props = dict(report.user_properties)
    if "criterion" not in props:
        return
    key = props["criterion"]
    if report.when == "call" or report.failed:
        seconds = props.get("seconds")
        previous = _outcomes.get(key, (True, None))
        _outcomes[key] = (previous[0] and report.passed, seconds if seconds is not None else previous[1])


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_outcomes, key=lambda k: int(k.split()[0])):
        passed, seconds = _outcomes[key]
        timing = f" ({seconds:.1f} s)" if seconds is not None else ""
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  criterion {key}{timing}")
