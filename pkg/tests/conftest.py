import pytest

CRITERIA = {
    1: "worked examples (exact golden values)",
    2: "cell enumeration agrees with brute-force RS scan, n <= 6",
    3: "subsequence type: RS shape agrees with subset-scan oracle",
    4: "exhaustive theorem harness, n <= 6",
    5: "closed-form family rims",
    6: "round trips (RS, reduced words, canonical diagrams)",
}

_outcomes: dict[int, list[bool]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and not report.passed):
        _outcomes.setdefault(marker.args[0], []).append(report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for n, label in CRITERIA.items():
        results = _outcomes.get(n)
        if results is None:
            status = "NOT RUN"
        else:
            status = "PASS" if all(results) else "FAIL"
            label += f" ({sum(results)}/{len(results)} tests)"
        terminalreporter.write_line(f"criterion {n}: {status}  {label}")
