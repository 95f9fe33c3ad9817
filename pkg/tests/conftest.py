import pytest

_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_collection_modifyitems(items):
    for item in items:
        marker = item.get_closest_marker("criterion")
        if marker is not None:
            number, title = marker.args
            _criteria.setdefault(number, {"title": title, "outcomes": []})
            item.user_properties.append(("criterion", number))


def pytest_runtest_logreport(report):
    for key, number in report.user_properties:
        if key != "criterion":
            continue
        if report.when == "call" or report.outcome != "passed":
            _criteria[number]["outcomes"].append(report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        entry = _criteria[number]
        outcomes = entry["outcomes"]
        if not outcomes:
            verdict = "NOT RUN"
        elif all(o == "passed" for o in outcomes):
            verdict = "PASS"
        else:
            verdict = "FAIL"
        terminalreporter.write_line(f"AC{number:<3} {verdict:<8} {entry['title']}")
