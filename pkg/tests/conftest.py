CRITERIA: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion checked by a test")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark:
            num, title = mark.args
            CRITERIA.setdefault(num, {"title": title, "nodes": {}})["nodes"][item.nodeid] = None


def pytest_runtest_logreport(report):
    for entry in CRITERIA.values():
        if report.nodeid in entry["nodes"]:
            # a failure in any phase fails the test; setup skips leave it unrun
            if report.failed:
                entry["nodes"][report.nodeid] = False
            elif report.when == "call" and entry["nodes"][report.nodeid] is None:
                entry["nodes"][report.nodeid] = report.passed


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(CRITERIA):
        entry = CRITERIA[num]
        results = entry["nodes"].values()
        if any(r is False for r in results):
            verdict = "FAIL"
        elif all(r is True for r in results):
            verdict = "PASS"
        else:
            verdict = "NOT RUN"
        terminalreporter.write_line(f"{verdict} criterion {num}: {entry['title']}")
