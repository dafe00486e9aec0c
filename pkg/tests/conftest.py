import pytest

_criteria: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by the test")


@pytest.hookimpl(wrapper=True)
def pytest_runtest_makereport(item, call):
    rep = yield
    mark = item.get_closest_marker("criterion")
    if mark is not None and (rep.when == "call" or rep.failed or rep.skipped):
        number, title = mark.args
        entry = _criteria.setdefault(number, {"title": title, "ok": True, "failed": []})
        if not rep.passed:
            entry["ok"] = False
            entry["failed"].append(item.name)
    return rep


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        entry = _criteria[number]
        verdict = "PASS" if entry["ok"] else "FAIL"
        line = f"criterion {number:2d} {verdict}  {entry['title']}"
        if entry["failed"]:
            line += "  (failed: " + ", ".join(entry["failed"]) + ")"
        terminalreporter.write_line(line)
