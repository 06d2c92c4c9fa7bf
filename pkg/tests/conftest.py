import json
from collections import OrderedDict
from pathlib import Path

import pytest

DATA = Path(__file__).parent / "data"

_criteria: "OrderedDict[int, dict]" = OrderedDict()


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion this test belongs to")


@pytest.fixture(scope="session")
def scan():
    from index2poly.enumerator import enumerate_all

    return enumerate_all()


@pytest.fixture(scope="session")
def families(scan):
    return scan[0]


@pytest.fixture(scope="session")
def rejections(scan):
    return scan[1]


@pytest.fixture(scope="session")
def by_id(families):
    return {f.family_id: f for f in families}


@pytest.fixture(scope="session")
def reference_rows():
    return json.loads((DATA / "reference_families.json").read_text(encoding="utf-8"))["rows"]


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m:
            n, title = m.args
            _criteria.setdefault(n, {"title": title, "passed": 0, "failed": 0, "tests": set()})
            _criteria[n]["tests"].add(item.nodeid)


def pytest_runtest_logreport(report):
    for entry in _criteria.values():
        if report.nodeid not in entry["tests"]:
            continue
        if report.failed:
            entry["failed"] += 1
        elif report.when == "call" and report.passed:
            entry["passed"] += 1


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        e = _criteria[n]
        ran = e["passed"] + e["failed"]
        if not ran:
            status = "NOT RUN"
        elif e["failed"] or e["passed"] < len(e["tests"]):
            status = "FAIL"
        else:
            status = "PASS"
        terminalreporter.write_line(f"criterion {n:2d} {status:7s} {e['title']}")
