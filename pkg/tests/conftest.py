from __future__ import annotations

import pytest

from convexdim.configuration import PointConfiguration
from convexdim.constructions import cyclic_config

_ACCEPTANCE: dict[int, dict] = {}


@pytest.fixture
def square():
    return PointConfiguration.from_rows([(0, 0), (1, 0), (0, 1), (1, 1)])


@pytest.fixture
def tri_bary():
    # triangle with its barycenter; the last point is interior
    return PointConfiguration.from_rows([(0, 0), (3, 0), (0, 3), (1, 1)])


@pytest.fixture
def moment6():
    return cyclic_config(6, 4)


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1].split("[")[0]
    if not name.startswith("test_criterion_"):
        return
    if report.when == "call" or report.outcome != "passed":
        _, _, num, *words = name.split("_")
        entry = _ACCEPTANCE.setdefault(int(num), {"title": " ".join(words), "ok": True, "secs": 0.0})
        entry["ok"] &= report.outcome == "passed"
        entry["secs"] += report.duration


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_ACCEPTANCE):
        e = _ACCEPTANCE[num]
        label = "PASS" if e["ok"] else "FAIL"
        terminalreporter.write_line(f"criterion {num:2d} {label}  {e['title']} ({e['secs']:.1f}s)")
