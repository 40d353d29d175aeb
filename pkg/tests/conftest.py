"""Shared fixtures plus the acceptance summary printed after the run."""
from __future__ import annotations

import re

import numpy as np
import pytest

_CRITERION = re.compile(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)")
_outcomes: dict[int, tuple[str, str]] = {}


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def pytest_runtest_logreport(report):
    m = _CRITERION.search(report.nodeid)
    if not m:
        return
    num, name = int(m.group(1)), m.group(2).replace("_", " ")
    if report.when == "call" or report.failed:
        prev, first = _outcomes.get(num, ("PASS", name))
        status = "FAIL" if report.failed or prev == "FAIL" else "PASS"
        _outcomes[num] = (status, first)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_outcomes):
        status, name = _outcomes[num]
        terminalreporter.write_line(f"ACCEPTANCE {num} {status}: {name}")
