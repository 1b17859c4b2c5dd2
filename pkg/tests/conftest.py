"""Shared fixtures and the acceptance-criteria report.

The acceptance module's tests are named ``test_c<k>_...``; after the run a
one-line PASS/FAIL summary is printed per criterion.  The paper-scale
frontier experiment (10,000 samples) runs only with ``--paper-scale`` or
``OWAGEN_PAPER_SCALE=1``; the desk-scale variant always runs.
"""

import os
import re
import time

import pytest

from owagen import latin_hypercube, run_sweep

_ACCEPTANCE_RESULTS: dict[str, str] = {}
_CRITERION_RE = re.compile(r"test_(c\d+[a-z]?)_(\w+)")


def pytest_addoption(parser):
    parser.addoption(
        "--paper-scale",
        action="store_true",
        default=False,
        help="run the full 10,000-sample experiments in the acceptance suite",
    )


def paper_scale_enabled(config) -> bool:
    return config.getoption("--paper-scale") or os.environ.get("OWAGEN_PAPER_SCALE") == "1"


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if item.module.__name__ != "test_acceptance":
        return
    match = _CRITERION_RE.match(item.name.split("[")[0])
    if not match:
        return
    key = f"{match.group(1).upper()} {match.group(2).replace('_', ' ')}"
    if report.when == "call":
        if report.skipped:
            _ACCEPTANCE_RESULTS[key] = "SKIP"
        else:
            _ACCEPTANCE_RESULTS[key] = "PASS" if report.passed else "FAIL"
    elif report.when == "setup" and report.skipped:
        _ACCEPTANCE_RESULTS[key] = "SKIP"


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _ACCEPTANCE_RESULTS:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for key in sorted(_ACCEPTANCE_RESULTS):
        terminalreporter.write_line(f"[ACCEPTANCE] {key}: {_ACCEPTANCE_RESULTS[key]}")


@pytest.fixture(scope="session")
def ci_sweep():
    """Desk-scale sweep shared by the acceptance tests: 2,000 LHS points.

    Returns (points, records, elapsed_seconds); the timing covers the
    calibration of all points from a cold cache.
    """
    points = latin_hypercube(2000, seed=2024)
    start = time.perf_counter()
    records = run_sweep(points, epsilon=1e-8)
    elapsed = time.perf_counter() - start
    return points, records, elapsed


@pytest.fixture(scope="session")
def paper_sweep(request):
    """Full-scale sweep: 10,000 LHS points (opt-in)."""
    if not paper_scale_enabled(request.config):
        pytest.skip("paper-scale run disabled (use --paper-scale or OWAGEN_PAPER_SCALE=1)")
    points = latin_hypercube(10000, seed=2024)
    start = time.perf_counter()
    records = run_sweep(points, epsilon=1e-8)
    elapsed = time.perf_counter() - start
    return points, records, elapsed
