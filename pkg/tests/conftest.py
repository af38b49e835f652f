"""
Pytest configuration: named graph fixtures and a colorized per-area summary.

Run with: pytest tests/ -v
Exhaustive sweeps are marked slow; skip them with -m "not slow".
"""

import sys

import pytest

from doublegraph.core.graph import Graph, complete_graph, graph_from_edge_list
from doublegraph.harness.corpus import named_fixture

# ANSI colors (work in most terminals)
_CYAN = "\033[96m"     # graph core, formats, product
_GREEN = "\033[92m"    # connectivity, classification
_YELLOW = "\033[93m"   # harness, suite
_MAGENTA = "\033[95m"  # cli, config
_BOLD = "\033[1m"
_RESET = "\033[0m"

_AREAS = (
    ("test_graph", "GRAPH", _CYAN),
    ("test_formats", "FORMATS", _CYAN),
    ("test_product", "PRODUCT", _CYAN),
    ("test_flow", "FLOW", _GREEN),
    ("test_connectivity", "CONNECTIVITY", _GREEN),
    ("test_classify", "CLASSIFY", _GREEN),
    ("test_hamilton", "HAMILTON", _GREEN),
    ("test_properties", "PROPERTIES", _GREEN),
    ("test_corpus", "CORPUS", _YELLOW),
    ("test_checks", "CHECKS", _YELLOW),
    ("test_suite", "SUITE", _YELLOW),
    ("test_cli", "CLI", _MAGENTA),
    ("test_config", "CONFIG", _MAGENTA),
    ("test_instrumentation", "INSTRUMENTATION", _MAGENTA),
)

_area_stats = {}


def _area(nodeid):
    for module, tag, color in _AREAS:
        if module in nodeid:
            return tag, color
    return None, None


def pytest_runtest_logreport(report):
    """Count call-phase outcomes per area (setup-phase skips too)."""
    if report.when != "call" and not (report.when == "setup" and report.skipped):
        return
    tag, _ = _area(report.nodeid)
    if not tag:
        return
    stats = _area_stats.setdefault(tag, {"passed": 0, "failed": 0, "skipped": 0})
    if report.passed:
        stats["passed"] += 1
    elif report.failed:
        stats["failed"] += 1
    else:
        stats["skipped"] += 1


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _area_stats:
        return
    use_color = hasattr(sys.stdout, "isatty") and sys.stdout.isatty()
    terminalreporter.write_line("")
    terminalreporter.write_line("─" * 60)
    terminalreporter.write_line("  doublegraph test areas")
    terminalreporter.write_line("─" * 60)
    for _, tag, color in _AREAS:
        stats = _area_stats.get(tag)
        if not stats:
            continue
        label = f"{color}{_BOLD}[{tag}]{_RESET}" if use_color else f"[{tag}]"
        terminalreporter.write_line(
            f"  {label:<32} pass={stats['passed']}  fail={stats['failed']}  "
            f"skip={stats['skipped']}"
        )


@pytest.fixture
def path4() -> Graph:
    return graph_from_edge_list(4, [(0, 1), (1, 2), (2, 3)])


@pytest.fixture
def cycle4() -> Graph:
    return graph_from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


@pytest.fixture
def cycle5() -> Graph:
    return named_fixture("cycle_5")


@pytest.fixture
def k4() -> Graph:
    return complete_graph(4)


@pytest.fixture
def fig2() -> Graph:
    return named_fixture("fig2")


@pytest.fixture
def fig4() -> Graph:
    return named_fixture("fig4")


@pytest.fixture
def cubic_pair() -> Graph:
    return named_fixture("cubic_pair")


@pytest.fixture
def petersen() -> Graph:
    return named_fixture("petersen")
