import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

_results = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(label): acceptance criterion with summary label")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    label = marker.args[0]
    if call.when == "setup" and call.excinfo is not None:
        _results[label] = False
    elif call.when == "call":
        _results[label] = call.excinfo is None


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok in _results.items():
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}")
