"""Collects acceptance-criterion outcomes and prints one line per criterion at the end."""

import pytest

_results = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label, text): acceptance criterion this test checks")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    label, text = marker.args
    entry = _results.setdefault(label, {"text": text, "ok": True, "ran": False, "why": ""})
    if call.when == "call" or (call.when == "setup" and call.excinfo is not None):
        entry["ran"] = True
        if call.excinfo is not None and not call.excinfo.errisinstance(pytest.skip.Exception):
            entry["ok"] = False
            entry["why"] = str(call.excinfo.value).splitlines()[0][:160] if str(call.excinfo.value) else ""


def _order(label):
    digits = "".join(c for c in label if c.isdigit())
    return int(digits), label


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for label in sorted(_results, key=_order):
        r = _results[label]
        status = "PASS" if r["ok"] and r["ran"] else ("NOT RUN" if not r["ran"] else "FAIL")
        line = f"criterion {label:>3}: {status:4}  {r['text']}"
        if status == "FAIL" and r["why"]:
            line += f"  -- {r['why']}"
        tr.write_line(line)
