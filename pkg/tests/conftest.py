"""Shared fixtures and the per-criterion summary printed after the acceptance run."""

from __future__ import annotations

from collections import OrderedDict

import pytest

CRITERIA = OrderedDict(
    [
        (1, "square tiling, alpha=-5+5i: 8 ideals, color counts, perfectness, D5 with f1=z+(-1+i)"),
        (2, "alpha=-5+5i distinct color counts are exactly 1, 2, 5, 10, 25, 50"),
        (3, "hexagonal tiling, alpha=6: 6 ideals all fully perfect, max 36, D6, f1=z+1, f2=-conj(z)"),
        (4, "triangle tiling, alpha=2+10w: (L,R)=(4,6), C2, f1=z+(1+5w), 8 ideals, max 56"),
        (5, "alpha=-5+5w Class 2 with (1+2w) fully perfect; alpha=10+2w Class 1 with (1+3w) C2-symmetric"),
        (6, "curve censuses for alpha=4+6i, -5+5i and 4"),
        (7, "oracle matrix over every admissible alpha of norm <= 150 with zero disagreements, <= 60 s"),
        (8, "property suites with at least 1000 cases each"),
        (9, "renderer rotation equivariance and the 4-color SVG for alpha=4, beta=2"),
    ]
)

_results: dict[int, list[bool]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): test backs acceptance criterion n")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        _results.setdefault(marker.args[0], []).append(rep.passed)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n, text in CRITERIA.items():
        got = _results.get(n)
        if not got:
            status = "NOT RUN"
        else:
            status = "PASS" if all(got) else "FAIL"
        tr.write_line(f"[{status}] criterion {n}: {text} ({len(got or [])} tests)")
