import os

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from pancyclic.graph import Graph

settings.register_profile(
    "default", deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@st.composite
def graphs(draw, min_order=0, max_order=8, density=None):
    n = draw(st.integers(min_order, max_order))
    pairs = [(i, j) for j in range(n) for i in range(j)]
    if density is None:
        chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    else:
        chosen = [draw(st.floats(0, 1)) < density for _ in pairs]
    return Graph.from_edges(n, (p for p, c in zip(pairs, chosen) if c))


@st.composite
def permutations_of(draw, n):
    return draw(st.permutations(list(range(n))))


def pytest_collection_modifyitems(config, items):
    if os.environ.get("PANCYCLIC_EXTENDED") == "1":
        return
    skip = pytest.mark.skip(reason="extended tier; set PANCYCLIC_EXTENDED=1")
    for item in items:
        if "extended" in item.keywords:
            item.add_marker(skip)


# acceptance criteria record their verdicts here; printed after the run
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, line = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {line}")
