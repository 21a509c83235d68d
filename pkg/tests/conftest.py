from __future__ import annotations

import hypothesis.strategies as st
from hypothesis import settings

from linecut.model import Instance, compress

settings.register_profile("suite", deadline=None, max_examples=60)
settings.load_profile("suite")

# Visible one-line verdicts for the acceptance tests, printed after the run.
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_LINES:
        terminalreporter.write_line(line)


small_coords = st.integers(min_value=-50, max_value=50)
wide_coords = st.integers(min_value=-(1 << 40), max_value=1 << 40)


@st.composite
def instances(draw, max_n: int = 12, coord=small_coords, max_scale: int = 0):
    n = draw(st.integers(1, max_n))
    xs = draw(st.lists(coord, min_size=n, max_size=n))
    scale = draw(st.integers(0, max_scale)) if max_scale else 0
    return Instance(tuple(xs), scale)


@st.composite
def compressed_instances(draw, max_n: int = 12, coord=small_coords):
    return compress(draw(instances(max_n=max_n, coord=coord)))


@st.composite
def compressed_with_profile(draw, max_n: int = 12, coord=small_coords):
    ci = compress(draw(instances(max_n=max_n, coord=coord)))
    a = tuple(draw(st.integers(0, m)) for m in ci.mult)
    return ci, a
