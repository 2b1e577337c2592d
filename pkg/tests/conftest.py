import sys
from pathlib import Path

from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

FIXTURES = Path(__file__).parent / "fixtures"


@st.composite
def staircase_diagrams(draw, max_m=12):
    """(m, strict partition with parts <= m)."""
    m = draw(st.integers(min_value=0, max_value=max_m))
    parts = draw(st.sets(st.integers(min_value=1, max_value=max(m, 1)), max_size=m)) if m else set()
    return m, tuple(sorted(parts, reverse=True))


@st.composite
def rectangle_diagrams(draw, max_side=7):
    rows = draw(st.integers(min_value=1, max_value=max_side))
    cols = draw(st.integers(min_value=1, max_value=max_side))
    parts = draw(st.lists(st.integers(min_value=0, max_value=cols), max_size=rows))
    return rows, cols, tuple(sorted(parts, reverse=True))


_ACCEPTANCE = []


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): exit criterion of the build")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("acceptance")
    if marker is None or call.when != "call":
        return
    number, title = marker.args
    _ACCEPTANCE.append((number, title, call.excinfo is None))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok in sorted(_ACCEPTANCE):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  #{number} {title}")
