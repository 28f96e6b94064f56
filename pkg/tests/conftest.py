import pytest
from hypothesis import strategies as st

from iofpar.pinj import PartialInjection, make
from iofpar.search import enumerate_members


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run slow cross-checks")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@st.composite
def partial_injections(draw, min_n=1, max_n=7, n=None):
    if n is None:
        n = draw(st.integers(min_n, max_n))
    points = list(range(1, n + 1))
    dom = draw(st.lists(st.sampled_from(points), unique=True, max_size=n))
    im = draw(st.permutations(points))[: len(dom)]
    return make(n, zip(dom, im))


@st.composite
def members(draw, min_n=4, max_n=8):
    n = draw(st.integers(min_n, max_n))
    return draw(st.sampled_from(enumerate_members(n).elements))


def pi(n, *pairs) -> PartialInjection:
    return make(n, pairs)


def pytest_terminal_summary(terminalreporter):
    lines = []
    for key in ("passed", "failed"):
        for rep in terminalreporter.stats.get(key, []):
            lines += [v for k, v in getattr(rep, "user_properties", []) if k == "acceptance"]
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
