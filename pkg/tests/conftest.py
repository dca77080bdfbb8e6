import json
import pathlib
import random

import hypothesis
import numpy as np
import pytest

from linkrank import build_graph
from oracles import FOUR_PAGE_EDGES, STAR_EDGES, random_edges

hypothesis.settings.register_profile("default", max_examples=60, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.load_profile("default")

DATA = pathlib.Path(__file__).parent / "data"
REPO = pathlib.Path(__file__).parent.parent


@pytest.fixture
def four_page():
    return build_graph(FOUR_PAGE_EDGES)


@pytest.fixture
def star():
    return build_graph(STAR_EDGES)


@pytest.fixture
def four_page_path():
    return REPO / "data" / "four_pages.tsv"


def oracle_graph_specs():
    return json.loads((DATA / "oracle_graphs.json").read_text())["graphs"]


def oracle_edge_lists():
    """The 25 shipped random graphs as raw edge lists."""
    return [random_edges(random.Random(s["seed"]), s["nodes"]) for s in oracle_graph_specs()]


def by_label(labels, values):
    return dict(zip(labels, np.asarray(values, dtype=float)))


# -- acceptance reporting ---------------------------------------------------

_criteria: dict = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        outcome.get_result().criterion = marker.args


def pytest_runtest_logreport(report):
    info = getattr(report, "criterion", None)
    if info is None or (report.when != "call" and report.passed):
        return
    number, title = info
    ok = _criteria.get(number, (title, True))[1] and report.passed
    _criteria[number] = (title, ok)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, ok = _criteria[number]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}")
