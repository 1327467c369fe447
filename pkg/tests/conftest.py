import random
import sys
from fractions import Fraction

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from arbor import build_digraph, random_digraph

# exact arithmetic on brute-force loops has uneven timing
settings.register_profile("default", deadline=None)
settings.load_profile("default")

RUNNING_LABELS = ["v1", "v2", "v3"]
# e1..e5 of the three-vertex running example
RUNNING_EDGES = [("v1", "v2"), ("v2", "v3"), ("v3", "v2"), ("v3", "v1"), ("v1", "v3")]
RUNNING_WEIGHTS = [2, 3, 5, 7, 11]


def running_example():
    return build_digraph(RUNNING_LABELS, RUNNING_EDGES)


def weighted_running_example():
    specs = [(a, b, w) for (a, b), w in zip(RUNNING_EDGES, RUNNING_WEIGHTS)]
    return build_digraph(RUNNING_LABELS, specs)


@pytest.fixture
def g():
    return running_example()


@pytest.fixture
def gw():
    return weighted_running_example()


def small_graphs(seed=0, count=40, sizes=range(1, 6), weighted=False):
    rng = random.Random(seed)
    out = []
    for p in sizes:
        for _ in range(count):
            out.append(random_digraph(p, rng.uniform(0.2, 0.7), rng, weighted=weighted))
    return out


@st.composite
def digraphs(draw, max_p=5, weighted=None, max_edges=12):
    p = draw(st.integers(1, max_p))
    pairs = [(i, j) for i in range(p) for j in range(p) if i != j]
    # bounded so brute force over (p-1)-subsets stays quick
    limit = min(len(pairs), max_edges)
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=limit)) if pairs else []
    if weighted is None:
        weighted = draw(st.booleans())
    labels = [f"v{i + 1}" for i in range(p)]
    specs = []
    for i, j in chosen:
        if weighted:
            w = Fraction(draw(st.integers(1, 100)), draw(st.integers(1, 100)))
            specs.append((labels[i], labels[j], w))
        else:
            specs.append((labels[i], labels[j]))
    return build_digraph(labels, specs, weighted=weighted)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
