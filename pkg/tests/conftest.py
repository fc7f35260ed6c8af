import random

import pytest
from hypothesis import strategies as st

from hubforce import build_graph, heaven, hellc4
from hubforce.dynamics import Opinion
from hubforce.oracle import random_graph


@pytest.fixture
def heaven2():
    return heaven(2)


@pytest.fixture
def heaven1():
    return heaven(1)


@pytest.fixture
def hell():
    return hellc4()


def small_corpus(count=40, seed=99, min_n=2, max_n=8, max_weight=6):
    """Deterministic list of small random instances (hubs at random positions)."""
    rng = random.Random(seed)
    return [random_graph(rng, rng.randint(min_n, max_n), max_weight) for _ in range(count)]


@st.composite
def graphs(draw, min_n=1, max_n=8, max_weight=10, with_hub=True):
    n = draw(st.integers(min_n, max_n))
    if with_hub:
        hub = draw(st.integers(0, n - 1))
    else:
        hub = draw(st.one_of(st.none(), st.integers(0, n - 1)))
    edges = draw(
        st.lists(
            st.tuples(
                st.integers(0, n - 1),
                st.integers(0, n - 1),
                st.integers(0, max_weight),
            ),
            max_size=3 * n * n,
        )
    )
    return build_graph(n, hub, edges)


@st.composite
def graph_and_state(draw, **kwargs):
    g = draw(graphs(**kwargs))
    state = tuple(
        draw(st.lists(st.sampled_from(list(Opinion)), min_size=g.n, max_size=g.n))
    )
    return g, state
