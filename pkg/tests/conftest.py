import math

import numpy as np
import pytest
from hypothesis import strategies as st

from src.graph import Arc, MwGraph, Vertex
from src.models import ModelSpec, build
from src.utils.config import settings
from src.utils.metrics import solve_metrics


@pytest.fixture(autouse=True)
def _fresh_metrics():
    solve_metrics.reset()
    yield
    solve_metrics.reset()


@pytest.fixture
def rng():
    return np.random.default_rng(20240607)


@pytest.fixture
def polyacetylene():
    """Standard weights, flux π/2."""
    return build(ModelSpec(name="polyacetylene", weights="standard", flux=math.pi / 2))


@pytest.fixture
def small_settings(monkeypatch):
    """Lets a test tighten the cost cap without leaking into other tests."""

    def apply(**values):
        for key, value in values.items():
            monkeypatch.setattr(settings, key, value)
        return settings

    return apply


def random_mw_graph(rng, n_vertices=None, n_arcs=None, loops=True, connected=True):
    """Random MW-graph: weights in [0.1, 10], α uniform, parallel arcs allowed."""
    n = n_vertices or int(rng.integers(2, 11))
    m = n_arcs if n_arcs is not None else int(rng.integers(n - 1, 19))
    vertices = tuple(Vertex(f"v{i}", float(rng.uniform(0.1, 10.0))) for i in range(n))
    ends = []
    if connected:
        order = rng.permutation(n)
        ends += [(int(order[i]), int(order[i + 1])) for i in range(n - 1)]
    while len(ends) < max(m, 1):
        t, h = (int(x) for x in rng.integers(0, n, size=2))
        if t == h and not loops:
            continue
        ends.append((t, h))
    rng.shuffle(ends)
    arcs = tuple(
        Arc(f"e{k}", f"v{t}", f"v{h}", float(rng.uniform(0.1, 10.0)), float(rng.uniform(0.0, 2 * math.pi)))
        for k, (t, h) in enumerate(ends)
    )
    return MwGraph(vertices, arcs)


def random_bipartite_graph(rng, n_left, n_right, extra):
    left = [f"a{i}" for i in range(n_left)]
    right = [f"b{i}" for i in range(n_right)]
    ends = [(left[i % n_left], right[i % n_right]) for i in range(max(n_left, n_right))]
    ends += [(left[i % n_left], right[(i + 1) % n_right]) for i in range(min(n_left, n_right) - 1)]
    for _ in range(extra):
        ends.append((left[int(rng.integers(n_left))], right[int(rng.integers(n_right))]))
    arcs = []
    for k, (a, b) in enumerate(ends):
        tail, head = (a, b) if rng.random() < 0.5 else (b, a)
        arcs.append(Arc(f"e{k}", tail, head, 1.0, float(rng.uniform(0.0, 2 * math.pi))))
    return MwGraph(tuple(Vertex(v) for v in left + right), tuple(arcs))


@st.composite
def mw_graphs(draw, max_vertices=6, max_arcs=10):
    """Connected MW-graphs for property tests."""
    n = draw(st.integers(min_value=2, max_value=max_vertices))
    tree = [(i, draw(st.integers(min_value=0, max_value=i - 1))) for i in range(1, n)]
    extra = draw(
        st.lists(
            st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)),
            max_size=max_arcs - len(tree),
        )
    )
    weight = st.floats(min_value=0.1, max_value=10.0, allow_nan=False, allow_infinity=False)
    angle = st.floats(min_value=0.0, max_value=6.28, allow_nan=False, allow_infinity=False)
    vertices = tuple(Vertex(f"v{i}", draw(weight)) for i in range(n))
    arcs = tuple(
        Arc(f"e{k}", f"v{t}", f"v{h}", draw(weight), draw(angle)) for k, (t, h) in enumerate(tree + extra)
    )
    return MwGraph(vertices, arcs)
