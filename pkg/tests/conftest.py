"""Shared graph builders and seeded random corpora for the test suite."""

from __future__ import annotations

import random
from itertools import combinations

from hypothesis import strategies as st

from subspectra.graph import Graph, analyze


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(n: int) -> Graph:
    """Star with center 0 and n-1 leaves."""
    return Graph.from_edges(n, [(0, i) for i in range(1, n)])


def random_connected_graph(
    seed: int, n: int, extra_edges: int, bipartite: bool | None = None
) -> Graph:
    """Seeded random connected graph: a random spanning tree plus extra edges.

    bipartite=True restricts the extras to pairs on opposite sides of the
    tree 2-coloring; bipartite=False forces at least one same-side edge,
    which closes an odd cycle.
    """
    rng = random.Random(seed)
    parents = [rng.randrange(i) for i in range(1, n)]
    color = [0] * n
    for i in range(1, n):
        color[i] = 1 - color[parents[i - 1]]
    edges = {tuple(sorted((parents[i - 1], i))) for i in range(1, n)}
    spare = [p for p in combinations(range(n), 2) if p not in edges]
    if bipartite is True:
        pool = [p for p in spare if color[p[0]] != color[p[1]]]
    elif bipartite is False:
        same = [p for p in spare if color[p[0]] == color[p[1]]]
        if not same:
            raise ValueError(f"no odd-cycle-closing edge available for n={n}")
        edges.add(same[rng.randrange(len(same))])
        extra_edges = max(extra_edges - 1, 0)
        pool = [p for p in spare if p not in edges]
    else:
        pool = spare
    edges.update(rng.sample(pool, min(extra_edges, len(pool))))
    g = Graph.from_edges(n, edges)
    if bipartite is not None:
        assert analyze(g).is_bipartite is bipartite
    return g


def small_corpus() -> list[tuple[str, Graph]]:
    """Named seed graphs exercised by the cross-route agreement tests."""
    return [
        ("k2", path_graph(2)),
        ("k3", complete_graph(3)),
        ("k4", complete_graph(4)),
        ("c4", cycle_graph(4)),
        ("c5", cycle_graph(5)),
        ("p4", path_graph(4)),
        ("star5", star_graph(5)),
        ("rand_bip", random_connected_graph(11, 7, 3, bipartite=True)),
        ("rand_odd", random_connected_graph(12, 7, 3, bipartite=False)),
    ]


@st.composite
def connected_graphs(draw, max_vertices: int = 8) -> Graph:
    """Hypothesis strategy for small connected graphs (random tree plus extras)."""
    n = draw(st.integers(2, max_vertices))
    parents = [draw(st.integers(0, i - 1)) for i in range(1, n)]
    edges = {tuple(sorted((parents[i - 1], i))) for i in range(1, n)}
    spare = [p for p in combinations(range(n), 2) if p not in edges]
    if spare:
        edges.update(draw(st.lists(st.sampled_from(spare), unique=True)))
    return Graph.from_edges(n, edges)
