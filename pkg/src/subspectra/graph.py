"""Simple connected graphs, edge-list I/O, and the edge-subdivision operator."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .errors import (
    DisconnectedError,
    DuplicateEdgeError,
    ParseError,
    ResourceLimitError,
    SelfLoopError,
)

DEFAULT_VERTEX_CAP = 10**7


@dataclass(frozen=True)
class Graph:
    """Immutable simple connected undirected graph on vertices 0..N-1.

    Edges are stored as (min, max) pairs in lexicographic order and adjacency
    lists are sorted, so two equal graphs have identical field values.  Build
    instances through :meth:`from_edges` or :func:`parse_edge_list`; the raw
    constructor performs no validation.
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...]
    degrees: tuple[int, ...]

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[tuple[int, int]]) -> Graph:
        """Validate and canonicalize an edge collection into a Graph.

        Raises SelfLoopError, DuplicateEdgeError or DisconnectedError when the
        input is not a simple connected graph, and ValueError for ids outside
        0..vertex_count-1.
        """
        if vertex_count < 2:
            raise ValueError("a graph needs at least two vertices and one edge")
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(f"vertex id out of range in edge ({u}, {v})")
            if u == v:
                raise SelfLoopError(f"self-loop at vertex {u}")
            pair = (u, v) if u < v else (v, u)
            if pair in seen:
                raise DuplicateEdgeError(f"duplicate edge {pair[0]} {pair[1]}")
            seen.add(pair)
        ordered = tuple(sorted(seen))
        neighbors: list[list[int]] = [[] for _ in range(vertex_count)]
        for u, v in ordered:
            neighbors[u].append(v)
            neighbors[v].append(u)
        degrees = tuple(len(ns) for ns in neighbors)
        for vertex, degree in enumerate(degrees):
            if degree == 0:
                raise DisconnectedError(f"vertex {vertex} has no edges")
        _require_connected(vertex_count, neighbors)
        adjacency = tuple(tuple(sorted(ns)) for ns in neighbors)
        return cls(vertex_count, ordered, adjacency, degrees)

    @property
    def edge_count(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class GraphMeta:
    """Structural facts about a graph: cycle content and 2-colorability."""

    circuit_rank: int
    has_odd_cycle: bool
    is_bipartite: bool

    def __post_init__(self):
        if self.has_odd_cycle == self.is_bipartite:
            raise ValueError("has_odd_cycle must be the negation of is_bipartite")
        if self.circuit_rank < 0:
            raise ValueError("circuit rank cannot be negative")


def _require_connected(vertex_count: int, neighbors: list[list[int]]) -> None:
    reached = [False] * vertex_count
    reached[0] = True
    queue = deque([0])
    count = 1
    while queue:
        current = queue.popleft()
        for other in neighbors[current]:
            if not reached[other]:
                reached[other] = True
                count += 1
                queue.append(other)
    if count != vertex_count:
        raise DisconnectedError(
            f"only {count} of {vertex_count} vertices reachable from vertex 0"
        )


def parse_edge_list(text: str) -> Graph:
    """Parse edge-list text: one "u v" pair per line, '#' comments, blank lines.

    Vertex ids must be nonnegative integers.  Ids that already form the dense
    range 0..N-1 are kept as they are; any other id set is compacted to
    0..N-1 in order of first appearance.
    """
    raw: list[tuple[int, int, int]] = []
    for number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {stripped!r}", line=number)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"vertex ids must be integers, got {stripped!r}", line=number) from None
        if u < 0 or v < 0:
            raise ParseError(f"vertex ids must be nonnegative, got {stripped!r}", line=number)
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}", line=number)
        raw.append((u, v, number))

    if not raw:
        raise ParseError("no edges found")

    first_seen: dict[int, int] = {}
    for u, v, _ in raw:
        for vertex in (u, v):
            if vertex not in first_seen:
                first_seen[vertex] = len(first_seen)
    if set(first_seen) == set(range(len(first_seen))):
        relabel = {vertex: vertex for vertex in first_seen}
    else:
        relabel = first_seen

    seen: set[tuple[int, int]] = set()
    edges: list[tuple[int, int]] = []
    for u, v, number in raw:
        a, b = relabel[u], relabel[v]
        pair = (a, b) if a < b else (b, a)
        if pair in seen:
            raise DuplicateEdgeError(f"duplicate edge {u} {v}", line=number)
        seen.add(pair)
        edges.append(pair)
    return Graph.from_edges(len(relabel), edges)


def serialize_edge_list(g: Graph) -> str:
    """Edge-list text for a graph, one edge per line, sorted by (min, max)."""
    return "".join(f"{u} {v}\n" for u, v in g.edges)


def subdivide(g: Graph) -> Graph:
    """Insert a midpoint vertex on every edge.

    Original vertices keep their ids and degrees; the midpoint of the k-th
    edge (in sorted edge order) gets id N+k and degree 2.  The result has
    N+E vertices and 2E edges.
    """
    n = g.vertex_count
    new_edges: list[tuple[int, int]] = []
    for k, (u, v) in enumerate(g.edges):
        midpoint = n + k
        new_edges.append((u, midpoint))
        new_edges.append((v, midpoint))
    return Graph.from_edges(n + g.edge_count, new_edges)


def iterate_subdivide(g: Graph, n: int, vertex_cap: int = DEFAULT_VERTEX_CAP) -> Graph:
    """Apply :func:`subdivide` n times; n=0 returns the graph unchanged.

    The final graph has 2^n * E edges and N + (2^n - 1) * E vertices; the
    call fails up front with ResourceLimitError if that exceeds vertex_cap.
    """
    if n < 0:
        raise ValueError("subdivision level must be nonnegative")
    projected = g.vertex_count + (2**n - 1) * g.edge_count
    if projected > vertex_cap:
        raise ResourceLimitError(
            f"level {n} would need {projected} vertices, above the cap {vertex_cap}"
        )
    for _ in range(n):
        g = subdivide(g)
    return g


def analyze(g: Graph) -> GraphMeta:
    """Circuit rank and bipartiteness (via BFS 2-coloring)."""
    color = [-1] * g.vertex_count
    color[0] = 0
    queue = deque([0])
    bipartite = True
    while queue:
        current = queue.popleft()
        for other in g.adjacency[current]:
            if color[other] == -1:
                color[other] = 1 - color[current]
                queue.append(other)
            elif color[other] == color[current]:
                bipartite = False
    rank = g.edge_count - g.vertex_count + 1
    return GraphMeta(circuit_rank=rank, has_odd_cycle=not bipartite, is_bipartite=bipartite)
