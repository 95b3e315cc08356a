"""Oriented doubling of finite connected multigraphs.

Every unoriented edge ``{i, j}`` (loops included) becomes two oriented edges
with ids ``2k`` (``i -> j``) and ``2k + 1`` (``j -> i``), where ``k`` is the
position of the edge in the input list. Edge ids double as the total order on
the oriented edge set.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import DisconnectedGraph, GraphError, GraphParseError, IsolatedVertex


@dataclass(frozen=True)
class UnorientedGraphSpec:
    vertex_count: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple((int(i), int(j)) for i, j in self.edges))
        if self.vertex_count < 1:
            raise GraphError("a graph needs at least one vertex")
        for i, j in self.edges:
            if not (0 <= i < self.vertex_count and 0 <= j < self.vertex_count):
                raise GraphError(f"edge ({i}, {j}) has an endpoint outside [0, {self.vertex_count})")


@dataclass(frozen=True)
class OrientedGraph:
    c0: int
    origin: tuple[int, ...]
    end: tuple[int, ...]
    spec: UnorientedGraphSpec = field(compare=False, repr=False)

    @property
    def edge_count(self) -> int:
        """Number of oriented edges, i.e. ``2 * c1``."""
        return len(self.origin)

    @property
    def c1(self) -> int:
        return len(self.origin) // 2

    @property
    def edges(self) -> range:
        return range(len(self.origin))

    def reverse(self, e: int) -> int:
        return e ^ 1

    def out_edges(self, i: int) -> list[int]:
        return [e for e in self.edges if self.origin[e] == i]

    def out_degree(self, i: int) -> int:
        return sum(1 for o in self.origin if o == i)

    def label(self, e: int) -> str:
        return f"{self.origin[e]}->{self.end[e]}"


def build_oriented(spec: UnorientedGraphSpec) -> OrientedGraph:
    origin, end = [], []
    for i, j in spec.edges:
        origin += [i, j]
        end += [j, i]
    n = spec.vertex_count
    if n > 1:
        degree = [0] * n
        for o in origin:
            degree[o] += 1
        isolated = [v for v in range(n) if degree[v] == 0]
        if isolated:
            raise IsolatedVertex(f"vertex {isolated[0]} has no incident edge")
        # union-find over the unoriented edges
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for i, j in spec.edges:
            parent[find(i)] = find(j)
        if len({find(v) for v in range(n)}) > 1:
            raise DisconnectedGraph(f"graph on {n} vertices is not connected")
    return OrientedGraph(n, tuple(origin), tuple(end), spec)


def successors(g: OrientedGraph, e: int) -> list[int]:
    """Edges whose origin is the end of ``e``, in edge order (includes ``J(e)``)."""
    j = g.end[e]
    return [f for f in g.edges if g.origin[f] == j]


def connectedness_matrix(g: OrientedGraph) -> list[list[int]]:
    k = [[0] * g.c0 for _ in range(g.c0)]
    for e in g.edges:
        k[g.origin[e]][g.end[e]] += 1
    return k


def q_matrix(g: OrientedGraph) -> list[list[int]]:
    """Diagonal matrix of outer degree minus one."""
    q = [[0] * g.c0 for _ in range(g.c0)]
    for i in range(g.c0):
        q[i][i] = g.out_degree(i) - 1
    return q


def graph(vertex_count: int, edges: Iterable[Sequence[int]]) -> OrientedGraph:
    """Shorthand: validate and double in one call."""
    return build_oriented(UnorientedGraphSpec(vertex_count, tuple(tuple(e) for e in edges)))


# ---------------------------------------------------------------------------
# a few standard families


def path_graph(n: int) -> OrientedGraph:
    return graph(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(n: int) -> OrientedGraph:
    """Star with a center 0 and ``n - 1`` leaves."""
    return graph(n, [(0, i) for i in range(1, n)])


def cycle_graph(n: int) -> OrientedGraph:
    return graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> OrientedGraph:
    return graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def bouquet(loops: int) -> OrientedGraph:
    return graph(1, [(0, 0)] * loops)


def random_multigraph(
    rng: random.Random, max_vertices: int = 5, max_edges: int = 8, loops: bool = True
) -> OrientedGraph:
    """Random connected multigraph: spanning tree plus random extra edges.

    Loops and parallel edges are allowed among the extras. The edge list is
    shuffled so the oriented edge order is not tree-first.
    """
    n = rng.randint(1, max_vertices)
    edges = [(rng.randrange(v), v) for v in range(1, n)]
    lo = max(1, len(edges))
    m = rng.randint(lo, max(lo, max_edges))
    while len(edges) < m:
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j and not loops and n > 1:
            continue
        edges.append((i, j))
    rng.shuffle(edges)
    return graph(n, edges)


# ---------------------------------------------------------------------------
# text format


def parse_graph(text: str) -> UnorientedGraphSpec:
    """Parse ``vertices N`` followed by ``edge I J`` lines (``#`` comments)."""
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "vertices":
                raise GraphParseError("expected 'vertices N' as the first statement", lineno)
            try:
                n = int(parts[1])
            except ValueError:
                raise GraphParseError(f"bad vertex count {parts[1]!r}", lineno) from None
            if n < 1:
                raise GraphParseError("vertex count must be positive", lineno)
            continue
        if len(parts) != 3 or parts[0] != "edge":
            raise GraphParseError(f"expected 'edge I J', got {line!r}", lineno)
        try:
            i, j = int(parts[1]), int(parts[2])
        except ValueError:
            raise GraphParseError(f"bad edge endpoints in {line!r}", lineno) from None
        if not (0 <= i < n and 0 <= j < n):
            raise GraphParseError(f"edge {i} {j} outside vertex range [0, {n})", lineno)
        edges.append((i, j))
    if n is None:
        raise GraphParseError("missing 'vertices N' line")
    return UnorientedGraphSpec(n, tuple(edges))


def serialize_graph(spec: UnorientedGraphSpec) -> str:
    lines = [f"vertices {spec.vertex_count}"]
    lines += [f"edge {i} {j}" for i, j in spec.edges]
    return "\n".join(lines) + "\n"
