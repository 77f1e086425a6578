"""Immutable simple graphs and the elementary operations on them.

Vertices are the dense integers ``0..vertex_count-1``.  Every operation
returns a fresh graph, relabelled compactly, so a recorded sequence of
operations replays to the same labelled graph on every run.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

Edge = tuple[int, int]

DEFAULT_SIZE_CAP = 14
SIZE_CAP_ENV = "BIPMINOR_SIZE_CAP"


class GraphError(ValueError):
    """Invalid graph construction, operation argument, or input data."""


class SizeCapExceeded(GraphError):
    """Input graph is larger than the active size cap."""


def resolve_size_cap(cap: int | None = None) -> int:
    """Active search cap: explicit value, else BIPMINOR_SIZE_CAP, else 14."""
    if cap is not None:
        return cap
    env = os.environ.get(SIZE_CAP_ENV, "").strip()
    if env:
        try:
            return int(env)
        except ValueError as exc:
            raise GraphError(f"bad {SIZE_CAP_ENV} value: {env!r}") from exc
    return DEFAULT_SIZE_CAP


def check_size_cap(g: "Graph", cap: int | None = None) -> None:
    limit = resolve_size_cap(cap)
    if g.vertex_count > limit:
        raise SizeCapExceeded(
            f"graph has {g.vertex_count} vertices, size cap is {limit}"
        )


@dataclass(frozen=True)
class Graph:
    """A finite simple undirected graph on vertices ``0..vertex_count-1``.

    Edges are stored as normalized pairs ``(u, v)`` with ``u < v``.
    Instances are immutable, hashable, and safe to share between workers.
    """

    vertex_count: int
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise GraphError("vertex_count must be nonnegative")
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"loop edge at vertex {u}")
            if u > v:
                raise GraphError(f"edge not normalized: ({u}, {v})")
            if not 0 <= u < self.vertex_count or not 0 <= v < self.vertex_count:
                raise GraphError(f"edge endpoint out of range: ({u}, {v})")

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(self.vertex_count)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def neighbor_masks(self) -> tuple[int, ...]:
        """Adjacency as bitmasks; the workhorse of the search modules."""
        masks = [0] * self.vertex_count
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    def neighbors(self, v: int) -> frozenset[int]:
        self.check_vertex(v)
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        self.check_vertex(v)
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return normalize_edge(u, v) in self.edges if u != v else False

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self.vertex_count:
            raise GraphError(
                f"vertex {v} out of range for graph on {self.vertex_count} vertices"
            )

    def __repr__(self) -> str:
        return f"Graph(n={self.vertex_count}, edges={sorted(self.edges)})"


def normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def build(vertex_count: int, edge_list: Iterable[Sequence[int]]) -> Graph:
    """Build a graph from an edge list, rejecting loops, duplicates, and
    out-of-range endpoints with distinct diagnostics."""
    if vertex_count < 0:
        raise GraphError("vertex_count must be nonnegative")
    seen: set[Edge] = set()
    for pair in edge_list:
        u, v = pair
        if u == v:
            raise GraphError(f"loop edge at vertex {u}")
        if not 0 <= u < vertex_count or not 0 <= v < vertex_count:
            raise GraphError(f"edge endpoint out of range: ({u}, {v})")
        e = normalize_edge(u, v)
        if e in seen:
            raise GraphError(f"duplicate edge: ({u}, {v})")
        seen.add(e)
    return Graph(vertex_count, frozenset(seen))


def delete_vertex(g: Graph, v: int) -> Graph:
    """Remove ``v`` and its incident edges; labels above ``v`` shift down."""
    g.check_vertex(v)

    def relabel(x: int) -> int:
        return x if x < v else x - 1

    edges = frozenset(
        normalize_edge(relabel(a), relabel(b)) for a, b in g.edges if v not in (a, b)
    )
    return Graph(g.vertex_count - 1, edges)


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    """Remove the edge ``uv``; the vertex set is unchanged."""
    g.check_vertex(u)
    g.check_vertex(v)
    if not g.has_edge(u, v):
        raise GraphError(f"not an edge: ({u}, {v})")
    return Graph(g.vertex_count, g.edges - {normalize_edge(u, v)})


def contract_set(g: Graph, vertex_set: Iterable[int]) -> Graph:
    """Contract a vertex set to a single new vertex.

    The new vertex is adjacent to every vertex outside the set that had a
    neighbor inside it, parallel edges collapse, and it takes the label
    position of the smallest contracted vertex; all other survivors keep
    their relative order.
    """
    members = set(vertex_set)
    if not members:
        raise GraphError("cannot contract an empty vertex set")
    for v in members:
        g.check_vertex(v)

    anchor = min(members)
    survivors = [v for v in g.vertices if v not in members]
    # The merged vertex stands at anchor's slot in the compact relabeling.
    order = sorted(survivors + [anchor])
    new_label = {v: i for i, v in enumerate(order)}
    merged = new_label[anchor]

    edges: set[Edge] = set()
    for a, b in g.edges:
        a_in, b_in = a in members, b in members
        if a_in and b_in:
            continue
        if a_in:
            edges.add(normalize_edge(merged, new_label[b]))
        elif b_in:
            edges.add(normalize_edge(merged, new_label[a]))
        else:
            edges.add(normalize_edge(new_label[a], new_label[b]))
    return Graph(g.vertex_count - len(members) + 1, frozenset(edges))


@dataclass(frozen=True)
class Bipartition:
    """Two-coloring of the vertices; ``side_of[v]`` is 0 or 1."""

    side_of: tuple[int, ...]

    def classes(self) -> tuple[frozenset[int], ...]:
        return (
            frozenset(v for v, s in enumerate(self.side_of) if s == 0),
            frozenset(v for v, s in enumerate(self.side_of) if s == 1),
        )


def is_bipartite(g: Graph) -> Bipartition | None:
    """Two-color ``g`` if it has no odd cycle, else return ``None``.

    The lowest-indexed vertex of each component is assigned class 0, so the
    returned partition is deterministic.
    """
    side = [-1] * g.vertex_count
    adj = g.adjacency
    for start in g.vertices:
        if side[start] != -1:
            continue
        side[start] = 0
        queue = [start]
        while queue:
            v = queue.pop()
            for w in adj[v]:
                if side[w] == -1:
                    side[w] = 1 - side[v]
                    queue.append(w)
                elif side[w] == side[v]:
                    return None
    return Bipartition(tuple(side))
