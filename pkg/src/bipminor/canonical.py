"""Exact canonical forms and isomorphism tests for small graphs.

The canonical form of a graph is the lexicographically minimal
upper-triangular adjacency bit sequence over all vertex orderings, read
column by column (the same bit order graph6 uses).  It is computed by
branch and bound over partial orderings: placing a vertex at position j
fixes column j, columns have fixed width, so candidates whose column
exceeds the node minimum can never win and are cut, and the incumbent
prunes everything that falls behind its prefix.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph_core import Graph, GraphError, SizeCapExceeded, normalize_edge

DEFAULT_CANON_CAP = 16

_cache: dict[Graph, "CanonicalForm"] = {}


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Isomorphism-invariant fingerprint of a graph.

    ``canonical_bits`` packs the minimal upper-triangle sequence into an
    integer of ``vertex_count * (vertex_count - 1) / 2`` bits, first bit
    most significant.  Two graphs have equal forms iff they are isomorphic.
    """

    vertex_count: int
    canonical_bits: int

    def bit_length(self) -> int:
        return self.vertex_count * (self.vertex_count - 1) // 2

    def to_graph(self) -> Graph:
        """Rebuild the canonically labelled representative graph."""
        n = self.vertex_count
        total = self.bit_length()
        edges = []
        pos = 0
        for j in range(1, n):
            for i in range(j):
                if (self.canonical_bits >> (total - 1 - pos)) & 1:
                    edges.append((i, j))
                pos += 1
        return Graph(n, frozenset(edges))


def canonical_form(g: Graph, cap: int = DEFAULT_CANON_CAP) -> CanonicalForm:
    """Canonical form of ``g``; rejects graphs above the size cap."""
    if g.vertex_count > cap:
        raise SizeCapExceeded(
            f"graph has {g.vertex_count} vertices, canonicalization cap is {cap}"
        )
    cached = _cache.get(g)
    if cached is None:
        cached = CanonicalForm(g.vertex_count, _minimal_bits(g))
        _cache[g] = cached
    return cached


def are_isomorphic(g: Graph, h: Graph, cap: int = DEFAULT_CANON_CAP) -> bool:
    """True iff an edge-preserving vertex bijection exists."""
    if g.vertex_count != h.vertex_count or g.edge_count != h.edge_count:
        return False
    if _degree_profile(g) != _degree_profile(h):
        return False
    return canonical_form(g, cap) == canonical_form(h, cap)


def _degree_profile(g: Graph) -> tuple:
    adj = g.adjacency
    degs = [len(a) for a in adj]
    per_vertex = sorted(
        (degs[v], tuple(sorted(degs[w] for w in adj[v]))) for v in g.vertices
    )
    return tuple(per_vertex)


def _minimal_bits(g: Graph) -> int:
    n = g.vertex_count
    if n <= 1:
        return 0
    masks = g.neighbor_masks

    # twin_mask[u]: vertices whose transposition with u is an automorphism
    # (they agree off each other); at any node only one of a twin pair
    # needs exploring.
    twin_mask = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if masks[u] & ~(1 << v) == masks[v] & ~(1 << u):
                twin_mask[u] |= 1 << v
                twin_mask[v] |= 1 << u

    best: list[int] | None = None
    cols = [0] * n  # running column value of each unplaced candidate
    chosen: list[int] = []

    def extend(depth: int, used: int, tied: bool) -> None:
        nonlocal best
        if depth == n:
            if best is None or chosen < best:
                best = chosen.copy()
            return

        # Columns have fixed width, so only candidates achieving the node
        # minimum can reach the optimum.
        min_col = 1 << 60
        for u in range(n):
            if not (used >> u) & 1 and cols[u] < min_col:
                min_col = cols[u]

        next_tied = tied
        if tied and best is not None:
            ref = best[depth]
            if min_col > ref:
                return
            next_tied = min_col == ref

        tried = 0
        for u in range(n):
            if (used >> u) & 1 or cols[u] != min_col or twin_mask[u] & tried:
                continue
            tried |= 1 << u
            new_used = used | (1 << u)
            mu = masks[u]
            for w in range(n):
                if not (new_used >> w) & 1:
                    cols[w] = (cols[w] << 1) | ((mu >> w) & 1)
            chosen.append(min_col)
            extend(depth + 1, new_used, next_tied)
            chosen.pop()
            for w in range(n):
                if not (new_used >> w) & 1:
                    cols[w] >>= 1

    extend(0, 0, True)
    assert best is not None

    bits = 0
    for j, col in enumerate(best):
        bits = (bits << j) | col
    return bits


def permute(g: Graph, order: list[int] | tuple[int, ...]) -> Graph:
    """Relabel ``g`` so old vertex ``order[i]`` becomes new vertex ``i``."""
    if sorted(order) != list(g.vertices):
        raise GraphError("order must be a permutation of the vertices")
    pos = {v: i for i, v in enumerate(order)}
    return Graph(
        g.vertex_count,
        frozenset(normalize_edge(pos[u], pos[v]) for u, v in g.edges),
    )
