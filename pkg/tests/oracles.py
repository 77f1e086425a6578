"""Brute-force oracles used to pin expected values.

Everything here is deliberately naive: permutations for isomorphism,
injective maps for subgraph containment, exhaustive cycle enumeration for
chordless / non-separating / block questions, and an operation-sequence
search for the classical minor relation.  These stay independent of the
library's production search paths.
"""

from __future__ import annotations

import itertools
from typing import Iterable

from bipminor.canonical import canonical_form
from bipminor.graph_core import (
    Graph,
    build,
    contract_set,
    delete_edge,
    delete_vertex,
    normalize_edge,
)


def random_graph(rng, max_vertices: int, min_vertices: int = 0) -> Graph:
    n = rng.randint(min_vertices, max_vertices)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = rng.sample(pairs, rng.randint(0, len(pairs))) if pairs else []
    return build(n, chosen)


def random_sparse_connected(rng, max_vertices: int, extra: int = 2) -> Graph:
    n = rng.randint(2, max_vertices)
    edges = set()
    for v in range(1, n):
        edges.add(normalize_edge(v, rng.randrange(v)))
    pool = [
        (i, j) for i in range(n) for j in range(i + 1, n) if (i, j) not in edges
    ]
    rng.shuffle(pool)
    edges.update(pool[: rng.randint(0, extra)])
    return build(n, edges)


def brute_min_bits(g: Graph) -> int:
    """Minimum upper-triangle bit string over all vertex orderings."""
    best = None
    for perm in itertools.permutations(range(g.vertex_count)):
        bits = 0
        for j in range(1, g.vertex_count):
            for i in range(j):
                bits = (bits << 1) | (1 if g.has_edge(perm[i], perm[j]) else 0)
        if best is None or bits < best:
            best = bits
    return best if best is not None else 0


def brute_isomorphic(g: Graph, h: Graph) -> bool:
    if g.vertex_count != h.vertex_count or g.edge_count != h.edge_count:
        return False
    n = g.vertex_count
    for perm in itertools.permutations(range(n)):
        if all(
            h.has_edge(perm[u], perm[v]) == g.has_edge(u, v)
            for u in range(n)
            for v in range(u + 1, n)
        ):
            return True
    return False


def brute_subgraph(h: Graph, g: Graph) -> bool:
    if h.vertex_count > g.vertex_count or h.edge_count > g.edge_count:
        return False
    for image in itertools.permutations(range(g.vertex_count), h.vertex_count):
        if all(g.has_edge(image[u], image[v]) for u, v in h.edges):
            return True
    return False


def all_simple_cycles(g: Graph) -> list[tuple[int, ...]]:
    """Every simple cycle once: smallest vertex first, smaller neighbor
    second."""
    out = []
    adj = g.adjacency

    def grow(start: int, path: list[int], used: set[int]) -> None:
        last = path[-1]
        for w in sorted(adj[last]):
            if w == start and len(path) >= 3 and path[1] < last:
                out.append(tuple(path))
            elif w > start and w not in used:
                path.append(w)
                used.add(w)
                grow(start, path, used)
                used.remove(w)
                path.pop()

    for start in g.vertices:
        grow(start, [start], {start})
    return out


def _components_without(g: Graph, removed: set[int]) -> int:
    left = [v for v in g.vertices if v not in removed]
    seen: set[int] = set()
    count = 0
    for v in left:
        if v in seen:
            continue
        count += 1
        stack = [v]
        seen.add(v)
        while stack:
            x = stack.pop()
            for y in g.adjacency[x]:
                if y not in removed and y not in seen:
                    seen.add(y)
                    stack.append(y)
    return count


def has_odd_cycle(g: Graph) -> bool:
    return any(len(c) % 2 == 1 for c in all_simple_cycles(g))


def _chordless(g: Graph, cyc: tuple[int, ...]) -> bool:
    m = len(cyc)
    for i in range(m):
        for j in range(i + 1, m):
            if (j - i) % m not in (1, m - 1) and g.has_edge(cyc[i], cyc[j]):
                return False
    return True


def brute_peripheral(g: Graph) -> set[tuple[int, ...]]:
    base = _components_without(g, set())
    return {
        c
        for c in all_simple_cycles(g)
        if _chordless(g, c) and _components_without(g, set(c)) <= base
    }


def brute_admissible_pairs(g: Graph) -> set[tuple[int, int]]:
    """Pairs with a common neighbor w such that u,w,v sit consecutively on
    some chordless non-separating cycle; found by scanning all cycles."""
    pairs = set()
    for cyc in brute_peripheral(g):
        m = len(cyc)
        for i in range(m):
            u, v = cyc[i], cyc[(i + 2) % m]
            pairs.add((u, v) if u < v else (v, u))
    return pairs


def brute_blocks(g: Graph) -> tuple[set[frozenset], set[int]]:
    """Edge partition via "lie on a common cycle" classes plus bridge
    singletons, and cut vertices via component counting."""
    parent: dict = {e: e for e in g.edges}

    def find(e):
        while parent[e] != e:
            parent[e] = parent[parent[e]]
            e = parent[e]
        return e

    for cyc in all_simple_cycles(g):
        m = len(cyc)
        first = normalize_edge(cyc[0], cyc[1])
        for i in range(1, m):
            e = normalize_edge(cyc[i], cyc[(i + 1) % m])
            ra, rb = find(first), find(e)
            if ra != rb:
                parent[ra] = rb

    groups: dict = {}
    for e in g.edges:
        groups.setdefault(find(e), set()).add(e)
    block_sets = {frozenset(s) for s in groups.values()}

    base = _components_without(g, set())
    cuts = {
        v for v in g.vertices if _components_without(g, {v}) > base
    }
    return block_sets, cuts


def bipminor_by_unpruned_search(h: Graph, g: Graph) -> bool:
    """Reference bipartite-minor decision: breadth-first over operation
    sequences with only the monotone count prunes, taking admissible pairs
    from the cycle-scan oracle."""
    target = canonical_form(h)
    if canonical_form(g) == target:
        return True
    seen = {canonical_form(g)}
    frontier = [g]
    while frontier:
        nxt = []
        for state in frontier:
            children: list[Graph] = []
            for v in state.vertices:
                children.append(delete_vertex(state, v))
            for u, v in sorted(state.edges):
                children.append(delete_edge(state, u, v))
            for u, v in sorted(brute_admissible_pairs(state)):
                children.append(contract_set(state, {u, v}))
            for child in children:
                if (
                    child.vertex_count < h.vertex_count
                    or child.edge_count < h.edge_count
                ):
                    continue
                cf = canonical_form(child)
                if cf in seen:
                    continue
                if cf == target:
                    return True
                seen.add(cf)
                nxt.append(child)
        frontier = nxt
    return False


def minor_by_operations(h: Graph, g: Graph) -> bool:
    """Classical minor decision straight from its operational definition:
    breadth-first search over vertex deletions, edge deletions, and
    single-edge contractions, deduplicated up to isomorphism."""
    target = canonical_form(h)
    seen = {canonical_form(g)}
    frontier = [g]
    if canonical_form(g) == target:
        return True
    while frontier:
        nxt = []
        for state in frontier:
            children: list[Graph] = []
            for v in state.vertices:
                children.append(delete_vertex(state, v))
            for u, v in sorted(state.edges):
                children.append(delete_edge(state, u, v))
                children.append(contract_set(state, {u, v}))
            for child in children:
                if (
                    child.vertex_count < h.vertex_count
                    or child.edge_count < h.edge_count
                ):
                    continue
                cf = canonical_form(child)
                if cf in seen:
                    continue
                if cf == target:
                    return True
                seen.add(cf)
                nxt.append(child)
        frontier = nxt
    return False
