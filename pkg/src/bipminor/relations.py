"""The three containment relations and their witnesses.

``is_bipartite_minor`` decides reachability from a host graph via vertex
deletion, edge deletion, and admissible contraction (contracting a pair
with a common neighbor on an induced non-separating cycle).  The search is
a breadth-first walk over the operation graph, memoized on canonical
forms; every operation strictly shrinks |V|+|E| and never increases the
cycle rank |E|-|V|+(components), so states below the target on any of
those measures are pruned.  Frontier states are expanded in canonical-form
order, which makes returned witnesses reproducible.

``is_minor`` uses the equivalent branch-set formulation: disjoint
connected sets in the host, one per target vertex, with a host edge behind
every target edge.

``bipartite_minor_closure`` is the same walk with no target: everything
reachable, up to isomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence, Union

from .canonical import CanonicalForm, are_isomorphic, canonical_form
from .graph_core import (
    Graph,
    GraphError,
    check_size_cap,
    contract_set,
    delete_edge,
    delete_vertex,
)
from .structure import (
    Cycle,
    component_count,
    is_subgraph,
    peripheral_cycles,
)

RELATION_NAMES = ("bipartite_minor", "minor", "subgraph")


# ---------------------------------------------------------------------------
# admissible contractions


@dataclass(frozen=True)
class AdmissiblePair:
    """A contractible pair with one admissibility witness: a common
    neighbor ``w`` such that u,w,v lie consecutively on the given induced
    non-separating cycle."""

    u: int
    v: int
    w: int
    cycle: Cycle


def admissible_pairs(g: Graph, cap: int | None = None) -> tuple[AdmissiblePair, ...]:
    """All unordered pairs admitting an admissible contraction, one witness
    each (smallest w, then smallest cycle), sorted by pair."""
    check_size_cap(g, cap)
    witnesses: dict[tuple[int, int], tuple[int, tuple[int, Cycle], Cycle]] = {}
    for cyc in peripheral_cycles(g, cap):
        m = len(cyc)
        for i in range(m):
            u, w, v = cyc[i], cyc[(i + 1) % m], cyc[(i + 2) % m]
            pair = (u, v) if u < v else (v, u)
            key = (w, (m, cyc))
            prev = witnesses.get(pair)
            if prev is None or key < prev[:2]:
                witnesses[pair] = (w, (m, cyc), cyc)
    return tuple(
        AdmissiblePair(u, v, witnesses[(u, v)][0], witnesses[(u, v)][2])
        for u, v in sorted(witnesses)
    )


def admissible_contract(g: Graph, u: int, v: int, cap: int | None = None) -> Graph:
    """Contract the pair {u, v}, which must be admissible."""
    g.check_vertex(u)
    g.check_vertex(v)
    if u == v:
        raise GraphError("cannot contract a vertex with itself")
    pair = (u, v) if u < v else (v, u)
    if not any(p.u == pair[0] and p.v == pair[1] for p in admissible_pairs(g, cap)):
        if not g.adjacency[u] & g.adjacency[v]:
            raise GraphError(f"pair ({u}, {v}) has no common neighbor")
        raise GraphError(
            f"no induced non-separating cycle passes through ({u}, w, {v}) "
            "for any common neighbor w"
        )
    return contract_set(g, {u, v})


# ---------------------------------------------------------------------------
# operation traces


@dataclass(frozen=True)
class VertexDeletion:
    v: int


@dataclass(frozen=True)
class EdgeDeletion:
    u: int
    v: int


@dataclass(frozen=True)
class AdmissibleContraction:
    u: int
    v: int
    w: int


Step = Union[VertexDeletion, EdgeDeletion, AdmissibleContraction]


@dataclass(frozen=True)
class OpTrace:
    """A replayable operation sequence; each step's labels refer to the
    graph state immediately before that step."""

    steps: tuple[Step, ...]

    def __len__(self) -> int:
        return len(self.steps)

    def replay(self, source: Graph) -> Graph:
        """Apply the steps to ``source``, re-checking admissibility of every
        contraction; raises if any step is illegal."""
        g = source
        for step in self.steps:
            if isinstance(step, VertexDeletion):
                g = delete_vertex(g, step.v)
            elif isinstance(step, EdgeDeletion):
                g = delete_edge(g, step.u, step.v)
            elif isinstance(step, AdmissibleContraction):
                g = admissible_contract(g, step.u, step.v, cap=g.vertex_count)
            else:
                raise GraphError(f"unknown trace step: {step!r}")
        return g

    def contraction_count(self) -> int:
        return sum(isinstance(s, AdmissibleContraction) for s in self.steps)


# ---------------------------------------------------------------------------
# bipartite-minor decision search


def _cycle_rank(g: Graph) -> int:
    return g.edge_count - g.vertex_count + component_count(g)


def _moves(g: Graph, cap: int | None) -> Iterator[tuple[Step, Graph]]:
    """All single-operation successors, contractions first, in a fixed
    order."""
    for p in admissible_pairs(g, cap):
        yield AdmissibleContraction(p.u, p.v, p.w), contract_set(g, {p.u, p.v})
    for v in g.vertices:
        yield VertexDeletion(v), delete_vertex(g, v)
    for u, v in sorted(g.edges):
        yield EdgeDeletion(u, v), delete_edge(g, u, v)


def bipartite_minor_trace(h: Graph, g: Graph, cap: int | None = None) -> OpTrace | None:
    """A replayable witness that ``h`` is a bipartite minor of ``g``, or
    ``None``.  The search is exhaustive within the cap, so ``None`` is a
    definite negative."""
    check_size_cap(g, cap)
    if h.vertex_count > g.vertex_count or h.edge_count > g.edge_count:
        return None

    target = canonical_form(h)
    rank_floor = _cycle_rank(h)
    start = canonical_form(g)
    if start == target:
        return OpTrace(())

    # canonical form -> (labelled graph, parent form, step from the parent)
    seen: dict[CanonicalForm, tuple[Graph, CanonicalForm | None, Step | None]] = {
        start: (g, None, None)
    }

    def trace_back(cf: CanonicalForm) -> OpTrace:
        steps: list[Step] = []
        while True:
            _, parent, step = seen[cf]
            if parent is None:
                break
            steps.append(step)
            cf = parent
        return OpTrace(tuple(reversed(steps)))

    frontier = [start]
    while frontier:
        frontier.sort()
        next_frontier: list[CanonicalForm] = []
        for cf in frontier:
            state = seen[cf][0]
            for step, child in _moves(state, cap):
                if (
                    child.vertex_count < h.vertex_count
                    or child.edge_count < h.edge_count
                    or _cycle_rank(child) < rank_floor
                ):
                    continue
                ccf = canonical_form(child)
                if ccf in seen:
                    continue
                seen[ccf] = (child, cf, step)
                if ccf == target:
                    return trace_back(ccf)
                next_frontier.append(ccf)
        frontier = next_frontier
    return None


def is_bipartite_minor(h: Graph, g: Graph, cap: int | None = None) -> bool:
    return bipartite_minor_trace(h, g, cap) is not None


# ---------------------------------------------------------------------------
# downward closure

_closure_cache: dict[CanonicalForm, frozenset[CanonicalForm]] = {}


def bipartite_minor_closure(g: Graph, cap: int | None = None) -> frozenset[CanonicalForm]:
    """Every graph (up to isomorphism, including ``g`` itself) reachable by
    deletions and admissible contractions."""
    check_size_cap(g, cap)
    start = canonical_form(g)
    cached = _closure_cache.get(start)
    if cached is not None:
        return cached

    seen: dict[CanonicalForm, Graph] = {start: g}
    frontier = [start]
    while frontier:
        next_frontier: list[CanonicalForm] = []
        for cf in frontier:
            for _, child in _moves(seen[cf], cap):
                ccf = canonical_form(child)
                if ccf not in seen:
                    seen[ccf] = child
                    next_frontier.append(ccf)
        frontier = next_frontier
    result = frozenset(seen)
    _closure_cache[start] = result
    return result


# ---------------------------------------------------------------------------
# classical minor via branch sets


@dataclass(frozen=True)
class MinorModel:
    """Branch sets indexed by target vertex: disjoint, each inducing a
    connected subgraph of the source, together covering every target edge."""

    branch_sets: tuple[frozenset[int], ...]


def validate_minor_model(model: MinorModel, h: Graph, g: Graph) -> None:
    """Raise GraphError unless the model proves h is a minor of g."""
    sets = model.branch_sets
    if len(sets) != h.vertex_count:
        raise GraphError("model must have one branch set per target vertex")
    taken: set[int] = set()
    for i, bs in enumerate(sets):
        if not bs:
            raise GraphError(f"branch set {i} is empty")
        for v in bs:
            g.check_vertex(v)
            if v in taken:
                raise GraphError(f"branch sets overlap at source vertex {v}")
            taken.add(v)
        if not _mask_connected(g, bs):
            raise GraphError(f"branch set {i} is not connected in the source")
    for a, b in h.edges:
        if not _sets_adjacent(g, sets[a], sets[b]):
            raise GraphError(f"target edge ({a}, {b}) has no source edge behind it")


def _mask_connected(g: Graph, vs: frozenset[int]) -> bool:
    first = min(vs)
    seen = {first}
    stack = [first]
    while stack:
        v = stack.pop()
        for w in g.adjacency[v]:
            if w in vs and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(vs)


def _sets_adjacent(g: Graph, a: frozenset[int], b: frozenset[int]) -> bool:
    return any(g.adjacency[v] & b for v in a)


def _connected_subsets(g: Graph) -> list[tuple[int, int]]:
    """All vertex subsets inducing a connected subgraph, as (mask,
    neighborhood-mask) pairs, each subset enumerated exactly once."""
    n = g.vertex_count
    masks = g.neighbor_masks
    out: list[tuple[int, int]] = []

    def nbr_of(mask: int) -> int:
        acc = 0
        m = mask
        while m:
            v = (m & -m).bit_length() - 1
            acc |= masks[v]
            m &= m - 1
        return acc & ~mask

    def grow(cur: int, banned: int) -> None:
        out.append((cur, nbr_of(cur)))
        ext = nbr_of(cur) & ~banned
        taken = banned
        while ext:
            u = (ext & -ext).bit_length() - 1
            ext &= ext - 1
            grow(cur | (1 << u), taken)
            taken |= 1 << u
    for v in range(n):
        # Subsets whose minimum vertex is v: never grow below v.
        below = (1 << v) - 1
        grow(1 << v, below)
    out.sort(key=lambda t: (bin(t[0]).count("1"), t[0]))
    return out


def minor_model(h: Graph, g: Graph, cap: int | None = None) -> MinorModel | None:
    """A branch-set witness that ``h`` is a minor of ``g``, or ``None``."""
    check_size_cap(h, cap)
    check_size_cap(g, cap)
    if h.vertex_count > g.vertex_count or h.edge_count > g.edge_count:
        return None
    if h.vertex_count == 0:
        return MinorModel(())

    subsets = _connected_subsets(g)

    # Assign high-degree target vertices first, then whatever is most
    # anchored to already-assigned neighbors.
    order: list[int] = []
    placed: set[int] = set()
    while len(order) < h.vertex_count:
        pick = max(
            (v for v in h.vertices if v not in placed),
            key=lambda v: (
                sum(w in placed for w in h.adjacency[v]),
                h.degree(v),
                -v,
            ),
        )
        order.append(pick)
        placed.add(pick)

    chosen_mask: dict[int, int] = {}
    chosen_nbr: dict[int, int] = {}

    def assign(i: int, used: int, budget: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        anchors = [w for w in h.adjacency[v] if w in chosen_mask]
        remaining_after = len(order) - i - 1
        for mask, nbr in subsets:
            size = bin(mask).count("1")
            if size > budget - remaining_after:
                continue
            if mask & used:
                continue
            if any(not chosen_nbr[w] & mask for w in anchors):
                continue
            chosen_mask[v] = mask
            chosen_nbr[v] = nbr
            if assign(i + 1, used | mask, budget - size):
                return True
            del chosen_mask[v]
            del chosen_nbr[v]
        return False

    if not assign(0, 0, g.vertex_count):
        return None
    sets = []
    for v in h.vertices:
        mask = chosen_mask[v]
        sets.append(frozenset(i for i in range(g.vertex_count) if (mask >> i) & 1))
    model = MinorModel(tuple(sets))
    validate_minor_model(model, h, g)
    return model


def is_minor(h: Graph, g: Graph, cap: int | None = None) -> bool:
    return minor_model(h, g, cap) is not None


# ---------------------------------------------------------------------------
# comparability matrices


@dataclass(frozen=True)
class ComparisonMatrix:
    """Pairwise comparisons: ``matrix[i][j]`` holds iff graph i is below
    graph j under the relation."""

    relation: str
    matrix: tuple[tuple[bool, ...], ...]

    @property
    def is_antichain(self) -> bool:
        return all(
            not cell
            for i, row in enumerate(self.matrix)
            for j, cell in enumerate(row)
            if i != j
        )

    @property
    def is_chain(self) -> bool:
        n = len(self.matrix)
        return all(
            self.matrix[i][j] or self.matrix[j][i]
            for i in range(n)
            for j in range(n)
        )


def compare_family(
    graphs: Sequence[Graph], relation: str, cap: int | None = None
) -> ComparisonMatrix:
    """Compare every ordered pair of the family under the named relation."""
    if relation == "bipartite_minor":
        decide = is_bipartite_minor
    elif relation == "minor":
        decide = is_minor
    elif relation == "subgraph":
        decide = is_subgraph
    else:
        raise GraphError(f"unknown relation: {relation!r}")
    matrix = tuple(
        tuple(decide(a, b, cap) for b in graphs) for a in graphs
    )
    return ComparisonMatrix(relation, matrix)
