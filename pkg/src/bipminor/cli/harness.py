"""Verification harness: every headline fact about the three relations,
executed as timed pass/fail claims grouped into suites.

Suites: bull (cycle-to-bull contractions, bulls are no cycle's minor),
dog (minor but not bipartite minor), antichain (incomparable dogs, the
H-shaped forest family), forest (bipartite minor reduces to subgraph),
preservation (closures of bipartite graphs stay bipartite), blocks
(2-connected closure members live in a block's closure; closure members
of cycles and one-eared dogs), and all.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from heapq import heapify, heappop, heappush
from itertools import combinations, product
from time import perf_counter
from typing import Callable

from .. import families
from ..canonical import CanonicalForm, are_isomorphic, canonical_form
from ..graph_core import Graph, GraphError, build, contract_set, is_bipartite
from ..relations import (
    admissible_contract,
    bipartite_minor_closure,
    bipartite_minor_trace,
    compare_family,
    is_bipartite_minor,
    is_minor,
    minor_model,
    validate_minor_model,
)
from ..structure import blocks, is_connected, is_k_connected, is_subgraph

SUITE_NAMES = ("bull", "dog", "antichain", "forest", "preservation", "blocks", "all")

BLOCK_RESTRICTION_SEED = 6174
BLOCK_RESTRICTION_SAMPLES = 200


@dataclass
class ClaimResult:
    claim_id: str
    params: str
    expected: str
    computed: str
    passed: bool
    seconds: float
    mode: str | None = None
    detail: str = ""


@dataclass
class VerificationReport:
    suite: str
    claims: tuple[ClaimResult, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.claims)

    def render(self) -> str:
        """Per-claim pass/fail lines; deterministic (no timings)."""
        lines = []
        for c in self.claims:
            status = "PASS" if c.passed else "FAIL"
            mode = f"  [mode: {c.mode}]" if c.mode else ""
            lines.append(f"[{status}] {c.claim_id}  {c.params}{mode}")
            if c.detail:
                lines.append(f"       {c.detail}")
            if not c.passed:
                lines.append(f"       expected: {c.expected}")
                lines.append(f"       computed: {c.computed}")
        passed = sum(c.passed for c in self.claims)
        lines.append(f"suite {self.suite}: {passed}/{len(self.claims)} claims passed")
        return "\n".join(lines) + "\n"

    def render_timings(self) -> str:
        lines = [f"{c.seconds:9.3f}s  {c.claim_id}" for c in self.claims]
        lines.append(f"{sum(c.seconds for c in self.claims):9.3f}s  total")
        return "\n".join(lines) + "\n"


def _run(
    claim_id: str,
    params: str,
    expected: str,
    fn: Callable[[], "str | tuple[str, str]"],
    mode: str | None = None,
) -> ClaimResult:
    start = perf_counter()
    try:
        computed = fn()
        detail = ""
        if isinstance(computed, tuple):
            computed, detail = computed
    except GraphError as exc:
        computed, detail = f"error: {exc}", ""
    seconds = perf_counter() - start
    return ClaimResult(
        claim_id, params, expected, computed, computed == expected, seconds, mode, detail
    )


# ---------------------------------------------------------------------------
# graph enumeration used by the forest / preservation / blocks suites


def _tree_edges_from_pruefer(seq: tuple[int, ...], n: int) -> list[tuple[int, int]]:
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapify(leaves)
    edges = []
    for x in seq:
        leaf = heappop(leaves)
        edges.append((min(leaf, x), max(leaf, x)))
        degree[x] -= 1
        if degree[x] == 1:
            heappush(leaves, x)
    a, b = heappop(leaves), heappop(leaves)
    edges.append((min(a, b), max(a, b)))
    return edges


def enumerate_trees(max_vertices: int) -> list[Graph]:
    """All trees with 1..max_vertices vertices, one per isomorphism class."""
    out: dict[CanonicalForm, Graph] = {}

    def keep(g: Graph) -> None:
        out.setdefault(canonical_form(g), g)

    keep(build(1, []))
    if max_vertices >= 2:
        keep(build(2, [(0, 1)]))
    for n in range(3, max_vertices + 1):
        for seq in product(range(n), repeat=n - 2):
            keep(build(n, _tree_edges_from_pruefer(seq, n)))
    return [out[cf] for cf in sorted(out)]


def enumerate_connected_bipartite(max_vertices: int) -> list[Graph]:
    """All connected bipartite graphs with 1..max_vertices vertices, one
    per isomorphism class, built as spanning subgraphs of complete
    bipartite graphs."""
    out: dict[CanonicalForm, Graph] = {}
    out[canonical_form(build(1, []))] = build(1, [])
    for n in range(2, max_vertices + 1):
        for a in range(1, n // 2 + 1):
            b = n - a
            cross = [(i, a + j) for i in range(a) for j in range(b)]
            for r in range(n - 1, len(cross) + 1):
                for chosen in combinations(cross, r):
                    g = build(n, chosen)
                    if is_connected(g):
                        out.setdefault(canonical_form(g), g)
    return [out[cf] for cf in sorted(out)]


def random_connected_graphs(
    count: int, max_vertices: int, seed: int
) -> list[Graph]:
    """Seeded sample of small connected graphs: a random tree plus up to
    three extra edges."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(3, max_vertices)
        seq = tuple(rng.randrange(n) for _ in range(n - 2))
        edges = set(_tree_edges_from_pruefer(seq, n))
        non_edges = [
            (i, j) for i in range(n) for j in range(i + 1, n) if (i, j) not in edges
        ]
        rng.shuffle(non_edges)
        edges.update(non_edges[: rng.randint(0, 3)])
        out.append(build(n, edges))
    return out


def _is_cycle_graph(g: Graph) -> bool:
    return (
        g.vertex_count >= 3
        and is_connected(g)
        and all(g.degree(v) == 2 for v in g.vertices)
    )


def _is_one_eared_dog(g: Graph) -> bool:
    n = g.vertex_count
    for snout in range(3, n + 1):
        ear = n - snout + 2
        if ear >= 3 and are_isomorphic(g, families.dog(snout, [ear])):
            return True
    return False


_K2_FORM = None


def _k2_form() -> CanonicalForm:
    global _K2_FORM
    if _K2_FORM is None:
        _K2_FORM = canonical_form(build(2, [(0, 1)]))
    return _K2_FORM


# ---------------------------------------------------------------------------
# bull suite

BULL_CASES = [
    (snout, horn)
    for snout in (3, 4, 5, 6)
    for horn in (1, 2)
    if snout + 2 * horn <= 10
]


def _claim_fig3() -> str:
    got = contract_set(families.cycle(6), {0, 2})
    if not are_isomorphic(got, families.bull(4, [1])):
        return "contraction result not isomorphic to B(4,1)"
    return "isomorphic to B(4,1)"


def _claim_fig4() -> str:
    first = admissible_contract(families.cycle(8), 0, 2)
    if not are_isomorphic(first, families.bull(6, [1])):
        return "first contraction does not give B(6,1)"
    tip = next(v for v in first.vertices if first.degree(v) == 1)
    hub = next(iter(first.adjacency[tip]))
    u, w = sorted(x for x in first.adjacency[hub] if x != tip)
    second = admissible_contract(first, u, w)
    if not are_isomorphic(second, families.bull(4, [2])):
        return "second contraction does not give B(4,2)"
    return "C_8 -> B(6,1) -> B(4,2)"


def _claim_bull_bipminor(snout: int, horn: int) -> Callable[[], str]:
    def body() -> str:
        host = families.cycle(snout + 2 * horn)
        target = families.bull(snout, [horn])
        trace = bipartite_minor_trace(target, host)
        if trace is None:
            return "no witness found"
        if len(trace) != horn or trace.contraction_count() != horn:
            return f"witness is not {horn} contractions: {trace.steps}"
        if not are_isomorphic(trace.replay(host), target):
            return "witness replay does not reach the bull"
        return f"holds with {horn} admissible contractions"

    return body


def _claim_bull_nonminor(snout: int, horn: int) -> Callable[[], str]:
    def body() -> str:
        target = families.bull(snout, [horn])
        hits = [p for p in range(3, 13) if is_minor(target, families.cycle(p))]
        if hits:
            return f"minor of C_p for p in {hits}"
        return "minor of no cycle C_p, p in [3, 12]"

    return body


def _suite_bull() -> list[ClaimResult]:
    claims = [
        _run(
            "bull.fig3",
            "contract C_6 at a distance-2 pair",
            "isomorphic to B(4,1)",
            _claim_fig3,
        ),
        _run(
            "bull.fig4",
            "two admissible contractions from C_8",
            "C_8 -> B(6,1) -> B(4,2)",
            _claim_fig4,
        ),
    ]
    for snout, horn in BULL_CASES:
        claims.append(
            _run(
                f"bull.bipminor.B({snout},{horn})",
                f"B({snout},{horn}) <=B C_{snout + 2 * horn}",
                f"holds with {horn} admissible contractions",
                _claim_bull_bipminor(snout, horn),
            )
        )
    for snout, horn in BULL_CASES:
        claims.append(
            _run(
                f"bull.nonminor.B({snout},{horn})",
                f"B({snout},{horn}) <=M C_p for no p",
                "minor of no cycle C_p, p in [3, 12]",
                _claim_bull_nonminor(snout, horn),
            )
        )
    return claims


# ---------------------------------------------------------------------------
# dog suite

DOG_CASES = [
    (snout, stretch, ears)
    for (snout, stretch) in ((5, 1), (5, 2), (6, 1), (6, 2))
    for ears in ((3, 3), (4, 4))
]


def _claim_dog_pair(snout: int, stretch: int, ears: tuple[int, int]) -> Callable[[], str]:
    def body() -> str:
        small = families.dog(snout, list(ears))
        large = families.dog(snout + stretch, list(ears))
        model = minor_model(small, large)
        if model is None:
            return "not even a minor"
        validate_minor_model(model, small, large)
        if is_bipartite_minor(small, large):
            return "unexpectedly a bipartite minor"
        return "minor but not bipartite minor"

    return body


def _suite_dog() -> list[ClaimResult]:
    return [
        _run(
            f"dog.pair.D({snout},{ears[0]},{ears[1]})<D({snout + stretch},...)",
            f"D({snout},{ears[0]},{ears[1]}) vs D({snout + stretch},{ears[0]},{ears[1]})",
            "minor but not bipartite minor",
            _claim_dog_pair(snout, stretch, ears),
        )
        for snout, stretch, ears in DOG_CASES
    ]


# ---------------------------------------------------------------------------
# antichain suite

ANTICHAIN_DOG_SNOUTS = (4, 6, 8)
H_FOREST_LENGTHS = (2, 3, 4, 5)


def _claim_dog_antichain() -> str:
    family = [families.dog(k, [4, 4]) for k in ANTICHAIN_DOG_SNOUTS]
    cm = compare_family(family, "bipartite_minor")
    if not all(cm.matrix[i][i] for i in range(len(family))):
        return "relation is not reflexive on the family"
    bad = [
        (i, j)
        for i in range(len(family))
        for j in range(len(family))
        if i != j and cm.matrix[i][j]
    ]
    if bad:
        return f"comparable pairs: {bad}"
    return "pairwise incomparable"


def _claim_dog_antichain_wellformed() -> str:
    for k in ANTICHAIN_DOG_SNOUTS:
        d = families.dog(k, [4, 4])
        if is_bipartite(d) is None:
            return f"D({k},4,4) is not bipartite"
        for mode in ("paper", "standard"):
            if not is_k_connected(d, 2, mode):
                return f"D({k},4,4) is not 2-connected ({mode} mode)"
    return "all bipartite and 2-connected in both modes"


def _claim_h_forest_subgraph() -> str:
    family = [families.h_tree(length) for length in H_FOREST_LENGTHS]
    cm = compare_family(family, "subgraph")
    return "pairwise incomparable" if cm.is_antichain else "comparable pair found"


def _claim_h_forest_minor_chain() -> str:
    family = [families.h_tree(length) for length in H_FOREST_LENGTHS]
    cm = compare_family(family, "minor")
    n = len(family)
    if all(cm.matrix[i][j] == (i <= j) for i in range(n) for j in range(n)):
        return "chain increasing with connector length"
    return f"unexpected matrix: {cm.matrix}"


def _suite_antichain() -> list[ClaimResult]:
    snouts = ",".join(str(k) for k in ANTICHAIN_DOG_SNOUTS)
    lengths = ",".join(str(k) for k in H_FOREST_LENGTHS)
    return [
        _run(
            "antichain.dogs.matrix",
            f"D(k,4,4) for k in {{{snouts}}} under bipartite_minor",
            "pairwise incomparable",
            _claim_dog_antichain,
        ),
        _run(
            "antichain.dogs.wellformed",
            f"D(k,4,4) for k in {{{snouts}}}",
            "all bipartite and 2-connected in both modes",
            _claim_dog_antichain_wellformed,
            mode="paper+standard",
        ),
        _run(
            "antichain.hforest.subgraph",
            f"H-trees with connector in {{{lengths}}} under subgraph",
            "pairwise incomparable",
            _claim_h_forest_subgraph,
        ),
        _run(
            "antichain.hforest.minor",
            f"H-trees with connector in {{{lengths}}} under minor",
            "chain increasing with connector length",
            _claim_h_forest_minor_chain,
        ),
    ]


# ---------------------------------------------------------------------------
# forest suite


def _claim_forest_reduction() -> tuple[str, str]:
    trees = enumerate_trees(7)
    mismatches = []
    positives = 0
    for t1 in trees:
        for t2 in trees:
            trace = bipartite_minor_trace(t1, t2)
            if (trace is not None) != is_subgraph(t1, t2):
                mismatches.append((t1, t2))
            elif trace is not None:
                positives += 1
                if not are_isomorphic(trace.replay(t2), t1):
                    mismatches.append((t1, t2))
    pairs = len(trees) ** 2
    if mismatches:
        return f"{len(mismatches)} mismatches", ""
    return (
        f"0 mismatches over {pairs} ordered pairs",
        f"{len(trees)} trees, {positives} positive verdicts replayed",
    )


def _suite_forest() -> list[ClaimResult]:
    return [
        _run(
            "forest.reduction",
            "bipartite_minor == subgraph on all trees with <= 7 vertices",
            "0 mismatches over 625 ordered pairs",
            _claim_forest_reduction,
        )
    ]


# ---------------------------------------------------------------------------
# preservation suite


def _claim_preservation() -> tuple[str, str]:
    hosts = enumerate_connected_bipartite(7)
    violations = 0
    members = 0
    for g in hosts:
        for cf in bipartite_minor_closure(g):
            members += 1
            if is_bipartite(cf.to_graph()) is None:
                violations += 1
    return (
        f"{violations} violations over {len(hosts)} closures",
        f"{members} closure members checked",
    )


def _suite_preservation() -> list[ClaimResult]:
    return [
        _run(
            "preservation.closures",
            "closures of all connected bipartite graphs with <= 7 vertices",
            "0 violations over 72 closures",
            _claim_preservation,
        )
    ]


# ---------------------------------------------------------------------------
# blocks suite


def _claim_block_restriction() -> tuple[str, str]:
    hosts = random_connected_graphs(
        BLOCK_RESTRICTION_SAMPLES, 9, BLOCK_RESTRICTION_SEED
    )
    violations = 0
    members = 0
    for g in hosts:
        closure = bipartite_minor_closure(g)
        reachable_in_blocks: set[CanonicalForm] = set()
        for block in blocks(g).blocks:
            reachable_in_blocks |= bipartite_minor_closure(block.to_graph())
        for cf in closure:
            if is_k_connected(cf.to_graph(), 2, "standard"):
                members += 1
                if cf not in reachable_in_blocks:
                    violations += 1
    return (
        f"{violations} violations over {len(hosts)} random graphs",
        f"{members} 2-connected closure members located in block closures",
    )


def _claim_corollary_cycle() -> tuple[str, str]:
    closure = bipartite_minor_closure(families.cycle(8))
    std = {cf for cf in closure if is_k_connected(cf.to_graph(), 2, "standard")}
    paper = {cf for cf in closure if is_k_connected(cf.to_graph(), 2, "paper")}
    wanted = {canonical_form(families.cycle(k)) for k in (4, 6, 8)}
    extras = paper - std
    if std != wanted:
        got = sorted((cf.vertex_count, cf.to_graph().edge_count) for cf in std)
        return f"unexpected standard-mode members: {got}", ""
    if extras != {_k2_form()}:
        return f"unexpected paper-mode extras: {sorted(extras)}", ""
    return (
        "standard members are C_4, C_6, C_8; paper-mode extra is K_2",
        f"closure size {len(closure)}",
    )


def _claim_corollary_one_eared_dog() -> tuple[str, str]:
    closure = bipartite_minor_closure(families.dog(6, [4]))
    std = {cf for cf in closure if is_k_connected(cf.to_graph(), 2, "standard")}
    paper = {cf for cf in closure if is_k_connected(cf.to_graph(), 2, "paper")}
    stray = [
        cf
        for cf in std
        if not (_is_cycle_graph(cf.to_graph()) or _is_one_eared_dog(cf.to_graph()))
    ]
    extras = paper - std
    if stray:
        got = sorted((cf.vertex_count, cf.to_graph().edge_count) for cf in stray)
        return f"members that are neither cycles nor one-eared dogs: {got}", ""
    if extras != {_k2_form()}:
        return f"unexpected paper-mode extras: {sorted(extras)}", ""
    return (
        "standard members are cycles or one-eared dogs; paper-mode extra is K_2",
        f"{len(std)} standard-mode members of {len(closure)} total",
    )


def _suite_blocks() -> list[ClaimResult]:
    return [
        _run(
            "blocks.restriction",
            f"{BLOCK_RESTRICTION_SAMPLES} random connected graphs, <= 9 vertices, "
            f"seed {BLOCK_RESTRICTION_SEED}",
            "0 violations over 200 random graphs",
            _claim_block_restriction,
            mode="standard",
        ),
        _run(
            "blocks.corollary.cycle",
            "2-connected members of closure(C_8)",
            "standard members are C_4, C_6, C_8; paper-mode extra is K_2",
            _claim_corollary_cycle,
            mode="standard+paper",
        ),
        _run(
            "blocks.corollary.one_eared_dog",
            "2-connected members of closure(D(6,4))",
            "standard members are cycles or one-eared dogs; paper-mode extra is K_2",
            _claim_corollary_one_eared_dog,
            mode="standard+paper",
        ),
    ]


# ---------------------------------------------------------------------------

_SUITES: dict[str, Callable[[], list[ClaimResult]]] = {
    "bull": _suite_bull,
    "dog": _suite_dog,
    "antichain": _suite_antichain,
    "forest": _suite_forest,
    "preservation": _suite_preservation,
    "blocks": _suite_blocks,
}


def verify_harness(suite: str) -> VerificationReport:
    """Run one suite (or "all") and return its per-claim report."""
    if suite == "all":
        claims: list[ClaimResult] = []
        for name in ("bull", "dog", "antichain", "forest", "preservation", "blocks"):
            claims.extend(_SUITES[name]())
        return VerificationReport("all", tuple(claims))
    if suite not in _SUITES:
        raise GraphError(f"unknown suite: {suite!r} (choose from {SUITE_NAMES})")
    return VerificationReport(suite, tuple(_SUITES[suite]()))
