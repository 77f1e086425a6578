"""graph6 parsing/encoding, DOT export, and JSON witness documents.

graph6 packs the upper triangle of the adjacency matrix column by column
(x01, x02, x12, x03, ...) into 6-bit groups, each stored as one printable
byte (value + 63), after a single size byte (n + 63, n <= 62 here).

A witness document records one relation verdict plus the evidence: an
operation trace for bipartite minors (labels refer to the pre-step graph
under the compact relabeling convention), a branch-set map for minors, or
a vertex embedding for subgraphs.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from ..canonical import are_isomorphic
from ..graph_core import Edge, Graph, GraphError, normalize_edge
from ..relations import (
    AdmissibleContraction,
    EdgeDeletion,
    MinorModel,
    OpTrace,
    Step,
    VertexDeletion,
    validate_minor_model,
)

GRAPH6_MAX = 62
LABELING_CONVENTION = "compact-min-position"


def emit_graph6(g: Graph) -> str:
    """Canonical-length graph6 encoding of the labelled graph."""
    n = g.vertex_count
    if n > GRAPH6_MAX:
        raise GraphError(f"graph6 output supports at most {GRAPH6_MAX} vertices")
    chars = [chr(n + 63)]
    group = 0
    filled = 0
    for j in range(1, n):
        for i in range(j):
            group = (group << 1) | (1 if g.has_edge(i, j) else 0)
            filled += 1
            if filled == 6:
                chars.append(chr(group + 63))
                group = 0
                filled = 0
    if filled:
        group <<= 6 - filled
        chars.append(chr(group + 63))
    return "".join(chars)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 value; anything beyond surrounding whitespace is
    rejected."""
    s = text.strip()
    if not s:
        raise GraphError("empty graph6 string")
    head = ord(s[0])
    if head == 126:
        raise GraphError("graph6 input has more than 62 vertices (unsupported)")
    if not 63 <= head <= 126:
        raise GraphError(f"malformed graph6 header byte: {s[0]!r}")
    n = head - 63
    bits_needed = n * (n - 1) // 2
    body_len = (bits_needed + 5) // 6
    body = s[1:]
    if len(body) < body_len:
        raise GraphError("truncated graph6 bit section")
    if len(body) > body_len:
        raise GraphError(f"trailing garbage after graph6 value: {body[body_len:]!r}")

    bits: list[int] = []
    for ch in body:
        val = ord(ch) - 63
        if not 0 <= val <= 63:
            raise GraphError(f"graph6 character out of range: {ch!r}")
        bits.extend((val >> k) & 1 for k in range(5, -1, -1))
    if any(bits[bits_needed:]):
        raise GraphError("nonzero padding bits in graph6 value")

    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos]:
                edges.append((i, j))
            pos += 1
    return Graph(n, frozenset(edges))


def emit_dot(
    g: Graph,
    highlight_vertices: Iterable[int] = (),
    highlight_edges: Iterable[Edge] = (),
) -> str:
    """DOT text with one line per vertex and per edge, in index order."""
    hv = set(highlight_vertices)
    he = {normalize_edge(u, v) for u, v in highlight_edges}
    lines = ["graph {"]
    for v in g.vertices:
        mark = " [color=red, style=bold]" if v in hv else ""
        lines.append(f"  {v}{mark};")
    for u, v in sorted(g.edges):
        mark = " [color=red, style=bold]" if (u, v) in he else ""
        lines.append(f"  {u} -- {v}{mark};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# witness documents


def _step_to_json(step: Step) -> dict:
    if isinstance(step, VertexDeletion):
        return {"op": "delete_vertex", "v": step.v}
    if isinstance(step, EdgeDeletion):
        return {"op": "delete_edge", "u": step.u, "v": step.v}
    if isinstance(step, AdmissibleContraction):
        return {"op": "admissible_contract", "u": step.u, "v": step.v, "w": step.w}
    raise GraphError(f"unknown trace step: {step!r}")


def _step_from_json(obj: Mapping) -> Step:
    try:
        op = obj["op"]
        if op == "delete_vertex":
            return VertexDeletion(int(obj["v"]))
        if op == "delete_edge":
            return EdgeDeletion(int(obj["u"]), int(obj["v"]))
        if op == "admissible_contract":
            return AdmissibleContraction(int(obj["u"]), int(obj["v"]), int(obj["w"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphError(f"malformed witness step: {obj!r}") from exc
    raise GraphError(f"unknown witness op: {op!r}")


def witness_document(
    relation: str,
    holds: bool,
    source: Graph,
    target: Graph,
    evidence: OpTrace | MinorModel | Mapping[int, int] | None,
) -> dict:
    """Assemble the JSON-serializable witness for one verdict."""
    doc = {
        "relation": relation,
        "holds": holds,
        "source": emit_graph6(source),
        "target": emit_graph6(target),
        "labeling_convention": LABELING_CONVENTION,
        "steps": None,
    }
    if not holds:
        return doc
    if relation == "bipartite_minor":
        assert isinstance(evidence, OpTrace)
        doc["steps"] = [_step_to_json(s) for s in evidence.steps]
    elif relation == "minor":
        assert isinstance(evidence, MinorModel)
        doc["steps"] = {
            str(i): sorted(bs) for i, bs in enumerate(evidence.branch_sets)
        }
    elif relation == "subgraph":
        assert isinstance(evidence, Mapping)
        doc["steps"] = {str(k): [v] for k, v in sorted(evidence.items())}
    else:
        raise GraphError(f"unknown relation: {relation!r}")
    return doc


def validate_witness(doc: Mapping) -> bool:
    """Re-check a witness document from scratch: parse both graphs, replay
    or validate the evidence, and confirm the claimed verdict.  Returns
    True or raises GraphError."""
    try:
        relation = doc["relation"]
        holds = doc["holds"]
        source = parse_graph6(doc["source"])
        target = parse_graph6(doc["target"])
        convention = doc["labeling_convention"]
        steps = doc["steps"]
    except (KeyError, TypeError) as exc:
        raise GraphError(f"malformed witness document: missing field ({exc})") from exc
    if convention != LABELING_CONVENTION:
        raise GraphError(f"unknown labeling convention: {convention!r}")

    if not holds:
        if steps is not None:
            raise GraphError("negative witness must not carry steps")
        return True

    if relation == "bipartite_minor":
        if not isinstance(steps, list):
            raise GraphError("bipartite_minor witness steps must be a list")
        trace = OpTrace(tuple(_step_from_json(s) for s in steps))
        final = trace.replay(source)
        if not are_isomorphic(final, target):
            raise GraphError("trace replay does not reach the target graph")
        return True

    if relation == "minor":
        if not isinstance(steps, Mapping):
            raise GraphError("minor witness steps must map target vertices to lists")
        sets = []
        for i in range(target.vertex_count):
            members = steps.get(str(i))
            if members is None:
                raise GraphError(f"branch set missing for target vertex {i}")
            sets.append(frozenset(int(x) for x in members))
        validate_minor_model(MinorModel(tuple(sets)), target, source)
        return True

    if relation == "subgraph":
        if not isinstance(steps, Mapping):
            raise GraphError("subgraph witness steps must map vertices to vertices")
        image = {}
        for i in range(target.vertex_count):
            members = steps.get(str(i))
            if not members or len(members) != 1:
                raise GraphError(f"embedding image missing for target vertex {i}")
            image[i] = int(members[0])
        if len(set(image.values())) != len(image):
            raise GraphError("embedding is not injective")
        for v in image.values():
            source.check_vertex(v)
        for a, b in target.edges:
            if not source.has_edge(image[a], image[b]):
                raise GraphError(f"target edge ({a}, {b}) not mapped onto an edge")
        return True

    raise GraphError(f"unknown relation: {relation!r}")
