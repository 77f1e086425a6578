"""Exact decision procedures, witnesses, and a verification harness for
the bipartite-minor, minor, and subgraph relations on small graphs."""

from .canonical import CanonicalForm, are_isomorphic, canonical_form, permute
from .families import FamilySpec, bull, cycle, dog, h_tree, path
from .graph_core import (
    Bipartition,
    Graph,
    GraphError,
    SizeCapExceeded,
    build,
    contract_set,
    delete_edge,
    delete_vertex,
    is_bipartite,
)
from .relations import (
    AdmissibleContraction,
    AdmissiblePair,
    ComparisonMatrix,
    EdgeDeletion,
    MinorModel,
    OpTrace,
    VertexDeletion,
    admissible_contract,
    admissible_pairs,
    bipartite_minor_closure,
    bipartite_minor_trace,
    compare_family,
    is_bipartite_minor,
    is_minor,
    minor_model,
    validate_minor_model,
)
from .structure import (
    Block,
    BlockDecomposition,
    blocks,
    component_count,
    components,
    is_connected,
    is_induced_cycle,
    is_k_connected,
    is_nonseparating,
    is_subgraph,
    peripheral_cycles,
    subgraph_embedding,
)

__version__ = "0.1.0"

__all__ = [
    "AdmissibleContraction",
    "AdmissiblePair",
    "Bipartition",
    "Block",
    "BlockDecomposition",
    "CanonicalForm",
    "ComparisonMatrix",
    "EdgeDeletion",
    "FamilySpec",
    "Graph",
    "GraphError",
    "MinorModel",
    "OpTrace",
    "SizeCapExceeded",
    "VertexDeletion",
    "admissible_contract",
    "admissible_pairs",
    "are_isomorphic",
    "bipartite_minor_closure",
    "bipartite_minor_trace",
    "blocks",
    "build",
    "bull",
    "canonical_form",
    "compare_family",
    "component_count",
    "components",
    "contract_set",
    "cycle",
    "delete_edge",
    "delete_vertex",
    "dog",
    "h_tree",
    "is_bipartite",
    "is_bipartite_minor",
    "is_connected",
    "is_induced_cycle",
    "is_k_connected",
    "is_minor",
    "is_nonseparating",
    "is_subgraph",
    "minor_model",
    "path",
    "peripheral_cycles",
    "permute",
    "subgraph_embedding",
    "validate_minor_model",
]
