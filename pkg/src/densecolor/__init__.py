"""Exact density, chromatic-index and total-coloring toolkit for loopless
multigraphs.

The headline operation, :func:`totalize`, certifies chi''(G) = chi'(G) for
graphs with chi'(G) >= max(Delta(G)+2, |V(G)|+1) by embedding G into a
chi'-dense supergraph, edge-coloring it exactly, extending to a total
coloring, and restricting back — with every step re-verified.
"""

from .config import DEFAULT_CONFIG, RunConfig
from .coloring import (
    EdgeColoring,
    TotalColoring,
    boundary_colors,
    coloring_from_doc,
    coloring_to_doc,
    is_closed,
    is_elementary,
    is_proper_edge_coloring,
    is_proper_total_coloring,
    is_strongly_closed,
    missing_colors,
    missing_union,
    permute_colors,
    present_colors,
)
from .embed import EmbeddingReport, ExchangeMove, can_add_edge, embed_k_dense
from .errors import (
    BudgetExceededError,
    DensecolorError,
    GraphFormatError,
    GuaranteeViolationError,
    HypothesisNotMetError,
    InstanceTooLargeError,
)
from .generators import (
    complete,
    cycle,
    disjoint_union,
    fixture,
    fixture_names,
    gen_fat_cycle,
    gen_random_multigraph,
)
from .multigraph import Multigraph, parse, serialize
from .oracles import (
    ChromaticCertificate,
    DensityIdentityReport,
    DensityWitness,
    chromatic_index,
    density,
    find_k_edge_coloring,
    gs_verify,
    is_edge_critical,
    is_k_dense,
    maximal_k_dense_subgraphs,
    total_chromatic_number,
)
from .search import (
    CounterexampleCertificate,
    InstanceRecord,
    SearchOutcome,
    search_goldberg,
)
from .totalize import (
    CorollaryReport,
    PipelineRecord,
    TotalizeCertificate,
    corollary_applicable,
    corollary_inequality,
    extend_to_total,
    restrict_total,
    totalize,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "ChromaticCertificate",
    "CorollaryReport",
    "CounterexampleCertificate",
    "DEFAULT_CONFIG",
    "DensecolorError",
    "DensityIdentityReport",
    "DensityWitness",
    "EdgeColoring",
    "EmbeddingReport",
    "ExchangeMove",
    "GraphFormatError",
    "GuaranteeViolationError",
    "HypothesisNotMetError",
    "InstanceRecord",
    "InstanceTooLargeError",
    "Multigraph",
    "PipelineRecord",
    "RunConfig",
    "SearchOutcome",
    "TotalColoring",
    "TotalizeCertificate",
    "boundary_colors",
    "can_add_edge",
    "chromatic_index",
    "coloring_from_doc",
    "coloring_to_doc",
    "complete",
    "corollary_applicable",
    "corollary_inequality",
    "cycle",
    "density",
    "disjoint_union",
    "embed_k_dense",
    "extend_to_total",
    "find_k_edge_coloring",
    "fixture",
    "fixture_names",
    "gen_fat_cycle",
    "gen_random_multigraph",
    "gs_verify",
    "is_closed",
    "is_edge_critical",
    "is_elementary",
    "is_k_dense",
    "is_proper_edge_coloring",
    "is_proper_total_coloring",
    "is_strongly_closed",
    "maximal_k_dense_subgraphs",
    "missing_colors",
    "missing_union",
    "parse",
    "permute_colors",
    "present_colors",
    "restrict_total",
    "search_goldberg",
    "serialize",
    "total_chromatic_number",
    "totalize",
]
