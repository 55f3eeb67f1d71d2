"""Word-representability of simplified de Bruijn graphs."""

from ._wordrep import (
    BudgetExceeded,
    Graph,
    SizeLimitExceeded,
    TraceSyntaxError,
    UnknownCopyReference,
    chromatic_number,
    color_s_n_2,
    contains_induced,
    debruijn,
    extract_graph,
    find_induced_embedding,
    find_uniform_representant,
    is_semitransitive,
    normalize_trace,
    oracle,
    paper_trace_text,
    preprocess_latex,
    represents,
    simplified_debruijn,
    solve,
    verify_trace,
    wheel,
)

__all__ = [
    "BudgetExceeded",
    "Graph",
    "SizeLimitExceeded",
    "TraceSyntaxError",
    "UnknownCopyReference",
    "chromatic_number",
    "color_s_n_2",
    "contains_induced",
    "debruijn",
    "extract_graph",
    "find_induced_embedding",
    "find_uniform_representant",
    "is_semitransitive",
    "normalize_trace",
    "oracle",
    "paper_trace_text",
    "preprocess_latex",
    "represents",
    "simplified_debruijn",
    "solve",
    "verify_trace",
    "wheel",
]
