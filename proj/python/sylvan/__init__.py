"""H-colourings of cubic graphs."""
import json

from ._sylvan import (
    Error,
    Graph,
    ParseError,
    PreconditionError,
    approx_s_coloring,
    atlas,
    atlas_labels,
    atlas_names,
    automorphism_count,
    canonical_code,
    check_h_coloring,
    chromatic_index,
    enumerate_cubic,
    find_h_coloring,
    is_isomorphic,
    near_3_edge_coloring,
    parse_graph6,
    parse_pgf,
    parse_sparse6,
    perfect_matching,
    s4_color,
    write_graph6,
    write_pgf,
    write_sparse6,
)
from ._sylvan import run_campaign as _run_campaign


def run_campaign(name, max_n=0, graph_class=None, jobs=1, budget=0, samples=1000):
    """Run a verification campaign; returns (verdict, summary dict, report line dicts)."""
    verdict, summary, lines = _run_campaign(name, max_n, graph_class, jobs, budget, samples)
    return verdict, json.loads(summary), [json.loads(line) for line in lines]


__all__ = [name for name in dir() if not name.startswith("_")]
