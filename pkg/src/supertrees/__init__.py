"""Spectral extremal problems for supertrees."""

from __future__ import annotations

__version__ = "0.1.0"

from .errors import HypergraphError, NoConvergence
from .hypergraph import (
    Hypergraph,
    degree_profile,
    from_edge_list,
    incidence_tree,
    is_connected,
    is_supertree,
    load_hgt,
    power_k,
    read_hgt,
    save_hgt,
    write_hgt,
)
from .spectral import adjacency_matrix, collatz_wielandt, spectral_radius
from .generators import double_hyperstar, graft, GraftSpec, branch_split, edge_shift, hyperpath, superstar
from .enumeration import are_isomorphic, canonical_code, canonical_form, enumerate_supertrees

__all__ = [
    "HypergraphError", "NoConvergence", "Hypergraph", "degree_profile", "from_edge_list",
    "incidence_tree", "is_connected", "is_supertree", "load_hgt", "power_k", "read_hgt",
    "save_hgt", "write_hgt", "adjacency_matrix", "collatz_wielandt", "spectral_radius",
    "double_hyperstar", "graft", "GraftSpec", "branch_split", "edge_shift", "hyperpath",
    "superstar", "are_isomorphic", "canonical_code", "canonical_form", "enumerate_supertrees",
]
