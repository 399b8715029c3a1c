"""Exact zero forcing set counts for small graphs and mechanical checks of
the path-domination bounds."""

from .errors import ZeroForceError
from .forcing import (
    ForcingProfile,
    closure,
    forcing_profile,
    is_forcing,
    is_fort,
    path_profile_formula,
    zero_forcing_number,
)
from .graph_core import Graph, family, from_edges, parse_graph6, to_graph6
from .lemma_lab import LemmaReport, check_conjecture

__all__ = [
    "ForcingProfile",
    "Graph",
    "LemmaReport",
    "ZeroForceError",
    "check_conjecture",
    "closure",
    "family",
    "forcing_profile",
    "from_edges",
    "is_forcing",
    "is_fort",
    "parse_graph6",
    "path_profile_formula",
    "to_graph6",
    "zero_forcing_number",
]

__version__ = "0.1.0"
