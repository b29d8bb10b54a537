"""Exact domination, total and semitotal domination numbers of trees, the two
constructive tree families characterizing equality cases, and exhaustive
verification sweeps."""

from .dp import (
    dp_almost_domination,
    dp_domination,
    dp_semitotal,
    dp_semitotal_forced,
    dp_total_domination,
)
from .enumeration import all_trees, count_trees
from .exact import DominationCertificate, Kind, oracle_minimum
from .families import (
    FamilyCensus,
    LabeledTree,
    find_labeling,
    generate_family_O,
    generate_family_T,
    is_extremal,
    is_gamma_equal,
)
from .graph_core import Tree, canonical_form, from_edges, parse_graph6, to_graph6

__all__ = [
    "DominationCertificate",
    "FamilyCensus",
    "Kind",
    "LabeledTree",
    "Tree",
    "all_trees",
    "canonical_form",
    "count_trees",
    "dp_almost_domination",
    "dp_domination",
    "dp_semitotal",
    "dp_semitotal_forced",
    "dp_total_domination",
    "find_labeling",
    "from_edges",
    "generate_family_O",
    "generate_family_T",
    "is_extremal",
    "is_gamma_equal",
    "oracle_minimum",
    "parse_graph6",
    "to_graph6",
]
