"""Functional graphs of endofunctions and the functions that commute with them."""

__version__ = "0.1.0"

from .canonical import aut_count, class_key, classify_components, tree_code, weakly_isomorphic
from .centralizer import (
    centralizer_report,
    count_bij_centralizer,
    count_bij_centralizer_perm,
    count_centralizer,
    count_centralizer_perm,
    enumerate_centralizer,
    hom_matrix,
    predicted_cycle_type,
)
from .decompose import components, cycle_vertices, height, tree_at
from .funcgraph import Endofunction, commutes, compose, new_endofunction
from .homcount import antichain_count, antichains, hom_anchored, hom_pseudocycle, hom_via_theorem34

__all__ = [
    "Endofunction",
    "new_endofunction",
    "compose",
    "commutes",
    "components",
    "cycle_vertices",
    "tree_at",
    "height",
    "tree_code",
    "aut_count",
    "classify_components",
    "class_key",
    "weakly_isomorphic",
    "hom_anchored",
    "hom_pseudocycle",
    "hom_via_theorem34",
    "antichains",
    "antichain_count",
    "hom_matrix",
    "count_centralizer",
    "count_bij_centralizer",
    "count_centralizer_perm",
    "count_bij_centralizer_perm",
    "centralizer_report",
    "enumerate_centralizer",
    "predicted_cycle_type",
]
