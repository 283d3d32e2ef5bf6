"""Exact boxicity, local boxicity and union boxicity of small graphs, with checkable certificates."""

from .boxes import (
    FULL,
    BoxRepresentation,
    boxes_to_cover,
    intersection_graph_of_boxes,
    local_cover_to_boxes,
    product_of_representations,
    union_cover_to_boxes,
)
from .certificates import make_certificate, verify_certificate
from .covers import PLAIN, UNION, CoCover, CoverError, verify_cover
from .graph import Graph, complement, parse_graph6, serialize_graph6
from .interval import interval_model, is_co_interval, is_interval, is_union_co_interval
from .solvers import (
    INF,
    BudgetExceeded,
    box_f,
    boxicity,
    local_boxicity,
    local_boxicity_union_class,
    union_boxicity,
)

__all__ = [
    "FULL", "INF", "PLAIN", "UNION",
    "BoxRepresentation", "BudgetExceeded", "CoCover", "CoverError", "Graph",
    "box_f", "boxes_to_cover", "boxicity", "complement", "interval_model",
    "intersection_graph_of_boxes", "is_co_interval", "is_interval", "is_union_co_interval",
    "local_boxicity", "local_boxicity_union_class", "local_cover_to_boxes",
    "make_certificate", "parse_graph6", "product_of_representations", "serialize_graph6",
    "union_boxicity", "union_cover_to_boxes", "verify_certificate", "verify_cover",
]
