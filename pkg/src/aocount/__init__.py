"""Exact counting of acyclic orientations of complete multipartite graphs."""

from .counting import (
    DEFAULT_MEMORY_BUDGET_CELLS,
    HpTable,
    StirlingTable,
    ao_count,
    ao_count_bipartite_closed_form,
    ao_count_plus_inner_edge,
    build_hp_table,
    build_stirling_table,
    hp_count,
    hp_feasible,
    normalize_part_sizes,
)
from .errors import CapacityError

__version__ = "0.1.0"

__all__ = [
    "CapacityError",
    "DEFAULT_MEMORY_BUDGET_CELLS",
    "HpTable",
    "StirlingTable",
    "ao_count",
    "ao_count_bipartite_closed_form",
    "ao_count_plus_inner_edge",
    "build_hp_table",
    "build_stirling_table",
    "hp_count",
    "hp_feasible",
    "normalize_part_sizes",
]
