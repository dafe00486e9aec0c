"""Exact character tables of symmetric and alternating groups, and the graphs built from their zeros."""

from .altchar import AnCharTable, char_table_an
from .cyclo import CycloValue, MixedFieldError, QuadraticValue
from .graphs import ZeroGraph, build_graph, components_and_diameters, duality_check, export_dot, subgraph_check
from .partitions import Partition, all_partitions, conjugate, hook_lengths, r_core, rim_hook_removals
from .symchar import Permutation, SnCharTable, char_table_sn, mn_value, oracle_table
from .tableio import CharTable, VerificationReport, ingest, load_fixture, validate

__version__ = "0.1.0"

__all__ = [
    "AnCharTable",
    "CharTable",
    "CycloValue",
    "MixedFieldError",
    "Partition",
    "Permutation",
    "QuadraticValue",
    "SnCharTable",
    "VerificationReport",
    "ZeroGraph",
    "all_partitions",
    "build_graph",
    "char_table_an",
    "char_table_sn",
    "components_and_diameters",
    "conjugate",
    "duality_check",
    "export_dot",
    "hook_lengths",
    "ingest",
    "load_fixture",
    "mn_value",
    "oracle_table",
    "r_core",
    "rim_hook_removals",
    "subgraph_check",
    "validate",
]
