"""Elliptic Sombor and Euler Sombor indices of join and corona products.

Exact values come from summing edge weights over the constructed graph;
closed forms come from parametric degree-pair tables. The two are compared
as exact sums of square roots.
"""
from .closed_forms import (
    AuditRecord,
    Family,
    FamilySpec,
    audit_statement,
    build,
    closed_index,
    load_errata,
    statement_value,
    symbolic_partition,
)
from .errors import DomainError, GraphParseError, InvalidDegreeError, InvalidParameterError
from .graph import (
    Graph,
    degree_sequence,
    make_complete,
    make_cycle,
    make_path,
    parse_graph,
    relabel,
    serialize_graph,
)
from .harness import SweepReport, VerificationRecord, run_sweep
from .indices import IndexKind, edge_partition, edge_weight, index_exact, index_float
from .ops import corona, join
from .radical import Radical, RadicalSum, normalize_radical

__version__ = "0.1.0"

__all__ = [
    "AuditRecord", "Family", "FamilySpec", "audit_statement", "build", "closed_index",
    "load_errata", "statement_value", "symbolic_partition",
    "DomainError", "GraphParseError", "InvalidDegreeError", "InvalidParameterError",
    "Graph", "degree_sequence", "make_complete", "make_cycle", "make_path", "parse_graph",
    "relabel", "serialize_graph",
    "SweepReport", "VerificationRecord", "run_sweep",
    "IndexKind", "edge_partition", "edge_weight", "index_exact", "index_float",
    "corona", "join",
    "Radical", "RadicalSum", "normalize_radical",
]
