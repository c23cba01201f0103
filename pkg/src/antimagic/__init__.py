"""Local antimagic labelings: construction, verification and exact search."""

from .certify import CounterexampleVerdict, certify_counterexample
from .coloring import ScopeError, chromatic_number
from .construction import (
    CaseTag,
    ConstructionDefect,
    DomainRejection,
    WeightProfile,
    applicable_case,
    build,
    construct,
    expected_weights,
    partition_pair,
)
from .graph import Graph, GraphError, Role, join, make_empty, make_star, theorem_graph
from .labeling import (
    EdgeLabeling,
    LabelingError,
    check_local_antimagic,
    color_count,
    weight,
    weight_vector,
)
from .solver import SolveReport, exhaustive_chi_la, solve_chi_la, star_chi_la

__all__ = [
    "CaseTag",
    "ConstructionDefect",
    "CounterexampleVerdict",
    "DomainRejection",
    "EdgeLabeling",
    "Graph",
    "GraphError",
    "LabelingError",
    "Role",
    "ScopeError",
    "SolveReport",
    "WeightProfile",
    "applicable_case",
    "build",
    "certify_counterexample",
    "check_local_antimagic",
    "chromatic_number",
    "color_count",
    "construct",
    "exhaustive_chi_la",
    "expected_weights",
    "join",
    "make_empty",
    "make_star",
    "partition_pair",
    "solve_chi_la",
    "star_chi_la",
    "theorem_graph",
    "weight",
    "weight_vector",
]
