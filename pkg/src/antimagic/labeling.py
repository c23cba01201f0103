"""Edge labelings, induced vertex weights and the local antimagic check."""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .graph import Graph

MAX_EDGES = 100_000


class LabelingError(ValueError):
    """Labels that are not a bijection onto ``1..|E|`` for the given graph."""

    def __init__(self, message, duplicates=(), missing=()):
        super().__init__(message)
        self.duplicates = list(duplicates)
        self.missing = list(missing)


class SmallGraphWarning(UserWarning):
    """The graph has fewer than three vertices, outside the usual theory."""


@dataclass(frozen=True, eq=False)
class EdgeLabeling:
    """Labels indexed by canonical edge index."""

    labels: np.ndarray

    def __post_init__(self):
        arr = np.array(self.labels, dtype=np.int64).reshape(-1)
        arr.setflags(write=False)
        object.__setattr__(self, "labels", arr)

    def __len__(self):
        return int(self.labels.size)

    def __getitem__(self, k):
        return int(self.labels[k])

    def __eq__(self, other):
        if not isinstance(other, EdgeLabeling):
            return NotImplemented
        return np.array_equal(self.labels, other.labels)

    def __hash__(self):
        return hash(self.labels.tobytes())

    def tolist(self) -> list[int]:
        return self.labels.tolist()

    @classmethod
    def from_mapping(cls, g: Graph, mapping) -> "EdgeLabeling":
        """Build from ``{(u, v): label}``; pair orientation does not matter."""
        labels = [0] * g.edge_count
        seen = set()
        for (u, v), lab in mapping.items():
            key = (min(u, v), max(u, v))
            if key not in g.edge_index:
                raise LabelingError(f"{{{u}, {v}}} is not an edge of the graph")
            if key in seen:
                raise LabelingError(f"edge {{{u}, {v}}} labeled twice")
            seen.add(key)
            labels[g.edge_index[key]] = lab
        if len(seen) != g.edge_count:
            raise LabelingError(f"{g.edge_count - len(seen)} edges have no label")
        return cls(labels)


@dataclass
class Verdict:
    accepted: bool
    violations: list[tuple[int, int, int]] = field(default_factory=list)
    """Each violation is ``(u, w, shared_weight)`` for an edge ``{u, w}``."""
    small_graph: bool = False

    def __bool__(self):
        return self.accepted


def _labels_of(f) -> np.ndarray:
    if isinstance(f, EdgeLabeling):
        return f.labels
    return np.asarray(f, dtype=np.int64).reshape(-1)


def validate(g: Graph, f) -> np.ndarray:
    """Return ``f`` as an int64 array after checking it is a bijection onto 1..|E|."""
    labels = _labels_of(f)
    m = g.edge_count
    if m > MAX_EDGES:
        raise LabelingError(f"graphs with more than {MAX_EDGES} edges are not supported")
    if labels.size != m:
        raise LabelingError(f"labeling has {labels.size} entries, graph has {m} edges")
    if m == 0:
        return labels
    in_range = (labels >= 1) & (labels <= m)
    counts = np.bincount(labels[in_range], minlength=m + 1)
    if in_range.all() and counts[1:].max() == 1:
        return labels
    duplicates = np.flatnonzero(counts > 1).tolist()
    missing = (np.flatnonzero(counts[1:] == 0) + 1).tolist()
    bad = labels[~in_range].tolist()
    parts = []
    if bad:
        parts.append(f"out of range {bad}")
    if duplicates:
        parts.append(f"duplicate {duplicates}")
    if missing:
        parts.append(f"missing {missing}")
    raise LabelingError(
        "labels are not a permutation of 1..%d: %s" % (m, "; ".join(parts)),
        duplicates=duplicates,
        missing=missing,
    )


def _weights(g: Graph, labels: np.ndarray) -> np.ndarray:
    lo, hi = g.endpoints
    w = np.bincount(lo - 1, weights=labels, minlength=g.vertex_count)
    w += np.bincount(hi - 1, weights=labels, minlength=g.vertex_count)
    # float64 sums are exact far beyond MAX_EDGES * (MAX_EDGES + 1)
    return w.astype(np.int64)


def weight_vector(g: Graph, f) -> np.ndarray:
    """Vertex weights; entry ``u - 1`` is the label sum around vertex ``u``."""
    return _weights(g, validate(g, f))


def weight(g: Graph, f, u: int) -> int:
    labels = validate(g, f)
    return int(sum(labels[k] for k in g.incident_edges(u)))


def check_local_antimagic(g: Graph, f) -> Verdict:
    """Accept iff no edge joins two vertices of equal weight.

    Every offending edge is reported, not only the first.
    """
    w = weight_vector(g, f)
    small = g.vertex_count < 3
    if small:
        warnings.warn(
            f"graph has {g.vertex_count} vertices; local antimagic theory assumes at least 3",
            SmallGraphWarning,
            stacklevel=2,
        )
    lo, hi = g.endpoints
    bad = np.flatnonzero(w[lo - 1] == w[hi - 1])
    violations = [(int(lo[k]), int(hi[k]), int(w[lo[k] - 1])) for k in bad]
    return Verdict(not violations, violations, small)


def color_count(g: Graph, f) -> int:
    """Number of distinct vertex weights."""
    return int(np.unique(weight_vector(g, f)).size)
