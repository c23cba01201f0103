"""Immutable simple graphs with canonical edge indexing.

Vertices are ``1..vertex_count``.  Edges are unordered pairs stored as
``(min, max)`` and kept sorted, so an edge's index is its position in the
sorted list.  Labelings elsewhere in the package are arrays indexed by that
position.
"""

from __future__ import annotations

from functools import cached_property
from collections.abc import Sequence as SequenceABC
from typing import Callable, Iterable, NamedTuple, Sequence

import numpy as np


class GraphError(ValueError):
    """Raised for malformed graphs or out-of-range vertex queries."""


class Role(NamedTuple):
    """Role of a vertex in the star/join construction.

    ``kind`` is one of ``"hub"``, ``"leaf"``, ``"apex"``, ``"plain"``.
    ``index`` is the leaf number for leaves and ``"x"``/``"y"`` for apexes.
    """

    kind: str
    index: int | str | None = None

    def __str__(self) -> str:
        if self.kind == "hub":
            return "v"
        if self.kind == "leaf":
            return f"v{self.index}"
        if self.kind == "apex":
            return str(self.index)
        return "plain"

    @classmethod
    def parse(cls, text: str) -> "Role":
        if text == "v":
            return HUB
        if text in ("x", "y"):
            return Role("apex", text)
        if text == "plain":
            return PLAIN
        if text.startswith("v") and text[1:].isdigit():
            return Role("leaf", int(text[1:]))
        raise GraphError(f"unknown vertex role {text!r}")


HUB = Role("hub")
PLAIN = Role("plain")


class LazyRoles(SequenceABC):
    """Role list computed on access; large stars would otherwise allocate one tuple per leaf."""

    def __init__(self, length: int, fn: Callable[[int], Role]):
        self._length = length
        self._fn = fn

    def __len__(self):
        return self._length

    def __getitem__(self, k):
        if isinstance(k, slice):
            return [self[j] for j in range(*k.indices(self._length))]
        if k < 0:
            k += self._length
        if not 0 <= k < self._length:
            raise IndexError(k)
        return self._fn(k)

    def __eq__(self, other):
        if not isinstance(other, SequenceABC):
            return NotImplemented
        return len(self) == len(other) and all(a == b for a, b in zip(self, other))

    def __hash__(self):
        return hash(tuple(self))

    def __repr__(self):
        return f"LazyRoles({list(self)!r})"


class Graph:
    """Undirected simple graph; treat instances as read-only values."""

    __slots__ = ("vertex_count", "_lo", "_hi", "roles", "__dict__")

    def __init__(
        self,
        vertex_count: int,
        edges: Iterable[Sequence[int]] = (),
        roles: Sequence[Role] | None = None,
    ):
        pairs = np.asarray(list(edges), dtype=np.int64).reshape(-1, 2)
        self._setup(vertex_count, pairs[:, 0], pairs[:, 1], roles)

    @classmethod
    def _from_arrays(cls, vertex_count, a, b, roles=None) -> "Graph":
        g = cls.__new__(cls)
        g._setup(vertex_count, np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64), roles)
        return g

    def _setup(self, vertex_count, a, b, roles):
        vertex_count = int(vertex_count)
        if vertex_count < 1:
            raise GraphError("a graph needs at least one vertex")
        if np.any(a == b):
            loop = int(a[np.argmax(a == b)])
            raise GraphError(f"self-loop at vertex {loop}")
        lo = np.minimum(a, b)
        hi = np.maximum(a, b)
        if lo.size and (lo.min() < 1 or hi.max() > vertex_count):
            raise GraphError(f"edge endpoint outside 1..{vertex_count}")
        order = np.lexsort((hi, lo))
        lo, hi = lo[order], hi[order]
        if lo.size > 1:
            dup = (lo[1:] == lo[:-1]) & (hi[1:] == hi[:-1])
            if dup.any():
                k = int(np.argmax(dup))
                raise GraphError(f"duplicate edge {{{lo[k]}, {hi[k]}}}")
        lo.setflags(write=False)
        hi.setflags(write=False)
        if roles is not None:
            if not isinstance(roles, LazyRoles):
                roles = tuple(roles)
            if len(roles) != vertex_count:
                raise GraphError("roles must list exactly one role per vertex")
        self.vertex_count = vertex_count
        self._lo = lo
        self._hi = hi
        self.roles = roles

    # -- basic accessors -------------------------------------------------

    @property
    def edge_count(self) -> int:
        return int(self._lo.size)

    @property
    def endpoints(self) -> tuple[np.ndarray, np.ndarray]:
        """Read-only arrays ``(lo, hi)`` of edge endpoints in canonical order."""
        return self._lo, self._hi

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(zip(self._lo.tolist(), self._hi.tolist()))

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: k for k, e in enumerate(self.edges)}

    @cached_property
    def degrees(self) -> np.ndarray:
        """Degree of every vertex; entry ``u - 1`` is ``deg(u)``."""
        d = np.bincount(self._lo - 1, minlength=self.vertex_count)
        d += np.bincount(self._hi - 1, minlength=self.vertex_count)
        d.setflags(write=False)
        return d

    @cached_property
    def _adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.vertex_count + 1)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def _incidence(self) -> tuple[tuple[int, ...], ...]:
        inc: list[list[int]] = [[] for _ in range(self.vertex_count + 1)]
        for k, (u, v) in enumerate(self.edges):
            inc[u].append(k)
            inc[v].append(k)
        return tuple(tuple(i) for i in inc)

    def _check_vertex(self, u: int) -> None:
        if not 1 <= u <= self.vertex_count:
            raise GraphError(f"vertex {u} outside 1..{self.vertex_count}")

    def neighbors(self, u: int) -> list[int]:
        self._check_vertex(u)
        return list(self._adjacency[u])

    def incident_edges(self, u: int) -> list[int]:
        """Indices of the edges touching ``u``."""
        self._check_vertex(u)
        return list(self._incidence[u])

    def role(self, u: int) -> Role:
        self._check_vertex(u)
        return self.roles[u - 1] if self.roles is not None else PLAIN

    def find_role(self, role: Role) -> int:
        """Vertex carrying ``role``."""
        if self.roles is not None:
            for u, r in enumerate(self.roles, start=1):
                if r == role:
                    return u
        raise GraphError(f"no vertex has role {role}")

    def is_connected(self) -> bool:
        seen = {1}
        stack = [1]
        while stack:
            u = stack.pop()
            for w in self._adjacency[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.vertex_count

    # -- value semantics -------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.vertex_count == other.vertex_count
            and np.array_equal(self._lo, other._lo)
            and np.array_equal(self._hi, other._hi)
            and _same_roles(self.roles, other.roles)
        )

    def __hash__(self) -> int:
        roles = tuple(self.roles) if self.roles is not None else None
        return hash((self.vertex_count, self.edges, roles))

    def __repr__(self) -> str:
        return f"Graph(vertex_count={self.vertex_count}, edge_count={self.edge_count})"


def _same_roles(a, b) -> bool:
    if a is None or b is None:
        return a is b
    return len(a) == len(b) and all(x == y for x, y in zip(a, b))


def make_star(n: int) -> Graph:
    """K_{1,n}: hub is vertex 1, leaf ``i`` is vertex ``i + 1``."""
    if n < 1:
        raise GraphError("a star needs at least one leaf")
    leaves = np.arange(2, n + 2, dtype=np.int64)
    roles = LazyRoles(n + 1, lambda k: HUB if k == 0 else Role("leaf", k))
    return Graph._from_arrays(n + 1, np.ones(n, dtype=np.int64), leaves, roles)


def make_empty(m: int) -> Graph:
    """Edgeless graph on ``m`` vertices."""
    if m < 1:
        raise GraphError("an empty graph still needs at least one vertex")
    return Graph(m)


def join(g1: Graph, g2: Graph) -> Graph:
    """Join of two graphs; ``g2``'s vertices are shifted by ``|V(g1)|``.

    When ``g2`` is the two-vertex empty graph its vertices become the apexes
    ``x`` and ``y``.
    """
    n1, n2 = g1.vertex_count, g2.vertex_count
    lo1, hi1 = g1.endpoints
    lo2, hi2 = g2.endpoints
    cross_a = np.repeat(np.arange(1, n1 + 1, dtype=np.int64), n2)
    cross_b = np.tile(np.arange(n1 + 1, n1 + n2 + 1, dtype=np.int64), n1)
    a = np.concatenate([lo1, lo2 + n1, cross_a])
    b = np.concatenate([hi1, hi2 + n1, cross_b])

    if n2 == 2 and g2.edge_count == 0:
        roles2 = (Role("apex", "x"), Role("apex", "y"))
    else:
        roles2 = g2.roles
    roles1 = g1.roles
    if roles1 is None and roles2 is None:
        roles = None
    else:
        roles = LazyRoles(
            n1 + n2,
            lambda k: _role_at(roles1, k) if k < n1 else _role_at(roles2, k - n1),
        )
    return Graph._from_arrays(n1 + n2, a, b, roles)


def _role_at(roles, k):
    return PLAIN if roles is None else roles[k]


def theorem_graph(n: int) -> Graph:
    """H = K_{1,n} joined with two isolated vertices x (n+2) and y (n+3)."""
    return join(make_star(n), make_empty(2))
