"""Exact local antimagic chromatic number by branch and bound.

Edges are labeled one at a time in a fixed order.  A vertex is *complete*
once every incident edge carries a label, at which point its weight is final.
A branch dies when two adjacent complete vertices share a weight, or when the
number of distinct complete weights already matches the incumbent: that count
can only grow as more vertices complete.
"""

from __future__ import annotations

import itertools
import multiprocessing as mp
import random
import time
from dataclasses import dataclass, field
from typing import Callable

from .coloring import MAX_VERTICES, ScopeError, chromatic_number, greedy_clique
from .construction import applicable_case, construct
from .graph import Graph, theorem_graph
from .labeling import EdgeLabeling, check_local_antimagic, color_count

DEFAULT_SEED = 20170101
EXHAUSTIVE_MAX_EDGES = 8
_TIME_CHECK_EVERY = 256


class NoLabelingError(RuntimeError):
    """No bijection of the edge labels is local antimagic."""


# -- desk-scale oracle ------------------------------------------------------

def _evaluate(m, edges, vertex_count, labels):
    """Color count of ``labels`` or None if two adjacent weights clash."""
    w = [0] * (vertex_count + 1)
    for (a, b), lab in zip(edges, labels):
        w[a] += lab
        w[b] += lab
    for a, b in edges:
        if w[a] == w[b]:
            return None
    return len(set(w[1:]))


def exhaustive_chi_la(g: Graph) -> tuple[int, EdgeLabeling]:
    """Minimum color count over all |E|! labelings, with a witness.

    The first minimizing permutation in lexicographic order is returned.
    """
    m = g.edge_count
    if m > EXHAUSTIVE_MAX_EDGES:
        raise ScopeError(f"exhaustive search handles at most {EXHAUSTIVE_MAX_EDGES} edges")
    edges = g.edges
    best = None
    witness = None
    for perm in itertools.permutations(range(1, m + 1)):
        k = _evaluate(m, edges, g.vertex_count, perm)
        if k is not None and (best is None or k < best):
            best, witness = k, perm
    if best is None:
        raise NoLabelingError(f"{g!r} admits no local antimagic labeling")
    return best, EdgeLabeling(witness)


# -- stars --------------------------------------------------------------------

@dataclass(frozen=True)
class StarWeights:
    n: int
    hub_weight: int
    leaf_weights: tuple[int, ...]


def star_weights(n: int) -> StarWeights:
    """Weights forced on K_{1,n} by any labeling: the hub always sees every label."""
    if n < 2:
        raise ValueError("K_{1,n} needs n >= 2 to have at least three vertices")
    return StarWeights(n, n * (n + 1) // 2, tuple(range(1, n + 1)))


def star_chi_la(n: int) -> int:
    rec = star_weights(n)
    # hub weight n(n+1)/2 exceeds every leaf label once n >= 2
    assert rec.hub_weight > max(rec.leaf_weights)
    return n + 1


# -- incumbents and bounds ------------------------------------------------------

def _theorem_incumbent(g: Graph) -> EdgeLabeling | None:
    """Map the constructed labeling onto ``g`` if ``g`` is K_{1,n} ∨ K̄₂ for a valid n."""
    n = g.vertex_count - 3
    if n < 1 or g.edge_count != 3 * n + 2 or not applicable_case(n).accepting:
        return None
    deg = g.degrees.tolist()
    verts = range(1, g.vertex_count + 1)
    if n == 1:
        hubs = [u for u in verts if deg[u - 1] == 3]
        apexes = [u for u in verts if deg[u - 1] == 2]
        if len(hubs) != 2 or len(apexes) != 2:
            return None
        hub, leaves = hubs[0], hubs[1:]
    else:
        hubs = [u for u in verts if deg[u - 1] == n + 2]
        apexes = [u for u in verts if deg[u - 1] == n + 1]
        leaves = [u for u in verts if deg[u - 1] == 3]
        if len(hubs) != 1 or len(apexes) != 2 or len(leaves) != n:
            return None
        hub = hubs[0]
    # H vertex p maps to phi[p]
    phi = [0, hub, *leaves, *apexes]
    h = theorem_graph(n)
    mapping = {}
    index = g.edge_index
    for (p, q), lab in zip(h.edges, construct(n).tolist()):
        key = tuple(sorted((phi[p], phi[q])))
        if key not in index:
            return None
        mapping[key] = lab
    return EdgeLabeling.from_mapping(g, mapping)


def _random_incumbent(g: Graph, rng: random.Random, tries: int, deadline: float | None):
    m = g.edge_count
    labels = list(range(1, m + 1))
    best = None
    for _ in range(tries):
        if deadline is not None and time.perf_counter() >= deadline:
            break
        rng.shuffle(labels)
        k = _evaluate(m, g.edges, g.vertex_count, labels)
        if k is not None and (best is None or k < best[0]):
            best = (k, list(labels))
    return best


def lower_bound(g: Graph) -> tuple[int, str]:
    """(bound, source) with source in chromatic_number | clique | trivial."""
    if g.edge_count == 0:
        return 1, "trivial"
    if g.vertex_count <= MAX_VERTICES:
        return chromatic_number(g), "chromatic_number"
    return len(greedy_clique(g)), "clique"


# -- branch and bound ------------------------------------------------------------

class _Timeout(Exception):
    pass


class _Closed(Exception):
    """Incumbent reached the lower bound; nothing left to prove."""


def edge_order(g: Graph) -> list[int]:
    """Edges by descending endpoint-degree sum, ties by index."""
    deg = g.degrees.tolist()
    return sorted(
        range(g.edge_count),
        key=lambda k: (-(deg[g.edges[k][0] - 1] + deg[g.edges[k][1] - 1]), k),
    )


class _Search:
    """Mutable DFS state for one (sub)tree."""

    def __init__(self, vertex_count, edges, order, best, lb, deadline, shared=None, on_node=None):
        self.n = vertex_count
        self.m = len(edges)
        self.edges = edges
        self.order = order
        self.seq = [edges[k] for k in order]
        self.best = best
        self.lb = lb
        self.deadline = deadline
        self.shared = shared
        self.on_node = on_node
        self.nodes = 0
        self.witness = None

        self.adj = [[] for _ in range(vertex_count + 1)]
        self.remaining = [0] * (vertex_count + 1)
        for a, b in edges:
            self.adj[a].append(b)
            self.adj[b].append(a)
            self.remaining[a] += 1
            self.remaining[b] += 1
        self.w = [0] * (vertex_count + 1)
        self.used = [False] * (self.m + 1)
        self.assigned = [0] * self.m
        self.counts: dict[int, int] = {}
        self.distinct = 0
        for u in range(1, vertex_count + 1):
            if self.remaining[u] == 0:
                self._add(0)

    def _add(self, wt):
        c = self.counts.get(wt, 0)
        if c == 0:
            self.distinct += 1
        self.counts[wt] = c + 1

    def _remove(self, wt):
        c = self.counts[wt] - 1
        self.counts[wt] = c
        if c == 0:
            self.distinct -= 1

    def _clashes(self, u):
        wu = self.w[u]
        rem = self.remaining
        w = self.w
        for x in self.adj[u]:
            if rem[x] == 0 and x != u and w[x] == wu:
                return True
        return False

    def assign(self, depth, label):
        """Place ``label`` on the depth-th edge; return False if the branch is dead.

        On False the caller must still call ``unassign``.
        """
        a, b = self.seq[depth]
        self.used[label] = True
        self.assigned[depth] = label
        self.w[a] += label
        self.w[b] += label
        self.remaining[a] -= 1
        self.remaining[b] -= 1
        ok = True
        # a completes before b so that b's clash test sees a
        if self.remaining[a] == 0:
            if self._clashes(a):
                ok = False
            self._add(self.w[a])
        if self.remaining[b] == 0:
            if ok and self._clashes(b):
                ok = False
            self._add(self.w[b])
        if self.distinct >= self.best:
            ok = False
        return ok

    def unassign(self, depth):
        a, b = self.seq[depth]
        label = self.assigned[depth]
        if self.remaining[b] == 0:
            self._remove(self.w[b])
        if self.remaining[a] == 0:
            self._remove(self.w[a])
        self.remaining[a] += 1
        self.remaining[b] += 1
        self.w[a] -= label
        self.w[b] -= label
        self.used[label] = False
        self.assigned[depth] = 0

    def _sync(self):
        if self.shared is not None:
            v = self.shared.value
            if v < self.best:
                self.best = v
        if self.best <= self.lb:
            raise _Closed

    def _record(self):
        self.best = self.distinct
        labels = [0] * self.m
        for depth, k in enumerate(self.order):
            labels[k] = self.assigned[depth]
        self.witness = labels
        if self.shared is not None:
            with self.shared.get_lock():
                if self.distinct < self.shared.value:
                    self.shared.value = self.distinct
        if self.best <= self.lb:
            raise _Closed

    def dfs(self, depth):
        self.nodes += 1
        if self.on_node is not None:
            self.on_node(depth, self.distinct)
        if self.nodes % _TIME_CHECK_EVERY == 0:
            if self.deadline is not None and time.perf_counter() >= self.deadline:
                raise _Timeout
            self._sync()
        if depth == self.m:
            if self.distinct < self.best:
                self._record()
            return
        for label in range(1, self.m + 1):
            if self.used[label]:
                continue
            if self.assign(depth, label):
                self.dfs(depth + 1)
            self.unassign(depth)
            if self.distinct >= self.best:
                # only reachable once best dropped below the parent's count
                return

    def run(self, start_depth=0):
        """Search the subtree; returns 'done', 'closed' or 'timeout'."""
        try:
            self._sync()
            self.dfs(start_depth)
        except _Closed:
            return "closed"
        except _Timeout:
            return "timeout"
        return "done"


@dataclass
class SolveReport:
    vertex_count: int
    edge_count: int
    chi_la: int | None
    exact: bool
    status: str
    """'exact', 'timeout', 'above_cap' or 'infeasible'."""
    witness: EdgeLabeling | None
    nodes_explored: int
    elapsed_ms: float
    lower_bound: int
    lower_bound_source: str
    incumbent_source: str
    seed: int
    jobs: int = 1
    edges: tuple = field(default=(), repr=False)

    def to_dict(self) -> dict:
        witness = None
        if self.witness is not None:
            witness = [
                {"u": u, "v": v, "label": lab}
                for (u, v), lab in zip(self.edges, self.witness.tolist())
            ]
        return {
            "vertex_count": self.vertex_count,
            "edge_count": self.edge_count,
            "chi_la": self.chi_la,
            "exact": self.exact,
            "status": self.status,
            "witness": witness,
            "nodes_explored": self.nodes_explored,
            "elapsed_ms": round(self.elapsed_ms, 3),
            "lower_bound": self.lower_bound,
            "lower_bound_source": self.lower_bound_source,
            "incumbent_source": self.incumbent_source,
            "seed": self.seed,
            "jobs": self.jobs,
        }


_shared_best = None


def _init_worker(shared):
    global _shared_best
    _shared_best = shared


def _solve_subtree(args):
    vertex_count, edges, order, first_label, best, lb, deadline = args
    s = _Search(vertex_count, edges, order, best, lb, deadline, shared=_shared_best)
    status = "done"
    if s.assign(0, first_label):
        status = s.run(start_depth=1)
    return first_label, status, s.best, s.witness, s.nodes


def solve_chi_la(
    g: Graph,
    budget_ms: float | None = None,
    max_colors: int | None = None,
    seed: int = DEFAULT_SEED,
    jobs: int = 1,
    on_node: Callable[[int, int], None] | None = None,
    restarts: int = 200,
) -> SolveReport:
    """χ_la(g) by branch and bound; exact unless the budget runs out.

    ``max_colors`` restricts the search to labelings with at most that many
    colors.  ``on_node(depth, distinct)`` is called at every search node
    (serial mode only).
    """
    t0 = time.perf_counter()
    deadline = None if budget_ms is None else t0 + budget_ms / 1000.0
    m = g.edge_count
    lb, lb_source = lower_bound(g)

    incumbent = None
    source = "none"
    theorem = _theorem_incumbent(g)
    if theorem is not None:
        incumbent = (color_count(g, theorem), theorem.tolist())
        source = "construction"
    else:
        found = _random_incumbent(g, random.Random(seed), restarts, deadline)
        if found is not None:
            incumbent, source = found, "random"

    cap = g.vertex_count + 1 if max_colors is None else max_colors + 1
    best = cap
    witness = None
    if incumbent is not None and incumbent[0] < cap:
        best, witness = incumbent

    status = "done"
    nodes = 0
    if best > lb and (deadline is None or time.perf_counter() < deadline):
        order = edge_order(g)
        edges = g.edges
        if jobs > 1 and m > 1:
            shared = mp.Value("q", best)
            tasks = [(g.vertex_count, edges, order, lab, best, lb, deadline) for lab in range(1, m + 1)]
            with mp.Pool(jobs, initializer=_init_worker, initargs=(shared,)) as pool:
                results = pool.map(_solve_subtree, tasks)
            nodes = 1
            statuses = set()
            # results arrive in first-label order, so ties go to the smallest label
            for _, st, b, wit, cnt in results:
                nodes += cnt
                statuses.add(st)
                if wit is not None and b < best:
                    best, witness, source = b, wit, "search"
            status = "timeout" if "timeout" in statuses else "done"
        else:
            s = _Search(g.vertex_count, edges, order, best, lb, deadline, on_node=on_node)
            status = s.run()
            nodes = s.nodes
            if s.witness is not None:
                best, witness, source = s.best, s.witness, "search"
    elif best > lb:
        status = "timeout"

    elapsed = (time.perf_counter() - t0) * 1000.0
    wit = EdgeLabeling(witness) if witness is not None else None
    if wit is not None:
        verdict = check_local_antimagic(g, wit)
        if not verdict.accepted or color_count(g, wit) != best:
            raise RuntimeError("solver produced an invalid witness")  # pragma: no cover
    if status == "timeout":
        final = "timeout"
    elif wit is None:
        final = "above_cap" if max_colors is not None else "infeasible"
    else:
        final = "exact"
    return SolveReport(
        vertex_count=g.vertex_count,
        edge_count=m,
        chi_la=best if wit is not None else None,
        exact=final != "timeout",
        status=final,
        witness=wit,
        nodes_explored=nodes,
        elapsed_ms=elapsed,
        lower_bound=lb,
        lower_bound_source=lb_source,
        incumbent_source=source if wit is not None else "none",
        seed=seed,
        jobs=jobs,
        edges=g.edges,
    )
