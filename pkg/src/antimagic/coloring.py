"""Exact chromatic number for small graphs; used as a lower bound on χ_la."""

from __future__ import annotations

from .graph import Graph

MAX_VERTICES = 16


class ScopeError(ValueError):
    """Input exceeds the size an exact routine is willing to handle."""


def greedy_clique(g: Graph) -> list[int]:
    """A maximal clique grown greedily by degree; its size bounds χ from below."""
    adj = {u: set(g.neighbors(u)) for u in range(1, g.vertex_count + 1)}
    candidates = set(adj)
    clique: list[int] = []
    while candidates:
        u = max(candidates, key=lambda c: (len(adj[c] & candidates), -c))
        clique.append(u)
        candidates &= adj[u]
    return sorted(clique)


def _greedy_coloring(order, adj):
    color = {}
    for u in order:
        taken = {color[w] for w in adj[u] if w in color}
        c = 0
        while c in taken:
            c += 1
        color[u] = c
    return color


def chromatic_number(g: Graph) -> int:
    if g.vertex_count > MAX_VERTICES:
        raise ScopeError(f"chromatic_number handles at most {MAX_VERTICES} vertices")
    n = g.vertex_count
    adj = [()] + [tuple(g.neighbors(u)) for u in range(1, n + 1)]
    order = sorted(range(1, n + 1), key=lambda u: (-len(adj[u]), u))
    lower = len(greedy_clique(g))
    best = max(_greedy_coloring(order, adj).values()) + 1
    if best == lower:
        return best

    color = [-1] * (n + 1)

    def dfs(pos, used):
        # used = number of colors in play; a new color is always the next one
        nonlocal best
        if used >= best:
            return
        if pos == n:
            best = used
            return
        u = order[pos]
        taken = {color[w] for w in adj[u]}
        for c in range(min(used + 1, best - 1)):
            if c in taken:
                continue
            color[u] = c
            dfs(pos + 1, max(used, c + 1))
            color[u] = -1
            if best == lower:
                return

    dfs(0, 0)
    return best
