"""Certified refutation of the bound χ_la(G) + 1 <= χ_la(G ∨ K̄₂).

Take G = K_{1,n}.  Every labeling of a star gives n + 1 colors, so the bound
would force χ_la(G ∨ K̄₂) >= n + 2.  The constructed labeling of G ∨ K̄₂ uses
three colors, which is smaller as soon as n >= 3.
"""

from __future__ import annotations

from dataclasses import dataclass

from .construction import DomainRejection, applicable_case, build
from .graph import Graph
from .labeling import EdgeLabeling, check_local_antimagic, color_count
from .solver import star_chi_la

REFUTED_CLAIM = "chi_la(G) + 1 <= chi_la(G v K2bar) for every graph G with at least 4 vertices"


@dataclass(frozen=True)
class CounterexampleVerdict:
    n: int
    chi_la_star: int
    chi_la_join_upper: int
    claimed_lower: int
    refuted: bool
    graph: Graph
    witness: EdgeLabeling
    claim: str = REFUTED_CLAIM

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "claim": self.claim,
            "chi_la_star": self.chi_la_star,
            "chi_la_join_upper": self.chi_la_join_upper,
            "claimed_lower": self.claimed_lower,
            "refuted": self.refuted,
            "witness": [
                {"u": u, "v": v, "label": lab}
                for (u, v), lab in zip(self.graph.edges, self.witness.tolist())
            ],
        }


def certify_counterexample(n: int) -> CounterexampleVerdict:
    tag = applicable_case(n)
    if not tag.accepting:
        raise DomainRejection(n, tag)
    if n < 3:
        raise ValueError("the refuted bound concerns graphs with at least 4 vertices; need n >= 3")
    c = build(n)
    verdict = check_local_antimagic(c.graph, c.labeling)
    if not verdict.accepted:
        raise RuntimeError(f"constructed labeling for n={n} is not local antimagic")
    upper = color_count(c.graph, c.labeling)
    star = star_chi_la(n)
    claimed = star + 1
    return CounterexampleVerdict(
        n=n,
        chi_la_star=star,
        chi_la_join_upper=upper,
        claimed_lower=claimed,
        refuted=upper < claimed,
        graph=c.graph,
        witness=c.labeling,
    )
