"""Mass validation of the construction over a range of n."""

from __future__ import annotations

import csv
import io
import multiprocessing as mp
import time
from collections import Counter
from dataclasses import dataclass

import numpy as np

from .construction import ACCEPTING_TAGS, CaseTag, applicable_case, build, expected_weights
from .labeling import check_local_antimagic, weight_vector

CSV_HEADER = ["n", "case", "verified", "colors", "hub_w", "leaf_w", "apex_w", "elapsed_ms"]
MAX_N = 10**6


@dataclass(frozen=True)
class SweepRow:
    n: int
    case_tag: CaseTag
    verified: bool
    color_count: int
    hub_weight: int
    leaf_weight: int
    apex_weight: int
    elapsed_ms: float

    def as_csv(self) -> list:
        return [
            self.n,
            self.case_tag.value,
            "true" if self.verified else "false",
            self.color_count,
            self.hub_weight,
            self.leaf_weight,
            self.apex_weight,
            f"{self.elapsed_ms:.3f}",
        ]


def sweep_row(n: int) -> SweepRow:
    """Construct without the built-in self-check and verify from scratch."""
    t0 = time.perf_counter()
    c = build(n, check=False)
    w = weight_vector(c.graph, c.labeling)
    accepted = check_local_antimagic(c.graph, c.labeling).accepted
    colors = int(np.unique(w).size)
    hub, leaves, x, y = int(w[0]), w[1 : n + 1], int(w[n + 1]), int(w[n + 2])
    prof = expected_weights(n)
    verified = (
        accepted
        and colors == 3
        and x == y == prof.apex_weight
        and hub == prof.hub_weight
        and bool(np.all(leaves == prof.leaf_weight))
    )
    # a failed leaf check reports the first leaf's weight
    return SweepRow(n, c.tag, verified, colors, hub, int(leaves[0]), x, (time.perf_counter() - t0) * 1000)


def accepting_range(start: int, stop: int) -> list[int]:
    return [n for n in range(start, stop + 1) if applicable_case(n).accepting]


def sweep(start: int, stop: int, jobs: int = 1) -> list[SweepRow]:
    if not 1 <= start <= stop <= MAX_N:
        raise ValueError(f"need 1 <= from <= to <= {MAX_N}, got {start}..{stop}")
    ns = accepting_range(start, stop)
    if jobs > 1 and len(ns) > 1:
        with mp.Pool(jobs) as pool:
            return pool.map(sweep_row, ns, chunksize=max(1, len(ns) // (8 * jobs)))
    return [sweep_row(n) for n in ns]


def rows_to_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in rows:
        writer.writerow(r.as_csv())
    return buf.getvalue()


def summary_line(rows) -> str:
    counts = Counter(r.case_tag for r in rows)
    verified = sum(r.verified for r in rows)
    per_case = " ".join(f"{t.value}={counts.get(t, 0)}" for t in ACCEPTING_TAGS)
    return f"rows={len(rows)} verified={verified} {per_case}"
