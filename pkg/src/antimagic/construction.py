"""Three-color local antimagic labeling of K_{1,n} joined with two isolated vertices.

For odd ``n`` with ``3 ∤ n + 1`` the labeling puts ``i`` on the hub-leaf edge
``v v_i``, ``{n+1, n+2}`` on the two hub-apex edges, and splits
``{n+3, ..., 3n+2}`` into pairs ``A_i`` placed on ``v_i x`` and ``v_i y``.
Which member of ``A_i`` goes to ``x`` depends on ``n`` through one of four
congruence cases, chosen so that ``x`` and ``y`` end up with equal weight.

Leaf weights are then all ``(9n+11)/2``, the hub weight is
``(n+2)(n+3)/2`` and both apexes weigh ``(n+1)(4n+3)/2``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .graph import Graph, theorem_graph
from .labeling import EdgeLabeling, check_local_antimagic, weight_vector


class CaseTag(enum.Enum):
    BASE1 = "Base1"
    C1 = "C1"
    C2 = "C2"
    C3 = "C3"
    C4 = "C4"
    EVEN_N = "EvenN"
    DIVISIBLE_BY_THREE = "DivisibleByThree"

    @property
    def accepting(self) -> bool:
        return self not in (CaseTag.EVEN_N, CaseTag.DIVISIBLE_BY_THREE)

    def __str__(self):
        return self.value


ACCEPTING_TAGS = tuple(t for t in CaseTag if t.accepting)


class DomainRejection(ValueError):
    """``n`` lies outside the construction's domain."""

    def __init__(self, n: int, tag: CaseTag):
        reason = {
            CaseTag.EVEN_N: "n is even",
            CaseTag.DIVISIBLE_BY_THREE: "n + 1 is divisible by 3",
        }[tag]
        super().__init__(f"n={n} rejected ({tag.value}): {reason}")
        self.n = n
        self.tag = tag


class ConstructionDefect(RuntimeError):
    """The constructed labeling failed its own self-check. Always a bug."""


@dataclass(frozen=True)
class WeightProfile:
    n: int
    hub_weight: int
    leaf_weight: int
    apex_weight: int

    def as_tuple(self):
        return (self.hub_weight, self.leaf_weight, self.apex_weight)


def applicable_case(n: int) -> CaseTag:
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    if n == 1:
        return CaseTag.BASE1
    if n % 2 == 0:
        return CaseTag.EVEN_N
    if (n + 1) % 3 == 0:
        return CaseTag.DIVISIBLE_BY_THREE
    half = (n + 1) // 2
    if half % 4 == 0:
        return CaseTag.C1
    if half % 4 == 2:
        return CaseTag.C2
    # half odd; exactly one of these holds once 3 | n + 1 is excluded
    if ((n + 3) // 2) % 3 == 0:
        return CaseTag.C3
    if ((n - 1) // 2) % 3 == 0:
        return CaseTag.C4
    raise AssertionError(f"no case for n={n}")  # pragma: no cover


def _require_accepting(n: int) -> CaseTag:
    tag = applicable_case(n)
    if not tag.accepting:
        raise DomainRejection(n, tag)
    return tag


BASE_PROFILE = WeightProfile(1, 10, 6, 7)


def expected_weights(n: int) -> WeightProfile:
    """Target (hub, leaf, apex) weights.

    The closed forms hold for ``n >= 3``; ``n = 1`` uses the hand-made base
    labeling instead, whose weights are (10, 6, 7).
    """
    tag = _require_accepting(n)
    if tag is CaseTag.BASE1:
        return BASE_PROFILE
    return WeightProfile(
        n,
        (n + 2) * (n + 3) // 2,
        (9 * n + 11) // 2,
        (n + 1) * (4 * n + 3) // 2,
    )


def _pair_arrays(n: int):
    """Low and high member of every ``A_i``, as arrays indexed by ``i - 1``."""
    i = np.arange(1, n + 1, dtype=np.int64)
    first = i <= (n + 1) // 2
    low = np.where(first, 2 * n + 4 - 2 * i, 3 * n + 4 - 2 * i)
    high = np.where(first, (5 * n + 3) // 2 + i, (3 * n + 3) // 2 + i)
    return low, high


def partition_pair(n: int, i: int) -> tuple[int, int]:
    """``A_i`` as ``(low, high)``; ``i + low + high`` is the leaf weight."""
    if n < 3:
        raise ValueError("the partition is defined for n >= 3")
    _require_accepting(n)
    if not 1 <= i <= n:
        raise ValueError(f"i={i} outside 1..{n}")
    if i <= (n + 1) // 2:
        return 2 * n + 4 - 2 * i, (5 * n + 3) // 2 + i
    return 3 * n + 4 - 2 * i, (3 * n + 3) // 2 + i


# Orientation rules.  Each returns a boolean array over i = 1..n that is True
# where x receives the high member of A_i, plus the label of the edge v x.
# Ranges are inclusive on both ends and may be empty.

def _rule_c1(n, i):
    half = (n + 1) // 2
    r = i % 4
    head = (i <= half) & ((r == 1) | (r == 0))
    pivot = (i == half + 1) | (i == half + 2)
    tail = (i >= half + 4) & ((r == 0) | (r == 3))
    return head | pivot | tail, n + 2


def _rule_c2(n, i):
    half = (n + 1) // 2
    r = i % 4
    head = (i <= half) & ((r == 1) | (r == 0))
    pivot = i == half + 1
    tail = (i >= half + 2) & ((r == 0) | (r == 3))
    return head | pivot | tail, n + 2


def _rule_c3_c4(n, i, first_end, hub_x):
    """Cases 3 and 4 differ only in where the first parity block ends."""
    half = (n + 1) // 2
    even = i % 2 == 0
    block1 = (i >= 2) & (i <= first_end) & even
    block2 = (i > first_end) & (i <= half) & ~even
    block3 = (i > half) & ~even
    return block1 | block2 | block3, hub_x


def _orientation(tag: CaseTag, n: int):
    i = np.arange(1, n + 1, dtype=np.int64)
    if tag is CaseTag.C1:
        return _rule_c1(n, i)
    if tag is CaseTag.C2:
        return _rule_c2(n, i)
    if tag is CaseTag.C3:
        return _rule_c3_c4(n, i, n // 3, n + 1)
    if tag is CaseTag.C4:
        return _rule_c3_c4(n, i, (n + 2) // 3, n + 2)
    raise ValueError(tag)


@dataclass(frozen=True)
class Construction:
    """A constructed labeling together with the per-role label arrays."""

    n: int
    tag: CaseTag
    graph: Graph
    labeling: EdgeLabeling
    vx: int
    vy: int
    x_labels: np.ndarray
    y_labels: np.ndarray
    """``x_labels[i - 1]`` is f(v_i x); likewise for y."""

    def profile(self) -> WeightProfile:
        return expected_weights(self.n)


def build(n: int, check: bool = True) -> Construction:
    """Construct the labeling for ``n`` and (by default) self-check it."""
    tag = _require_accepting(n)
    g = theorem_graph(n)
    if tag is CaseTag.BASE1:
        vx, vy = 5, 4
        xl = np.array([2], dtype=np.int64)
        yl = np.array([3], dtype=np.int64)
    else:
        low, high = _pair_arrays(n)
        x_high, vx = _orientation(tag, n)
        vy = 2 * n + 3 - vx
        xl = np.where(x_high, high, low)
        yl = np.where(x_high, low, high)

    # canonical order: v v_1..v v_n, v x, v y, then v_1 x, v_1 y, v_2 x, ...
    labels = np.empty(3 * n + 2, dtype=np.int64)
    labels[:n] = np.arange(1, n + 1)
    labels[n] = vx
    labels[n + 1] = vy
    labels[n + 2::2] = xl
    labels[n + 3::2] = yl
    xl.setflags(write=False)
    yl.setflags(write=False)
    result = Construction(n, tag, g, EdgeLabeling(labels), vx, vy, xl, yl)
    if check:
        self_check(result)
    return result


def construct(n: int, check: bool = True) -> EdgeLabeling:
    """Labeling of ``theorem_graph(n)`` with exactly three vertex weights."""
    return build(n, check).labeling


def self_check(c: Construction) -> None:
    """Raise ConstructionDefect unless ``c`` meets every promised property."""
    n, g = c.n, c.graph
    try:
        w = weight_vector(g, c.labeling)
    except ValueError as exc:
        raise ConstructionDefect(f"n={n}: labeling is not a bijection ({exc})") from exc
    prof = c.profile()
    hub, leaves, x, y = w[0], w[1 : n + 1], w[n + 1], w[n + 2]
    if hub != prof.hub_weight:
        raise ConstructionDefect(f"n={n}: hub weight {hub} != {prof.hub_weight}")
    if not np.all(leaves == prof.leaf_weight):
        raise ConstructionDefect(f"n={n}: leaf weights differ from {prof.leaf_weight}")
    if x != y or x != prof.apex_weight:
        raise ConstructionDefect(f"n={n}: apex weights {x}, {y} != {prof.apex_weight}")
    if len(set(prof.as_tuple())) != 3:
        raise ConstructionDefect(f"n={n}: weight profile {prof.as_tuple()} not distinct")
    verdict = check_local_antimagic(g, c.labeling)
    if not verdict.accepted:
        raise ConstructionDefect(f"n={n}: adjacent equal weights {verdict.violations[:5]}")
