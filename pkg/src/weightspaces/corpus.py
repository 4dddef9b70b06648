"""Graph corpora and per-graph cross-checks used by ``verify`` and the tests."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional, Sequence

from .evs import evs_space, is_equimatchable
from .graph import Graph, find_claw, line_graph
from .linalg import contains, subspace_equal
from .oracle import is_equimatchable_oracle, is_well_covered_oracle, oracle_evs, oracle_wcw
from .wcw import is_well_covered, wcw_space


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    """All ``2**(n choose 2)`` labeled graphs on ``n`` vertices, by edge bitmask."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


def random_graphs(count: int, sizes: Sequence[int], seed: int, p: float = 0.5) -> list[Graph]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.choice(list(sizes))
        out.append(Graph(n, [e for e in combinations(range(n), 2) if rng.random() < p]))
    return out


@dataclass(frozen=True)
class GraphCheck:
    """Cross-check outcomes for one graph; ``None`` means not applicable."""

    evs_matches: bool
    recognition_consistent: bool
    claw_free: bool
    wcw_matches: Optional[bool]
    well_covered_consistent: Optional[bool]
    line_identity: Optional[bool]

    @property
    def ok(self) -> bool:
        return all(x is not False for x in (
            self.evs_matches, self.recognition_consistent, self.wcw_matches,
            self.well_covered_consistent, self.line_identity))


def check_graph(g: Graph, line_max_m: int = 8) -> GraphCheck:
    evs, _ = evs_space(g)
    evs_ok = subspace_equal(evs, oracle_evs(g))
    ones = [1] * g.m
    recog = is_equimatchable(g) == contains(evs, ones) == is_equimatchable_oracle(g)
    claw_free = find_claw(g) is None
    wcw_ok = wc_ok = None
    if claw_free:
        wcw_ok = subspace_equal(wcw_space(g)[0], oracle_wcw(g))
        wc_ok = is_well_covered(g) == is_well_covered_oracle(g)
    line_ok = None
    if g.m <= line_max_m:
        line_ok = subspace_equal(evs, wcw_space(line_graph(g).graph)[0])
    return GraphCheck(evs_ok, recog, claw_free, wcw_ok, wc_ok, line_ok)


def check_batch(args) -> list[GraphCheck]:
    graphs, line_max_m = args
    return [check_graph(g, line_max_m) for g in graphs]
