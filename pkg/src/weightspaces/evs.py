"""EVS(G): edge weightings under which all maximal matchings weigh the same.

Two maximal matchings of different weight can always be chosen so that
their symmetric difference is a P3, a P4 or a C4.  The pipeline therefore
collects one restriction per such structure that actually arises as a
symmetric difference:

* every P3 is decided separately with one maximum-weight matching call;
* P4s are found per pair of non-adjacent endpoints by repeatedly solving a
  matching problem and demoting the middle edges already reported;
* every 4-cycle is a symmetric difference, unconditionally.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence

from .graph import (
    Graph, GraphError, Matching, PathSpec, check_cycle, check_path,
    enumerate_c4, enumerate_p3, is_maximal_matching, nonadjacent_pairs,
)
from .linalg import Restriction, WeightSpace, contains, nullspace
from .matching import extend_to_maximal, matching_weight, max_weight_matching


@dataclass(frozen=True)
class SymDiffWitness:
    """Two maximal matchings (edge indices) whose symmetric difference is the
    structure they certify."""

    m1: Matching
    m2: Matching

    def symmetric_difference(self) -> frozenset[int]:
        return self.m1 ^ self.m2

    def is_valid(self, g: Graph, edge_set: frozenset[int]) -> bool:
        return (is_maximal_matching(g, self.m1) and is_maximal_matching(g, self.m2)
                and self.symmetric_difference() == edge_set)

    def as_dict(self, g: Graph) -> dict:
        return {"m1": [list(g.edges[i]) for i in sorted(self.m1)],
                "m2": [list(g.edges[i]) for i in sorted(self.m2)]}


class LoopBoundError(AssertionError):
    """The P4 demotion loop ran more rounds than there are demotable edges."""


def _lift(g: Graph, old: Sequence[int], sub: Graph, m: Matching) -> set[int]:
    return {g.edge_index(old[sub.edges[i][0]], old[sub.edges[i][1]]) for i in m}


def path_edges(g: Graph, p: Sequence[int]) -> list[int]:
    return [g.edge_index(a, b) for a, b in zip(p, p[1:])]


def path_sym_diff_check(g: Graph, p: Sequence[int]) -> Optional[SymDiffWitness]:
    """Two maximal matchings with symmetric difference exactly the path ``p``,
    or ``None`` if there are none.

    The remaining graph must carry a matching that covers every outside
    neighbor of the two path ends (the only path vertices left uncovered by
    one of the two matchings); a max-weight matching with weight = number
    of covered such neighbors decides this.
    """
    p = check_path(g, p)
    k = len(p)
    first, last = p[0], p[-1]
    if k % 2 == 0 and g.has_edge(first, last):
        return None
    on_path = set(p)
    rest = [v for v in range(g.n) if v not in on_path]
    sub, old = g.induced(rest)
    targets = (g.adj[first] | g.adj[last]) - on_path
    if targets:
        weights = [(old[u] in targets) + (old[v] in targets) for u, v in sub.edges]
        best = max_weight_matching(sub, weights)
        if matching_weight(best, weights) < len(targets):
            return None
    else:
        best = frozenset()
    base = _lift(g, old, sub, extend_to_maximal(sub, best))
    edges = path_edges(g, p)
    return SymDiffWitness(frozenset(base.union(edges[0::2])), frozenset(base.union(edges[1::2])))


def cycle_sym_diff_witness(g: Graph, c: Sequence[int]) -> SymDiffWitness:
    """Two maximal matchings whose symmetric difference is the even cycle ``c``."""
    c = check_cycle(g, c)
    on_cycle = set(c)
    sub, old = g.induced(v for v in range(g.n) if v not in on_cycle)
    base = _lift(g, old, sub, extend_to_maximal(sub, ()))
    edges = path_edges(g, c + (c[0],))
    return SymDiffWitness(frozenset(base.union(edges[0::2])), frozenset(base.union(edges[1::2])))


def _p4_search(g: Graph, v1: int, v4: int, first_only: bool = False) -> list[tuple[PathSpec, SymDiffWitness]]:
    """Every P4 from ``v1`` to ``v4`` that is a symmetric difference of two
    maximal matchings, each with a witness.

    Working graph: ``g - {v1, v4}``.  Let ``V = g.n`` and ``T = N(v1) | N(v4)``.
    An edge joining N(v1) to N(v4) weighs ``2V + 1``; any other edge weighs
    ``V`` per endpoint in ``T``.  A matching's weight is then ``V*A + B``,
    where ``A`` counts covered vertices of ``T`` and ``B`` < V counts the
    heavy edges used.  While the optimum exceeds ``V*|T|`` (so ``T`` is fully
    covered and some heavy edge is used), every heavy edge in the optimum is
    a valid middle edge: report it and demote it to ``2V``.
    """
    if v1 == v4 or g.has_edge(v1, v4):
        raise GraphError(f"p4 endpoints must be distinct and non-adjacent, got ({v1}, {v4})")
    V = g.n
    sub, old = g.induced(v for v in range(g.n) if v not in (v1, v4))
    n1 = g.adj[v1]
    n4 = g.adj[v4]
    targets = n1 | n4
    weights = []
    heavy = []
    for i, (a, b) in enumerate(sub.edges):
        x, y = old[a], old[b]
        if (x in n1 and y in n4) or (y in n1 and x in n4):
            weights.append(2 * V + 1)
            heavy.append(i)
        else:
            weights.append(V * ((x in targets) + (y in targets)))
    found: list[tuple[PathSpec, SymDiffWitness]] = []
    if not heavy:
        return found
    threshold = V * len(targets)
    rounds = 0
    while True:
        best = max_weight_matching(sub, weights)
        total = matching_weight(best, weights)
        covered, used_heavy = divmod(total, V)
        assert used_heavy < V and covered <= len(targets), (total, V, len(targets))
        if total <= threshold:
            break
        rounds += 1
        if rounds > len(heavy):
            raise LoopBoundError(f"demotion loop exceeded {len(heavy)} rounds for ({v1}, {v4})")
        base = extend_to_maximal(sub, best)
        lifted = _lift(g, old, sub, base)
        for i in sorted(best):
            if weights[i] != 2 * V + 1:
                continue
            weights[i] = 2 * V
            x, y = old[sub.edges[i][0]], old[sub.edges[i][1]]
            middle = g.edge_index(x, y)
            for a, b in ((x, y), (y, x)):
                if a in n1 and b in n4:
                    swapped = (lifted - {middle}) | {g.edge_index(v1, a), g.edge_index(b, v4)}
                    found.append(((v1, a, b, v4), SymDiffWitness(frozenset(swapped), frozenset(lifted))))
            if first_only:
                return found
    found.sort(key=lambda item: item[0])
    return found


def p4_paths_between(g: Graph, v1: int, v4: int) -> list[PathSpec]:
    """P4s from ``v1`` to non-adjacent ``v4`` that are symmetric differences
    of two maximal matchings, sorted."""
    return [p for p, _ in _p4_search(g, v1, v4)]


def _restriction(g: Graph, plus: Sequence[tuple[int, int]], minus: Sequence[tuple[int, int]], provenance: dict) -> Restriction:
    coeffs = [0] * g.m
    for a, b in plus:
        coeffs[g.edge_index(a, b)] += 1
    for a, b in minus:
        coeffs[g.edge_index(a, b)] -= 1
    return Restriction(tuple(coeffs), provenance)


def _p3_batch(args) -> list[Restriction]:
    g, p3s = args
    out = []
    for v1, v2, v3 in p3s:
        witness = path_sym_diff_check(g, (v1, v2, v3))
        if witness is not None:
            out.append(_restriction(g, [(v1, v2)], [(v2, v3)],
                                    {"kind": "P3", "path": [v1, v2, v3], "witness": witness.as_dict(g)}))
    return out


def _p4_batch(args) -> list[Restriction]:
    g, pairs = args
    out = []
    for v1, v4 in pairs:
        for (a, x, y, b), witness in _p4_search(g, v1, v4):
            out.append(_restriction(g, [(a, x), (y, b)], [(x, y)],
                                    {"kind": "P4", "path": [a, x, y, b], "witness": witness.as_dict(g)}))
    return out


def _c4_batch(args) -> list[Restriction]:
    g, cycles = args
    out = []
    for c in cycles:
        a, b, x, d = c
        witness = cycle_sym_diff_witness(g, c)
        out.append(_restriction(g, [(a, b), (x, d)], [(b, x), (a, d)],
                                {"kind": "C4", "cycle": list(c), "witness": witness.as_dict(g)}))
    return out


def _fan_out(fn, g: Graph, items: list, jobs: int, pool) -> list:
    if pool is None or len(items) < 2 * jobs:
        return fn((g, items))
    chunk = -(-len(items) // jobs)
    parts = pool.map(fn, [(g, items[i:i + chunk]) for i in range(0, len(items), chunk)])
    return [r for part in parts for r in part]


def evs_restrictions(g: Graph, jobs: int = 1) -> list[Restriction]:
    """P3, then P4, then C4 restrictions, each block in canonical order."""
    p3s = enumerate_p3(g)
    pairs = nonadjacent_pairs(g)
    cycles = enumerate_c4(g)
    if jobs <= 1:
        return _p3_batch((g, p3s)) + _p4_batch((g, pairs)) + _c4_batch((g, cycles))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return (_fan_out(_p3_batch, g, p3s, jobs, pool) + _fan_out(_p4_batch, g, pairs, jobs, pool)
                + _fan_out(_c4_batch, g, cycles, jobs, pool))


def evs_space(g: Graph, jobs: int = 1) -> tuple[WeightSpace, list[Restriction]]:
    restrictions = evs_restrictions(g, jobs)
    return nullspace(restrictions, g.m), restrictions


def equimatchable_certificate(g: Graph) -> Optional[tuple[PathSpec, SymDiffWitness]]:
    """First P4 (over non-adjacent endpoint pairs in order) that is a symmetric
    difference of two maximal matchings; these two differ in size by one."""
    for v1, v4 in nonadjacent_pairs(g):
        hit = _p4_search(g, v1, v4, first_only=True)
        if hit:
            return hit[0]
    return None


def is_equimatchable(g: Graph) -> bool:
    return equimatchable_certificate(g) is None


def is_w_equimatchable(g: Graph, w: Sequence) -> bool:
    if len(w) != g.m:
        raise GraphError(f"{len(w)} weights for {g.m} edges")
    space, _ = evs_space(g)
    return contains(space, w)
