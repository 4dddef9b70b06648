"""Brute-force ground truth.

Everything here works straight from the definitions: enumerate every maximal
independent set (or maximal matching), and demand that they all weigh the
same.  Nothing is shared with the generating-subgraph or matching pipelines,
so agreement between the two is meaningful.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .graph import Graph
from .linalg import Restriction, WeightSpace, nullspace

MAX_GROUND = 20
MAX_ORACLE_VERTICES = 16
MAX_ORACLE_EDGES = 28


class OracleLimitError(ValueError):
    """Input too large for exhaustive enumeration."""


def _bits(mask: int) -> frozenset[int]:
    return frozenset(i for i in range(mask.bit_length()) if mask >> i & 1)


def _canonical(sets: Iterable[frozenset[int]]) -> list[frozenset[int]]:
    return sorted(sets, key=lambda s: tuple(sorted(s)))


# -- direct enumeration ------------------------------------------------------

def _maximal_packings(conflicts: Sequence[int]) -> list[frozenset[int]]:
    """Maximal conflict-free subsets of ``0..k-1``.

    ``conflicts[i]`` is the bitmask of elements that cannot coexist with ``i``.
    Backtracking enumerates every conflict-free set once; a set is kept when
    no element outside it is compatible with all of it.
    """
    k = len(conflicts)
    out = []

    def rec(i: int, chosen: int, blocked: int) -> None:
        if i == k:
            free = ~(chosen | blocked) & ((1 << k) - 1)
            if not free:
                out.append(_bits(chosen))
            return
        bit = 1 << i
        if not blocked & bit:
            rec(i + 1, chosen | bit, blocked | conflicts[i])
        rec(i + 1, chosen, blocked)

    rec(0, 0, 0)
    return _canonical(out)


def maximal_independent_sets(g: Graph) -> list[frozenset[int]]:
    if g.n > MAX_ORACLE_VERTICES:
        raise OracleLimitError(f"{g.n} vertices exceeds the oracle cap of {MAX_ORACLE_VERTICES}")
    conflicts = [sum(1 << u for u in g.adj[v]) for v in range(g.n)]
    return _maximal_packings(conflicts)


def maximal_matchings(g: Graph) -> list[frozenset[int]]:
    """Maximal matchings as sets of edge indices."""
    if g.m > MAX_ORACLE_EDGES:
        raise OracleLimitError(f"{g.m} edges exceeds the oracle cap of {MAX_ORACLE_EDGES}")
    conflicts = []
    for i, (a, b) in enumerate(g.edges):
        mask = 0
        for j, (c, d) in enumerate(g.edges):
            if j != i and {a, b} & {c, d}:
                mask |= 1 << j
        conflicts.append(mask)
    return _maximal_packings(conflicts)


def equal_weight_restrictions(sets: list[frozenset[int]], dim: int, kind: str) -> list[Restriction]:
    """``w(S_1) - w(S_i) = 0`` for every listed set after the first."""
    rows = []
    for other in sets[1:]:
        coeffs = tuple(int(i in sets[0]) - int(i in other) for i in range(dim))
        if any(coeffs):
            rows.append(Restriction(coeffs, {"kind": kind, "sets": [sorted(sets[0]), sorted(other)]}))
    return rows


def _equal_weight_space(sets: list[frozenset[int]], dim: int, kind: str) -> WeightSpace:
    return nullspace(equal_weight_restrictions(sets, dim, kind), dim)


def oracle_wcw(g: Graph) -> WeightSpace:
    """All vertex weightings under which every maximal independent set weighs the same."""
    return _equal_weight_space(maximal_independent_sets(g), g.n, "independent")


def oracle_evs(g: Graph) -> WeightSpace:
    """All edge weightings under which every maximal matching weighs the same."""
    return _equal_weight_space(maximal_matchings(g), g.m, "matching")


def is_well_covered_oracle(g: Graph) -> bool:
    return len({len(s) for s in maximal_independent_sets(g)}) <= 1


def is_equimatchable_oracle(g: Graph) -> bool:
    return len({len(m) for m in maximal_matchings(g)}) <= 1


# -- hereditary systems --------------------------------------------------------

@dataclass(frozen=True)
class HereditarySystem:
    """Ground set ``0..size-1`` with feasible sets = subsets of some generator.

    Building the family as a downward closure makes it hereditary by
    construction.
    """

    size: int
    generators: tuple[frozenset[int], ...]

    def __post_init__(self):
        if self.size > MAX_GROUND:
            raise OracleLimitError(f"ground set of {self.size} exceeds the cap of {MAX_GROUND}")
        for gen in self.generators:
            if any(not 0 <= x < self.size for x in gen):
                raise ValueError(f"generator {sorted(gen)} leaves the ground set")

    @classmethod
    def downward_closure(cls, size: int, generators: Iterable[Iterable[int]]) -> "HereditarySystem":
        return cls(size, tuple(frozenset(g) for g in generators))

    @classmethod
    def independence_system(cls, g: Graph) -> "HereditarySystem":
        """Vertices of ``g``; feasible = independent.  Generators come from
        plain subset iteration, independently of the backtracking enumerator."""
        gens = []
        for mask in range(1 << g.n):
            s = _bits(mask)
            if all(not g.has_edge(u, v) for u, v in combinations(sorted(s), 2)):
                gens.append(s)
        return cls(g.n, tuple(gens))

    @classmethod
    def matching_system(cls, g: Graph) -> "HereditarySystem":
        """Edges of ``g``; feasible = pairwise disjoint."""
        gens = []
        for mask in range(1 << g.m):
            s = _bits(mask)
            ends = [x for i in s for x in g.edges[i]]
            if len(ends) == len(set(ends)):
                gens.append(s)
        return cls(g.m, tuple(gens))

    @cached_property
    def _feasible_masks(self) -> frozenset[int]:
        out: set[int] = set()
        for gen in self.generators:
            full = sum(1 << x for x in gen)
            if full in out:
                continue
            sub = full
            while True:
                out.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & full
        out.add(0)
        return frozenset(out)

    def is_feasible(self, s: Iterable[int]) -> bool:
        return sum(1 << x for x in set(s)) in self._feasible_masks


def maximal_feasible_sets(h: HereditarySystem) -> list[frozenset[int]]:
    """Feasible sets to which no single element can be added."""
    feasible = h._feasible_masks
    out = []
    for mask in range(1 << h.size):
        if mask not in feasible:
            continue
        if all(mask >> x & 1 or (mask | 1 << x) not in feasible for x in range(h.size)):
            out.append(_bits(mask))
    return _canonical(out)


def greedy_space(h: HereditarySystem) -> WeightSpace:
    """Weightings making ``h`` greedy (all maximal feasible sets equal weight)."""
    return _equal_weight_space(maximal_feasible_sets(h), h.size, "feasible")


def set_weight(s: Iterable[int], w: Sequence) -> Fraction:
    return sum((Fraction(w[x]) for x in s), Fraction(0))


def swaps_infeasible(h: HereditarySystem, f1: frozenset[int], f2: frozenset[int]) -> bool:
    """True iff ``(F1 & F2) | {a, b}`` is infeasible for every ``a in F1 - F2``,
    ``b in F2 - F1``."""
    common = f1 & f2
    return all(not h.is_feasible(common | {a, b}) for a in f1 - f2 for b in f2 - f1)


def whs_witness(h: HereditarySystem, w: Sequence) -> Optional[tuple[frozenset[int], frozenset[int]]]:
    """Two maximal feasible sets of different weight whose swap sets are all
    infeasible, or ``None`` when every maximal feasible set has the same weight.

    Among unequal-weight pairs, one with the largest intersection is chosen;
    such a pair always has the swap property.
    """
    if len(w) != h.size:
        raise ValueError(f"{len(w)} weights for a ground set of {h.size}")
    sets = maximal_feasible_sets(h)
    weights = [set_weight(s, w) for s in sets]
    best = None
    best_common = -1
    for i, j in combinations(range(len(sets)), 2):
        if weights[i] != weights[j]:
            common = len(sets[i] & sets[j])
            if common > best_common:
                best, best_common = (sets[i], sets[j]), common
    if best is not None:
        assert swaps_infeasible(h, *best), best
    return best
