"""Exact maximum-weight independent set by branch and bound.

Branching vertex is a maximum-degree vertex of the remaining graph: either
drop it, or take it and delete its closed neighborhood.  A branch is cut
when its weight plus all remaining positive weight cannot beat the
incumbent.  Exponential in the worst case; the generating-subgraph test only
feeds it small induced subgraphs.
"""

from __future__ import annotations

from typing import Sequence

from .graph import Graph, GraphError


def max_weight_independent_set(g: Graph, weights: Sequence[int]) -> tuple[frozenset[int], int]:
    """Return ``(S, w(S))`` for an independent set ``S`` of maximum weight.

    >>> from weightspaces.graph import path_graph
    >>> max_weight_independent_set(path_graph(3), [1, 5, 1])
    (frozenset({1}), 5)
    """
    if len(weights) != g.n:
        raise GraphError(f"{len(weights)} weights for {g.n} vertices")
    for v, wt in enumerate(weights):
        if wt < 0:
            raise ValueError(f"negative weight {wt} on vertex {v}")

    nbr = [0] * g.n
    for u, v in g.edges:
        nbr[u] |= 1 << v
        nbr[v] |= 1 << u
    # zero-weight vertices can always be dropped without loss
    alive = 0
    for v, wt in enumerate(weights):
        if wt > 0:
            alive |= 1 << v

    best_set = 0
    best_weight = 0

    def upper(mask: int) -> int:
        total = 0
        while mask:
            low = mask & -mask
            total += weights[low.bit_length() - 1]
            mask ^= low
        return total

    def search(mask: int, chosen: int, weight: int) -> None:
        nonlocal best_set, best_weight
        if weight + upper(mask) <= best_weight:
            return
        pivot, pivot_deg = -1, -1
        isolated = 0
        rest = mask
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            deg = (nbr[v] & mask).bit_count()
            if deg == 0:
                isolated |= low
            elif deg > pivot_deg:
                pivot, pivot_deg = v, deg
        # isolated vertices belong to every optimal extension
        if isolated:
            chosen |= isolated
            weight += upper(isolated)
            mask &= ~isolated
        if pivot < 0 or not mask:
            if weight > best_weight:
                best_set, best_weight = chosen, weight
            return
        bit = 1 << pivot
        search(mask & ~bit & ~nbr[pivot], chosen | bit, weight + weights[pivot])
        search(mask & ~bit, chosen, weight)

    search(alive, 0, 0)
    members = frozenset(v for v in range(g.n) if best_set >> v & 1)
    return members, best_weight
