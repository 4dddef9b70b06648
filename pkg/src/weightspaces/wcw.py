"""WCW(G) for claw-free graphs via generating subgraphs.

In a claw-free graph every induced complete bipartite subgraph is K11, K12
or K22.  Each such core ``B = (B_X, B_Y)`` is tested for being generating,
i.e. for the existence of an independent set ``S`` with both ``S | B_X``
and ``S | B_Y`` maximal independent.  Every generating core contributes the
restriction ``w(B_X) = w(B_Y)``, and these restrictions cut out WCW(G)
exactly.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional, Sequence

from .graph import Graph, GraphError, distances_from, find_claw
from .linalg import Restriction, WeightSpace, contains, nullspace
from .mwis import max_weight_independent_set


class ClawError(GraphError):
    """The input graph has an induced K_{1,3}."""

    def __init__(self, center: int, leaves: tuple[int, int, int]):
        self.center = center
        self.leaves = leaves
        super().__init__(f"graph is not claw-free: claw at center {center} with leaves {list(leaves)}")


@dataclass(frozen=True)
class BipartiteCore:
    b_x: frozenset[int]
    b_y: frozenset[int]
    shape: str  # "K11" | "K12" | "K22"

    @property
    def vertices(self) -> frozenset[int]:
        return self.b_x | self.b_y

    def as_dict(self) -> dict:
        return {"shape": self.shape, "b_x": sorted(self.b_x), "b_y": sorted(self.b_y)}


@dataclass(frozen=True)
class GeneratingVerdict:
    """Outcome of the generating test for one core.

    ``witness`` is the optimal independent subset of M_2 found by the MWIS
    step; ``completion`` extends it to an independent set ``S`` for which
    ``S | b_x`` and ``S | b_y`` are both maximal (only when generating).
    """

    core: BipartiteCore
    is_generating: bool
    m1: frozenset[int]
    m2: frozenset[int]
    witness: Optional[frozenset[int]] = None
    completion: Optional[frozenset[int]] = field(default=None)


def enumerate_bipartite_cores(g: Graph) -> list[BipartiteCore]:
    """All induced K11, K12 and K22 subgraphs, each once.

    Order: edges, then (center, non-adjacent neighbor pair), then induced
    4-cycles with the diagonal holding the smallest vertex as ``b_x``.
    """
    cores = [BipartiteCore(frozenset([u]), frozenset([v]), "K11") for u, v in g.edges]
    for c in range(g.n):
        for a, b in combinations(sorted(g.adj[c]), 2):
            if not g.has_edge(a, b):
                cores.append(BipartiteCore(frozenset([c]), frozenset([a, b]), "K12"))
    for a, b, c, d in combinations(range(g.n), 4):
        # diagonal pairings of a 4-set: {a,b}|{c,d}, {a,c}|{b,d}, {a,d}|{b,c}
        for x, y in (((a, b), (c, d)), ((a, c), (b, d)), ((a, d), (b, c))):
            if g.has_edge(*x) or g.has_edge(*y):
                continue
            if all(g.has_edge(p, q) for p in x for q in y):
                cores.append(BipartiteCore(frozenset(x), frozenset(y), "K22"))
    return cores


def compute_m1_m2(g: Graph, core: BipartiteCore) -> tuple[frozenset[int], frozenset[int]]:
    """Vertex layers around a core.

    M_1 holds the vertices adjacent to exactly one side (distance 1 from one
    side, 2 from the other); each must be dominated by the witness.  M_2
    holds the witness candidates: vertices outside N[B_X | B_Y] with a
    neighbor in M_1, i.e. layers (2,3), (3,2), and those of layer (2,2)
    that touch M_1.
    """
    dx = distances_from(g, core.b_x)
    dy = distances_from(g, core.b_y)
    m1 = frozenset(v for v in range(g.n) if (dx[v], dy[v]) in ((1, 2), (2, 1)))
    m2 = frozenset(
        v for v in range(g.n)
        if (dx[v], dy[v]) in ((2, 3), (3, 2)) or ((dx[v], dy[v]) == (2, 2) and g.adj[v] & m1)
    )
    return m1, m2


def is_generating(g: Graph, core: BipartiteCore, *, check_claw: bool = True) -> GeneratingVerdict:
    """Decide whether ``core`` is a generating subgraph of claw-free ``g``.

    M_2 vertices are weighted by how many M_1 vertices they see.  Claw-freeness
    means no M_1 vertex has two non-adjacent M_2 neighbors, so an independent
    subset of M_2 weighs exactly the number of M_1 vertices it dominates, and
    the core is generating iff the MWIS of G[M_2] reaches |M_1|.
    """
    if check_claw:
        claw = find_claw(g)
        if claw is not None:
            raise ClawError(*claw)
    m1, m2 = compute_m1_m2(g, core)
    if core.shape == "K22":
        if m1 or m2:
            raise AssertionError(f"K22 core {core} has non-empty M_1/M_2 in a claw-free graph")
        return GeneratingVerdict(core, True, m1, m2, frozenset(), _complete(g, core, frozenset()))
    if not m1:
        return GeneratingVerdict(core, True, m1, m2, frozenset(), _complete(g, core, frozenset()))
    sub, old = g.induced(m2)
    weights = [len(g.adj[v] & m1) for v in old]
    best, value = max_weight_independent_set(sub, weights)
    assert value <= len(m1)
    if value < len(m1):
        return GeneratingVerdict(core, False, m1, m2)
    witness = frozenset(old[i] for i in best)
    return GeneratingVerdict(core, True, m1, m2, witness, _complete(g, core, witness))


def _complete(g: Graph, core: BipartiteCore, s: frozenset[int]) -> frozenset[int]:
    """Greedily extend ``s`` by vertices outside N[B] not adjacent to it."""
    blocked = set(core.vertices)
    for v in core.vertices:
        blocked |= g.adj[v]
    out = set(s)
    for v in range(g.n):
        if v not in blocked and v not in out and not (g.adj[v] & out):
            out.add(v)
    return frozenset(out)


def core_restriction(n: int, core: BipartiteCore, verdict: GeneratingVerdict) -> Restriction:
    coeffs = [0] * n
    for v in core.b_x:
        coeffs[v] += 1
    for v in core.b_y:
        coeffs[v] -= 1
    provenance = core.as_dict()
    provenance["witness"] = sorted(verdict.completion)
    return Restriction(tuple(coeffs), provenance)


def _test_cores(args) -> list[GeneratingVerdict]:
    g, cores = args
    return [is_generating(g, c, check_claw=False) for c in cores]


def generating_verdicts(g: Graph, jobs: int = 1) -> list[GeneratingVerdict]:
    """Run the generating test on every core, in core order."""
    claw = find_claw(g)
    if claw is not None:
        raise ClawError(*claw)
    cores = enumerate_bipartite_cores(g)
    if jobs <= 1 or len(cores) < 2 * jobs:
        return _test_cores((g, cores))
    chunk = -(-len(cores) // jobs)
    batches = [(g, cores[i:i + chunk]) for i in range(0, len(cores), chunk)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return [v for part in pool.map(_test_cores, batches) for v in part]


def wcw_space(g: Graph, jobs: int = 1) -> tuple[WeightSpace, list[Restriction]]:
    """WCW(G) and the restrictions (one per generating core) that define it."""
    restrictions = [core_restriction(g.n, v.core, v) for v in generating_verdicts(g, jobs) if v.is_generating]
    return nullspace(restrictions, g.n), restrictions


def is_w_well_covered(g: Graph, w: Sequence) -> bool:
    space, _ = wcw_space(g)
    return contains(space, w)


def is_well_covered(g: Graph) -> bool:
    return is_w_well_covered(g, [1] * g.n)


def well_covered_certificate(g: Graph) -> Optional[GeneratingVerdict]:
    """A generating core with sides of different size, if one exists.

    Its restriction ``w(B_X) = w(B_Y)`` fails for all-ones weights, so it
    certifies that ``g`` is not well-covered.
    """
    for v in generating_verdicts(g):
        if v.is_generating and len(v.core.b_x) != len(v.core.b_y):
            return v
    return None
