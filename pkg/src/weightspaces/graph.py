"""Simple undirected graphs on dense vertex indices, plus the structural
queries the weight-space pipelines need.

Vertices are ``0..n-1``.  Edges are stored as pairs ``(u, v)`` with ``u < v``
in lexicographic order; the position of a pair in that list is its edge
index, which is the coordinate system used for edge-weight vectors.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Sequence

VertexSet = frozenset  # frozenset[int] of vertex indices
Matching = frozenset  # frozenset[int] of edge indices
PathSpec = tuple  # (v1, ..., vk), k >= 3
CycleSpec = tuple  # (v1, ..., vk), k even, closing edge (vk, v1)


class GraphError(ValueError):
    """Raised for malformed graphs, graph files or graph-relative arguments."""


class Graph:
    """Immutable simple graph.

    >>> g = Graph(3, [(1, 0), (1, 2)])
    >>> g.edges
    ((0, 1), (1, 2))
    >>> sorted(g.adj[1])
    [0, 2]
    """

    __slots__ = ("n", "edges", "adj", "_index")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            pair = (u, v) if u < v else (v, u)
            if pair in seen:
                raise GraphError(f"duplicate edge {pair}")
            seen.add(pair)
        ordered = tuple(sorted(seen))
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in ordered:
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", ordered)
        object.__setattr__(self, "adj", tuple(frozenset(a) for a in adj))
        object.__setattr__(self, "_index", {e: i for i, e in enumerate(ordered)})

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __reduce__(self):
        return (Graph, (self.n, self.edges))

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph({self.n}, {list(self.edges)})"

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edge_index(self, u: int, v: int) -> int:
        """Index of edge ``{u, v}``; raises ``GraphError`` if it is absent."""
        try:
            return self._index[(u, v) if u < v else (v, u)]
        except KeyError:
            raise GraphError(f"({u}, {v}) is not an edge") from None

    def neighborhood(self, s: Iterable[int]) -> frozenset[int]:
        """Open neighborhood N(S) = vertices at distance exactly 1 from S."""
        s = set(s)
        out: set[int] = set()
        for v in s:
            out |= self.adj[v]
        return frozenset(out - s)

    def induced(self, keep: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        """Induced subgraph on ``keep``.

        Returns the subgraph (relabelled to ``0..k-1`` in increasing order of
        the original labels) and the tuple mapping new labels to old ones.
        """
        old = tuple(sorted(set(keep)))
        new_of = {v: i for i, v in enumerate(old)}
        sub_edges = [(new_of[u], new_of[v]) for u, v in self.edges if u in new_of and v in new_of]
        return Graph(len(old), sub_edges), old


def parse_graph(text: str) -> Graph:
    """Parse the ``n m`` header + ``u v`` edge-line format.

    Blank lines and lines starting with ``#`` are ignored.
    """
    header: Optional[tuple[int, int]] = None
    edges: list[tuple[int, int]] = []
    seen: dict[tuple[int, int], int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            a, b = (int(p) for p in parts)
        except ValueError:
            raise GraphError(f"line {lineno}: expected two integers, got {raw!r}") from None
        if header is None:
            if a < 0 or b < 0:
                raise GraphError(f"line {lineno}: negative count in header {raw!r}")
            header = (a, b)
            continue
        n = header[0]
        if not (0 <= a < n and 0 <= b < n):
            raise GraphError(f"line {lineno}: vertex index out of range 0..{n - 1} in {raw!r}")
        if a == b:
            raise GraphError(f"line {lineno}: self-loop at vertex {a}")
        pair = (min(a, b), max(a, b))
        if pair in seen:
            raise GraphError(f"line {lineno}: duplicate edge {pair} (first on line {seen[pair]})")
        seen[pair] = lineno
        edges.append(pair)
    if header is None:
        raise GraphError("missing 'n m' header line")
    if len(edges) != header[1]:
        raise GraphError(f"header announces {header[1]} edges but {len(edges)} were given")
    return Graph(header[0], edges)


def format_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def distances_from(g: Graph, s: Iterable[int]) -> list[Optional[int]]:
    """Multi-source BFS; ``None`` marks vertices unreachable from ``s``."""
    dist: list[Optional[int]] = [None] * g.n
    queue = deque()
    for v in s:
        if dist[v] is None:
            dist[v] = 0
            queue.append(v)
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if dist[w] is None:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def distance_layer(g: Graph, s: Iterable[int], i: int) -> frozenset[int]:
    """N_i(S): the vertices at distance exactly ``i`` from ``S``."""
    s = frozenset(s)
    if not s:
        raise GraphError("distance to the empty set is undefined")
    if i < 1:
        raise GraphError(f"layer index must be >= 1, got {i}")
    _check_vertices(g, s)
    dist = distances_from(g, s)
    return frozenset(v for v, d in enumerate(dist) if d == i)


def find_claw(g: Graph) -> Optional[tuple[int, tuple[int, int, int]]]:
    """First induced K_{1,3} as ``(center, (a, b, c))``, or ``None``."""
    for c in range(g.n):
        nbrs = sorted(g.adj[c])
        if len(nbrs) < 3:
            continue
        for a, b, d in combinations(nbrs, 3):
            if not (g.has_edge(a, b) or g.has_edge(a, d) or g.has_edge(b, d)):
                return c, (a, b, d)
    return None


def is_claw_free(g: Graph) -> bool:
    return find_claw(g) is None


def enumerate_p3(g: Graph) -> list[tuple[int, int, int]]:
    """All (not necessarily induced) P3 subgraphs as ``(v1, v2, v3)``, center
    ``v2``, ``v1 < v3``."""
    out = []
    for center in range(g.n):
        for a, b in combinations(sorted(g.adj[center]), 2):
            out.append((a, center, b))
    out.sort()
    return out


def enumerate_c4(g: Graph) -> list[CycleSpec]:
    """All (not necessarily induced) 4-cycles, each once.

    Canonical rotation: starts at its smallest vertex, second vertex smaller
    than the last one.
    """
    out = []
    for a, b, c, d in combinations(range(g.n), 4):
        # the three distinct cyclic orders of a 4-set starting at its minimum
        for cyc in ((a, b, c, d), (a, b, d, c), (a, c, b, d)):
            if all(g.has_edge(cyc[i], cyc[(i + 1) % 4]) for i in range(4)):
                out.append(cyc)
    out.sort()
    return out


def nonadjacent_pairs(g: Graph) -> list[tuple[int, int]]:
    return [(u, v) for u, v in combinations(range(g.n), 2) if not g.has_edge(u, v)]


@dataclass(frozen=True)
class LineGraphMap:
    """Line graph L(G) with vertex ``i`` standing for edge ``i`` of G."""

    graph: Graph
    edge_of_vertex: tuple[tuple[int, int], ...]

    def vertex_of_edge(self, u: int, v: int) -> int:
        return self.edge_of_vertex.index((min(u, v), max(u, v)))


def line_graph(g: Graph) -> LineGraphMap:
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(g.edges):
        incident[u].append(i)
        incident[v].append(i)
    pairs = set()
    for inc in incident:
        pairs.update(combinations(inc, 2))
    return LineGraphMap(Graph(g.m, pairs), g.edges)


def is_independent(g: Graph, s: Iterable[int]) -> bool:
    s = set(s)
    return all(not (g.adj[v] & s) for v in s)


def is_maximal_independent(g: Graph, s: Iterable[int]) -> bool:
    """Independent and every outside vertex has a neighbor in ``s``."""
    s = set(s)
    _check_vertices(g, s)
    if not is_independent(g, s):
        return False
    return all(v in s or g.adj[v] & s for v in range(g.n))


def is_matching(g: Graph, m: Iterable[int]) -> bool:
    covered: set[int] = set()
    for i in m:
        if not 0 <= i < g.m:
            raise GraphError(f"edge index {i} out of range")
        u, v = g.edges[i]
        if u in covered or v in covered:
            return False
        covered.update((u, v))
    return True


def is_maximal_matching(g: Graph, m: Iterable[int]) -> bool:
    """A matching such that every edge has an endpoint covered by it."""
    m = set(m)
    if not is_matching(g, m):
        return False
    covered = matched_vertices(g, m)
    return all(u in covered or v in covered for u, v in g.edges)


def matched_vertices(g: Graph, m: Iterable[int]) -> set[int]:
    out: set[int] = set()
    for i in m:
        out.update(g.edges[i])
    return out


def check_path(g: Graph, p: Sequence[int]) -> PathSpec:
    p = tuple(p)
    if len(p) < 3:
        raise GraphError(f"path needs at least 3 vertices, got {p}")
    _check_vertices(g, p)
    if len(set(p)) != len(p):
        raise GraphError(f"path {p} repeats a vertex")
    for a, b in zip(p, p[1:]):
        if not g.has_edge(a, b):
            raise GraphError(f"path {p} uses non-edge ({a}, {b})")
    return p


def check_cycle(g: Graph, c: Sequence[int]) -> CycleSpec:
    c = tuple(c)
    if len(c) < 4 or len(c) % 2:
        raise GraphError(f"expected an even cycle of length >= 4, got {c}")
    check_path(g, c)
    if not g.has_edge(c[-1], c[0]):
        raise GraphError(f"cycle {c} is not closed: ({c[-1]}, {c[0]}) is not an edge")
    return c


def _check_vertices(g: Graph, vs: Iterable[int]) -> None:
    for v in vs:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range 0..{g.n - 1}")


# Common families, handy for fixtures and the CLI.

def path_graph(k: int) -> Graph:
    return Graph(k, [(i, i + 1) for i in range(k - 1)])


def cycle_graph(k: int) -> Graph:
    return Graph(k, [(i, (i + 1) % k) for i in range(k)])


def complete_graph(k: int) -> Graph:
    return Graph(k, combinations(range(k), 2))


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])
