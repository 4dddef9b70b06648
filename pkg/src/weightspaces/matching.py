"""Maximum-weight matching in general graphs, and greedy maximal completion.

The solver is Edmonds' primal-dual blossom algorithm in the O(n^3) form
(Gabow/Galil bookkeeping of least-slack edges per vertex and per blossom).
Weights are non-negative integers; dual variables are kept at twice their
nominal value so every quantity stays integral.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .graph import Graph, GraphError, Matching, is_matching, matched_vertices


def max_weight_matching(g: Graph, weights: Sequence[int]) -> Matching:
    """A matching of ``g`` with maximum total weight.

    ``weights[i]`` belongs to edge ``i``.  Zero-weight edges are never used,
    so the result need not be a maximal matching.

    >>> from weightspaces.graph import path_graph
    >>> sorted(max_weight_matching(path_graph(4), [1, 3, 1]))
    [1]
    """
    if len(weights) != g.m:
        raise GraphError(f"{len(weights)} weights for {g.m} edges")
    for i, wt in enumerate(weights):
        if wt < 0:
            raise ValueError(f"negative weight {wt} on edge {g.edges[i]}")
        if int(wt) != wt:
            raise ValueError(f"non-integer weight {wt} on edge {g.edges[i]}")
    weighted = [(u, v, int(w)) for (u, v), w in zip(g.edges, weights) if w > 0]
    mate = _BlossomSolver(g.n, weighted).solve()
    return frozenset(g.edge_index(v, mate[v]) for v in range(g.n) if mate[v] > v)


def matching_weight(m: Iterable[int], weights: Sequence[int]) -> int:
    return sum(weights[i] for i in m)


def extend_to_maximal(g: Graph, m: Iterable[int]) -> Matching:
    """Greedy completion of ``m`` over the canonical edge order."""
    m = set(m)
    if not is_matching(g, m):
        raise GraphError(f"edge set {sorted(m)} is not a matching")
    covered = matched_vertices(g, m)
    for i, (u, v) in enumerate(g.edges):
        if u not in covered and v not in covered:
            m.add(i)
            covered.update((u, v))
    return frozenset(m)


class _BlossomSolver:
    """Scratch state for one maximum-weight matching computation.

    Vertices are ``0..n-1``; blossoms get ids ``n..2n-1``.  An edge ``k``
    has endpoints ``2k`` and ``2k+1``; ``endpoint[p]`` is the vertex at
    endpoint ``p`` and ``p ^ 1`` is the opposite endpoint.
    Labels: 0 free, 1 = S (outer), 2 = T (inner); 5 marks breadcrumbs
    while scanning for a blossom base.
    """

    def __init__(self, n: int, edges: list[tuple[int, int, int]]):
        self.n = n
        self.edges = edges
        nedge = len(edges)
        self.endpoint = [edges[p // 2][p % 2] for p in range(2 * nedge)]
        self.neighbend: list[list[int]] = [[] for _ in range(n)]
        for k, (i, j, _) in enumerate(edges):
            self.neighbend[i].append(2 * k + 1)
            self.neighbend[j].append(2 * k)
        maxweight = max((w for _, _, w in edges), default=0)
        self.mate = [-1] * n  # remote endpoint of the matched edge, or -1
        self.label = [0] * (2 * n)
        self.labelend = [-1] * (2 * n)
        self.inblossom = list(range(n))
        self.blossomparent = [-1] * (2 * n)
        self.blossomchilds: list = [None] * (2 * n)
        self.blossombase = list(range(n)) + [-1] * n
        self.blossomendps: list = [None] * (2 * n)
        self.bestedge = [-1] * (2 * n)
        self.blossombestedges: list = [None] * (2 * n)
        self.unusedblossoms = list(range(n, 2 * n))
        self.dualvar = [maxweight] * n + [0] * n
        self.allowedge = [False] * nedge
        self.queue: list[int] = []

    def slack(self, k: int) -> int:
        i, j, wt = self.edges[k]
        return self.dualvar[i] + self.dualvar[j] - 2 * wt

    def leaves(self, b: int):
        if b < self.n:
            yield b
        else:
            for t in self.blossomchilds[b]:
                if t < self.n:
                    yield t
                else:
                    yield from self.leaves(t)

    def assign_label(self, w: int, t: int, p: int) -> None:
        b = self.inblossom[w]
        assert self.label[w] == 0 and self.label[b] == 0
        self.label[w] = self.label[b] = t
        self.labelend[w] = self.labelend[b] = p
        self.bestedge[w] = self.bestedge[b] = -1
        if t == 1:
            self.queue.extend(self.leaves(b))
        elif t == 2:
            base = self.blossombase[b]
            assert self.mate[base] >= 0
            self.assign_label(self.endpoint[self.mate[base]], 1, self.mate[base] ^ 1)

    def scan_blossom(self, v: int, w: int) -> int:
        """Trace back from ``v`` and ``w``; return the base of a new blossom,
        or -1 when the two trees are distinct (augmenting path)."""
        label, labelend, endpoint, inblossom = self.label, self.labelend, self.endpoint, self.inblossom
        path = []
        base = -1
        while v != -1 or w != -1:
            b = inblossom[v]
            if label[b] & 4:
                base = self.blossombase[b]
                break
            assert label[b] == 1
            path.append(b)
            label[b] = 5
            if labelend[b] == -1:
                v = -1
            else:
                v = endpoint[labelend[b]]
                b = inblossom[v]
                assert label[b] == 2
                v = endpoint[labelend[b]]
            if w != -1:
                v, w = w, v
        for b in path:
            label[b] = 1
        return base

    def add_blossom(self, base: int, k: int) -> None:
        v, w, _ = self.edges[k]
        inblossom, labelend, endpoint = self.inblossom, self.labelend, self.endpoint
        bb = inblossom[base]
        bv = inblossom[v]
        bw = inblossom[w]
        b = self.unusedblossoms.pop()
        self.blossombase[b] = base
        self.blossomparent[b] = -1
        self.blossomparent[bb] = b
        path: list[int] = []
        endps: list[int] = []
        self.blossomchilds[b] = path
        self.blossomendps[b] = endps
        while bv != bb:
            self.blossomparent[bv] = b
            path.append(bv)
            endps.append(labelend[bv])
            v = endpoint[labelend[bv]]
            bv = inblossom[v]
        path.append(bb)
        path.reverse()
        endps.reverse()
        endps.append(2 * k)
        while bw != bb:
            self.blossomparent[bw] = b
            path.append(bw)
            endps.append(labelend[bw] ^ 1)
            w = endpoint[labelend[bw]]
            bw = inblossom[w]
        assert self.label[bb] == 1
        self.label[b] = 1
        labelend[b] = labelend[bb]
        self.dualvar[b] = 0
        for leaf in self.leaves(b):
            if self.label[inblossom[leaf]] == 2:
                # former T-vertices become S-vertices and must be scanned
                self.queue.append(leaf)
            inblossom[leaf] = b
        bestedgeto = [-1] * (2 * self.n)
        for sub in path:
            if self.blossombestedges[sub] is None:
                nblists = [[p // 2 for p in self.neighbend[leaf]] for leaf in self.leaves(sub)]
            else:
                nblists = [self.blossombestedges[sub]]
            for nblist in nblists:
                for kk in nblist:
                    i, j, _ = self.edges[kk]
                    if inblossom[j] == b:
                        i, j = j, i
                    bj = inblossom[j]
                    if (bj != b and self.label[bj] == 1
                            and (bestedgeto[bj] == -1 or self.slack(kk) < self.slack(bestedgeto[bj]))):
                        bestedgeto[bj] = kk
            self.blossombestedges[sub] = None
            self.bestedge[sub] = -1
        self.blossombestedges[b] = [kk for kk in bestedgeto if kk != -1]
        self.bestedge[b] = -1
        for kk in self.blossombestedges[b]:
            if self.bestedge[b] == -1 or self.slack(kk) < self.slack(self.bestedge[b]):
                self.bestedge[b] = kk

    def expand_blossom(self, b: int, endstage: bool) -> None:
        n = self.n
        label, labelend, endpoint, inblossom = self.label, self.labelend, self.endpoint, self.inblossom
        for s in self.blossomchilds[b]:
            self.blossomparent[s] = -1
            if s < n:
                inblossom[s] = s
            elif endstage and self.dualvar[s] == 0:
                self.expand_blossom(s, endstage)
            else:
                for leaf in self.leaves(s):
                    inblossom[leaf] = s
        if not endstage and label[b] == 2:
            # Relabel the sub-blossoms on the even-length path from the
            # entry child to the base as T/S; the rest become free.
            childs = self.blossomchilds[b]
            endps = self.blossomendps[b]
            entrychild = inblossom[endpoint[labelend[b] ^ 1]]
            j = childs.index(entrychild)
            if j & 1:
                j -= len(childs)
                jstep = 1
                endptrick = 0
            else:
                jstep = -1
                endptrick = 1
            p = labelend[b]
            while j != 0:
                label[endpoint[p ^ 1]] = 0
                label[endpoint[endps[j - endptrick] ^ endptrick ^ 1]] = 0
                self.assign_label(endpoint[p ^ 1], 2, p)
                self.allowedge[endps[j - endptrick] // 2] = True
                j += jstep
                p = endps[j - endptrick] ^ endptrick
                self.allowedge[p // 2] = True
                j += jstep
            bv = childs[j]
            label[endpoint[p ^ 1]] = label[bv] = 2
            labelend[endpoint[p ^ 1]] = labelend[bv] = p
            self.bestedge[bv] = -1
            j += jstep
            while childs[j] != entrychild:
                bv = childs[j]
                if label[bv] == 1:
                    j += jstep
                    continue
                reached = -1
                for leaf in self.leaves(bv):
                    if label[leaf] != 0:
                        reached = leaf
                        break
                if reached >= 0:
                    assert label[reached] == 2
                    assert inblossom[reached] == bv
                    label[reached] = 0
                    label[endpoint[self.mate[self.blossombase[bv]]]] = 0
                    self.assign_label(reached, 2, labelend[reached])
                j += jstep
        label[b] = labelend[b] = -1
        self.blossomchilds[b] = self.blossomendps[b] = None
        self.blossombase[b] = -1
        self.blossombestedges[b] = None
        self.bestedge[b] = -1
        self.unusedblossoms.append(b)

    def augment_blossom(self, b: int, v: int) -> None:
        """Swap matched/unmatched edges inside ``b`` so that ``v`` becomes its base."""
        n, endpoint = self.n, self.endpoint
        t = v
        while self.blossomparent[t] != b:
            t = self.blossomparent[t]
        if t >= n:
            self.augment_blossom(t, v)
        childs = self.blossomchilds[b]
        endps = self.blossomendps[b]
        i = j = childs.index(t)
        if i & 1:
            j -= len(childs)
            jstep = 1
            endptrick = 0
        else:
            jstep = -1
            endptrick = 1
        while j != 0:
            j += jstep
            t = childs[j]
            p = endps[j - endptrick] ^ endptrick
            if t >= n:
                self.augment_blossom(t, endpoint[p])
            j += jstep
            t = childs[j]
            if t >= n:
                self.augment_blossom(t, endpoint[p ^ 1])
            self.mate[endpoint[p]] = p ^ 1
            self.mate[endpoint[p ^ 1]] = p
        self.blossomchilds[b] = childs[i:] + childs[:i]
        self.blossomendps[b] = endps[i:] + endps[:i]
        self.blossombase[b] = self.blossombase[self.blossomchilds[b][0]]
        assert self.blossombase[b] == v

    def augment_matching(self, k: int) -> None:
        v, w, _ = self.edges[k]
        endpoint, inblossom, labelend = self.endpoint, self.inblossom, self.labelend
        for s, p in ((v, 2 * k + 1), (w, 2 * k)):
            while True:
                bs = inblossom[s]
                assert self.label[bs] == 1
                if bs >= self.n:
                    self.augment_blossom(bs, s)
                self.mate[s] = p
                if labelend[bs] == -1:
                    break  # reached a single (free) vertex
                t = endpoint[labelend[bs]]
                bt = inblossom[t]
                assert self.label[bt] == 2
                s = endpoint[labelend[bt]]
                j = endpoint[labelend[bt] ^ 1]
                assert self.blossombase[bt] == t
                if bt >= self.n:
                    self.augment_blossom(bt, j)
                self.mate[j] = labelend[bt]
                p = labelend[bt] ^ 1

    def solve(self) -> list[int]:
        """Run the stages; returns ``mate`` as vertex -> partner (or -1)."""
        n = self.n
        if not self.edges:
            return [-1] * n
        label, inblossom, dualvar = self.label, self.inblossom, self.dualvar
        for _ in range(n):
            label[:] = [0] * (2 * n)
            self.bestedge[:] = [-1] * (2 * n)
            self.blossombestedges[n:] = [None] * n
            self.allowedge[:] = [False] * len(self.edges)
            self.queue[:] = []
            for v in range(n):
                if self.mate[v] == -1 and label[inblossom[v]] == 0:
                    self.assign_label(v, 1, -1)
            augmented = False
            while True:
                while self.queue and not augmented:
                    v = self.queue.pop()
                    assert label[inblossom[v]] == 1
                    for p in self.neighbend[v]:
                        k = p // 2
                        w = self.endpoint[p]
                        if inblossom[v] == inblossom[w]:
                            continue
                        if not self.allowedge[k]:
                            kslack = self.slack(k)
                            if kslack <= 0:
                                self.allowedge[k] = True
                        if self.allowedge[k]:
                            if label[inblossom[w]] == 0:
                                self.assign_label(w, 2, p ^ 1)
                            elif label[inblossom[w]] == 1:
                                base = self.scan_blossom(v, w)
                                if base >= 0:
                                    self.add_blossom(base, k)
                                else:
                                    self.augment_matching(k)
                                    augmented = True
                                    break
                            elif label[w] == 0:
                                # w inside a T-blossom, first reached here
                                label[w] = 2
                                self.labelend[w] = p ^ 1
                        elif label[inblossom[w]] == 1:
                            b = inblossom[v]
                            if self.bestedge[b] == -1 or kslack < self.slack(self.bestedge[b]):
                                self.bestedge[b] = k
                        elif label[w] == 0:
                            if self.bestedge[w] == -1 or kslack < self.slack(self.bestedge[w]):
                                self.bestedge[w] = k
                if augmented:
                    break

                # Dual adjustment: pick the smallest of the four delta types.
                deltatype = 1
                delta = min(dualvar[:n])
                deltaedge = deltablossom = -1
                for v in range(n):
                    if label[inblossom[v]] == 0 and self.bestedge[v] != -1:
                        d = self.slack(self.bestedge[v])
                        if d < delta:
                            delta, deltatype, deltaedge = d, 2, self.bestedge[v]
                for b in range(2 * n):
                    if self.blossomparent[b] == -1 and label[b] == 1 and self.bestedge[b] != -1:
                        kslack = self.slack(self.bestedge[b])
                        assert kslack % 2 == 0
                        d = kslack // 2
                        if d < delta:
                            delta, deltatype, deltaedge = d, 3, self.bestedge[b]
                for b in range(n, 2 * n):
                    if (self.blossombase[b] >= 0 and self.blossomparent[b] == -1
                            and label[b] == 2 and dualvar[b] < delta):
                        delta, deltatype, deltablossom = dualvar[b], 4, b

                for v in range(n):
                    lab = label[inblossom[v]]
                    if lab == 1:
                        dualvar[v] -= delta
                    elif lab == 2:
                        dualvar[v] += delta
                for b in range(n, 2 * n):
                    if self.blossombase[b] >= 0 and self.blossomparent[b] == -1:
                        if label[b] == 1:
                            dualvar[b] += delta
                        elif label[b] == 2:
                            dualvar[b] -= delta

                if deltatype == 1:
                    break  # optimum reached
                elif deltatype == 2:
                    self.allowedge[deltaedge] = True
                    i, j, _ = self.edges[deltaedge]
                    if label[inblossom[i]] == 0:
                        i, j = j, i
                    assert label[inblossom[i]] == 1
                    self.queue.append(i)
                elif deltatype == 3:
                    self.allowedge[deltaedge] = True
                    i, j, _ = self.edges[deltaedge]
                    assert label[inblossom[i]] == 1
                    self.queue.append(i)
                else:
                    self.expand_blossom(deltablossom, False)
            if not augmented:
                break
            # end of stage: expand S-blossoms whose dual dropped to zero
            for b in range(n, 2 * n):
                if (self.blossomparent[b] == -1 and self.blossombase[b] >= 0
                        and label[b] == 1 and dualvar[b] == 0):
                    self.expand_blossom(b, True)
        return [self.endpoint[p] if p >= 0 else -1 for p in self.mate]
