"""Exit criteria: exhaustive and seeded-random oracle equivalence.

Every check is exact (rational arithmetic), so every tolerance is "100% of
the corpus".
"""

import random
import time
from fractions import Fraction
from itertools import combinations

import pytest

from weightspaces.corpus import all_labeled_graphs, random_graphs
from weightspaces.evs import evs_space, is_equimatchable
from weightspaces.graph import Graph, complete_graph, cycle_graph, find_claw, is_independent, line_graph, path_graph
from weightspaces.linalg import contains, nullspace, subspace_equal
from weightspaces.matching import max_weight_matching
from weightspaces.mwis import max_weight_independent_set
from weightspaces.oracle import (
    HereditarySystem, is_equimatchable_oracle, is_well_covered_oracle, maximal_feasible_sets,
    oracle_evs, oracle_wcw, whs_witness,
)
from weightspaces.wcw import is_well_covered, wcw_space

pytestmark = pytest.mark.slow

TIME_LIMIT = 600.0  # seconds, single-threaded, per sweep


def _evs_corpus():
    return list(all_labeled_graphs(5)) + random_graphs(500, (6, 7), seed=20240601)


def test_criterion_1_wcw_oracle_equivalence(record_criterion):
    start = time.perf_counter()
    checked = failures = 0
    for g in all_labeled_graphs(6):
        if find_claw(g) is not None:
            continue
        checked += 1
        if not subspace_equal(wcw_space(g)[0], oracle_wcw(g)):
            failures += 1
    elapsed = time.perf_counter() - start
    ok = failures == 0 and checked > 0 and elapsed < TIME_LIMIT
    record_criterion("1 WCW == oracle on all claw-free labeled 6-vertex graphs", ok,
                     f"{checked - failures}/{checked} match, {elapsed:.0f}s")
    assert failures == 0
    assert elapsed < TIME_LIMIT


def test_criterion_2_evs_oracle_equivalence(record_criterion):
    start = time.perf_counter()
    corpus = _evs_corpus()
    assert len(corpus) == 1024 + 500
    failures = sum(not subspace_equal(evs_space(g)[0], oracle_evs(g)) for g in corpus)
    elapsed = time.perf_counter() - start
    ok = failures == 0 and elapsed < TIME_LIMIT
    record_criterion("2 EVS == oracle on 1024 graphs (n=5) + 500 seeded graphs (n in {6,7})", ok,
                     f"{len(corpus) - failures}/{len(corpus)} match, {elapsed:.0f}s")
    assert failures == 0
    assert elapsed < TIME_LIMIT


def test_criterion_3_line_graph_identity(record_criterion):
    checked = failures = 0
    for n in range(1, 7):
        for g in all_labeled_graphs(n):
            if g.m > 8:
                continue
            checked += 1
            lg = line_graph(g)
            if not subspace_equal(evs_space(g)[0], wcw_space(lg.graph)[0]):
                failures += 1
    record_criterion("3 EVS(G) == WCW(L(G)) for all graphs with n <= 6, m <= 8", failures == 0,
                     f"{checked - failures}/{checked} match")
    assert failures == 0


def test_criterion_4_fixtures(record_criterion):
    results = {}
    p3 = wcw_space(path_graph(3))[0]
    results["WCW(P3)"] = p3.dimension == 2 and subspace_equal(p3, nullspace([(1, -1, 1)], 3))
    c4 = wcw_space(cycle_graph(4))[0]
    results["WCW(C4)"] = c4.dimension == 3 and subspace_equal(c4, nullspace([(1, -1, 1, -1)], 4))
    c5 = wcw_space(cycle_graph(5))[0]
    results["WCW(C5)"] = c5.dimension == 1 and contains(c5, [1] * 5)
    # P4 edges: (0,1), (1,2), (2,3)
    p4 = evs_space(path_graph(4))[0]
    results["EVS(P4)"] = p4.dimension == 2 and subspace_equal(p4, nullspace([(1, -1, 1)], 3))
    results["EVS(K4)"] = evs_space(complete_graph(4))[0].dimension == 4
    ks = range(3, 10)
    wc = {k for k in ks if is_well_covered(cycle_graph(k))}
    wc_oracle = {k for k in ks if is_well_covered_oracle(cycle_graph(k))}
    results["well-covered cycles"] = wc == wc_oracle == {3, 4, 5, 7}
    eq = {k for k in ks if is_equimatchable(cycle_graph(k))}
    eq_oracle = {k for k in ks if is_equimatchable_oracle(cycle_graph(k))}
    results["equimatchable cycles"] = eq == eq_oracle == {3, 4, 5, 7}
    # the fixed spaces also agree with the oracle
    for name, g, space in (("P3", path_graph(3), p3), ("C4", cycle_graph(4), c4), ("C5", cycle_graph(5), c5)):
        results[f"oracle WCW({name})"] = subspace_equal(space, oracle_wcw(g))
    results["oracle EVS(P4)"] = subspace_equal(p4, oracle_evs(path_graph(4)))
    ok = all(results.values())
    record_criterion("4 fixtures (P3, C4, C5, P4, K4, cycles k<=9)", ok,
                     ", ".join(k for k, v in results.items() if not v) or "all fixtures hold")
    assert results == {k: True for k in results}


def _random_system(rng: random.Random) -> HereditarySystem:
    size = rng.randint(1, 7)
    gens = [frozenset(x for x in range(size) if rng.random() < 0.5) for _ in range(rng.randint(1, 5))]
    return HereditarySystem.downward_closure(size, gens)


def _random_weights(rng: random.Random, size: int):
    mode = rng.random()
    if mode < 0.3:
        c = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
        return [c] * size
    if mode < 0.5:
        return [Fraction(rng.choice([1, 2]), 1) for _ in range(size)]
    return [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(size)]


def test_criterion_5_weighted_hereditary_witness(record_criterion):
    rng = random.Random(7)
    failures = 0
    greedy_count = 0
    for _ in range(1200):
        h = _random_system(rng)
        w = _random_weights(rng, h.size)

        def feasible(s):
            return any(s <= gen for gen in h.generators) or not s

        ground = range(h.size)
        maximal = [frozenset(s) for r in range(h.size + 1) for s in combinations(ground, r)
                   if feasible(frozenset(s)) and all(x in s or not feasible(frozenset(s) | {x}) for x in ground)]
        weights = {sum((w[x] for x in s), Fraction(0)) for s in maximal}
        greedy = len(weights) <= 1
        greedy_count += greedy
        if set(maximal_feasible_sets(h)) != set(maximal):
            failures += 1
            continue
        pair = whs_witness(h, w)
        if greedy:
            failures += pair is not None
            continue
        if pair is None:
            failures += 1
            continue
        f1, f2 = pair
        good = (f1 in maximal and f2 in maximal
                and sum((w[x] for x in f1), Fraction(0)) != sum((w[x] for x in f2), Fraction(0))
                and all(not feasible((f1 & f2) | {a, b}) for a in f1 - f2 for b in f2 - f1))
        failures += not good
    ok = failures == 0 and 0 < greedy_count < 1200
    record_criterion("5 weighted hereditary-system witnesses on 1200 seeded systems", ok,
                     f"{1200 - failures}/1200 correct ({greedy_count} greedy)")
    assert failures == 0
    assert 0 < greedy_count < 1200


def _brute_matching_weight(g: Graph, w) -> int:
    weight_of = {e: w[i] for i, e in enumerate(g.edges)}

    def best(free: frozenset) -> int:
        if not free:
            return 0
        v = min(free)
        rest = free - {v}
        out = best(rest)
        for u in g.adj[v] & rest:
            out = max(out, weight_of[(min(u, v), max(u, v))] + best(rest - {u}))
        return out

    return best(frozenset(range(g.n)))


def test_criterion_6_solver_validation(record_criterion):
    rng = random.Random(11)
    matching_fail = 0
    for _ in range(200):
        n = rng.randint(1, 10)
        p = rng.random()
        g = Graph(n, [e for e in combinations(range(n), 2) if rng.random() < p])
        w = [rng.randint(0, 20) for _ in g.edges]
        m = max_weight_matching(g, w)
        ends = [x for i in m for x in g.edges[i]]
        if len(ends) != len(set(ends)) or sum(w[i] for i in m) != _brute_matching_weight(g, w):
            matching_fail += 1
    mwis_fail = 0
    for _ in range(200):
        n = rng.randint(1, 12)
        p = rng.random()
        g = Graph(n, [e for e in combinations(range(n), 2) if rng.random() < p])
        w = [rng.randint(0, 20) for _ in range(n)]
        s, value = max_weight_independent_set(g, w)
        best = max(sum(w[v] for v in range(n) if mask >> v & 1) for mask in range(1 << n)
                   if all(not (mask >> a & 1 and mask >> b & 1) for a, b in g.edges))
        if not is_independent(g, s) or value != best or sum(w[v] for v in s) != value:
            mwis_fail += 1
    record_criterion("6 blossom vs brute force (n<=10, 200 runs); MWIS vs brute force (n<=12, 200 runs)",
                     matching_fail == 0 and mwis_fail == 0,
                     f"matching {200 - matching_fail}/200, mwis {200 - mwis_fail}/200")
    assert matching_fail == 0
    assert mwis_fail == 0


def test_criterion_7_recognition_consistency(record_criterion):
    corpus = _evs_corpus()
    failures = 0
    for g in corpus:
        space = evs_space(g)[0]
        if not (is_equimatchable(g) == contains(space, [1] * g.m) == is_equimatchable_oracle(g)):
            failures += 1
    record_criterion("7 equimatchable recognition == all-ones in EVS == oracle", failures == 0,
                     f"{len(corpus) - failures}/{len(corpus)} consistent")
    assert failures == 0
