"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
summary lines.
"""

import json
import random
import time
from fractions import Fraction

from indmatch import (
    approx_bip_detail,
    build_graph,
    conflict_set,
    conflict_size,
    degenerate_greedy,
    exact_induced_matching,
    find_cheap_edge,
    gen_bipartite_regular,
    gen_k_degenerate,
    greedy_f,
    greedy_strong_coloring,
    is_induced_matching,
    lemma_threshold,
    local_search,
    named_instance,
    remove_conflicts,
    run_benchmark,
    theorem1_ratio_bound,
    verify_lemma2_residual,
)
from indmatch.harness import benchmark_json, ceil_frac

from conftest import exhaustive_max_induced_matching, random_bounded_degree


def report(num, message):
    print(f"ACCEPTANCE {num}: PASS — {message}")


def small_fixture_set():
    graphs = []
    for n in range(2, 8):
        graphs.append((f"path({n})", named_instance(f"path({n})")))
    for n in range(3, 9):
        graphs.append((f"cycle({n})", named_instance(f"cycle({n})")))
    for d in range(1, 7):
        graphs.append((f"star({d})", named_instance(f"star({d})")))
    graphs.append(("K4", named_instance("complete(4)")))
    graphs.append(("K33", named_instance("complete_bipartite(3,3)")))
    graphs.append(("Q3", named_instance("hypercube(3)")))
    rng = random.Random(2024)
    for i in range(12):
        graphs.append((f"random-{i}",
                       random_bounded_degree(7, 3, rng, target_edges=10)))
    return graphs


def test_criterion_1_oracle_equivalence():
    t0 = time.perf_counter()
    fixtures = small_fixture_set()
    assert len(fixtures) >= 30
    for name, g in fixtures:
        assert g.m <= 12, name
        opt, _ = exhaustive_max_induced_matching(g)
        res = exact_induced_matching(g)
        assert not res.budget_exhausted
        assert res.optimum == opt, name
        assert is_induced_matching(g, res.witness)
    elapsed = time.perf_counter() - t0
    assert elapsed < 10
    report(1, f"{len(fixtures)} fixtures, oracle == enumeration ({elapsed:.1f}s)")


def test_criterion_2_removal_invariance():
    t0 = time.perf_counter()
    rng = random.Random(101)
    trials = 0
    while trials < 200:
        g = random_bounded_degree(rng.randint(4, 9), rng.randint(2, 4), rng)
        if g.m == 0:
            continue
        trials += 1
        original = {e: conflict_set(g, e) for e in g.edge_ids()}
        h = g
        chosen = []
        while h.present:
            e = rng.choice(h.edge_ids())
            chosen.append(e)
            h = remove_conflicts(h, e)
            for a in h.edge_ids():
                ca = conflict_set(h, a)
                for b in h.edge_ids():
                    assert (b in ca) == (b in original[a])
        assert is_induced_matching(g, chosen)
    elapsed = time.perf_counter() - t0
    assert elapsed < 30
    report(2, f"200 removal-sequence trials ({elapsed:.1f}s)")


def test_criterion_3_trivial_greedy_bound():
    t0 = time.perf_counter()
    rng = random.Random(202)
    for i in range(100):
        d = (3, 4, 5)[i % 3]
        g = random_bounded_degree(rng.randint(6, 14), d, rng)
        f = 2 * d * d - 2 * d + 1
        M, trace = greedy_f(g, f)
        assert trace.residual.m == 0
        assert len(M) >= ceil_frac(Fraction(g.m, f))
        assert is_induced_matching(g, M)
    elapsed = time.perf_counter() - t0
    assert elapsed < 60
    report(3, f"100 graphs, greedy(2d^2-2d+1) empties and meets m/f ({elapsed:.1f}s)")


def test_criterion_4_degenerate_suite():
    t0 = time.perf_counter()
    rng = random.Random(303)
    for i in range(100):
        k = (1, 2, 3)[i % 3]
        d = rng.randint(k + 1, 6)
        g = gen_k_degenerate(rng.randint(6, 16), k, d, seed=i)
        T = lemma_threshold(k, d)
        M = degenerate_greedy(g, k, d)
        assert len(M) >= ceil_frac(Fraction(g.m, T))
        assert is_induced_matching(g, M)
        if g.m > 0:
            e = find_cheap_edge(g, k, d)
            assert conflict_size(g, e) <= T
    elapsed = time.perf_counter() - t0
    assert elapsed < 60
    report(4, f"100 degenerate instances, residual empty + Lemma-4 edge ({elapsed:.1f}s)")


def harvest_suite_5():
    d = 3
    out = []
    for i in range(100):
        n_side = 4 + i % 13  # 4..16
        g = gen_bipartite_regular(n_side, d, seed=1000 + i)
        M1, M2, trace, rep = approx_bip_detail(g, d)
        out.append((g, M1 | M2, trace.residual, M2))
    return out


def test_criterion_5_and_6_approx_bip_suite():
    t0 = time.perf_counter()
    d = 3
    ratio_cap = theorem1_ratio_bound(d)
    harvested = harvest_suite_5()
    checked_ratio = 0
    lemma2_checked = 0
    for g, union, residual, M2 in harvested:
        assert is_induced_matching(g, union)
        assert len(union) >= ceil_frac(Fraction(12 * g.m, 17 * d * d))
        if g.m <= 40:
            res = exact_induced_matching(g)
            assert not res.budget_exhausted
            assert Fraction(res.optimum, len(union)) <= ratio_cap
            checked_ratio += 1
        # criterion 6: private-conflict cap on qualifying residuals
        checks = verify_lemma2_residual(residual, d, M2)
        if not checks[0].skipped:
            assert checks[0].passed
            if residual.m > 0:
                lemma2_checked += 1
    elapsed = time.perf_counter() - t0
    assert elapsed < 300
    assert checked_ratio > 0
    report(5, f"100 bipartite 3-regular instances, {checked_ratio} ratio checks "
              f"<= {float(ratio_cap)} ({elapsed:.1f}s)")
    report(6, f"Lemma-2 private-conflict cap held on every qualifying residual "
              f"({lemma2_checked} nonempty)")


def test_criterion_7_strong_coloring():
    t0 = time.perf_counter()
    rng = random.Random(404)
    for i in range(100):
        d = (3, 4, 5)[i % 3]
        g = random_bounded_degree(rng.randint(6, 14), d, rng)
        dm = g.max_degree()
        coloring = greedy_strong_coloring(g)
        if dm:
            assert coloring.num_colors <= 2 * dm * dm - 2 * dm + 1
        classes = coloring.classes()
        assert sum(len(c) for c in classes) == g.m
        assert frozenset().union(*classes, frozenset()) == g.present
        for c in classes:
            assert is_induced_matching(g, c)
    elapsed = time.perf_counter() - t0
    assert elapsed < 30
    report(7, f"100 graphs, coloring within 2d^2-2d+1 with induced classes ({elapsed:.1f}s)")


def test_criterion_8_known_values():
    expected = {
        "cycle(5)": 1,
        "path(4)": 1,
        "hypercube(3)": 2,
        "complete_bipartite(3,3)": 1,
        "petersen": 3,
    }
    t0 = time.perf_counter()
    for name, value in expected.items():
        assert exact_induced_matching(named_instance(name)).optimum == value, name
    elapsed = time.perf_counter() - t0
    assert elapsed < 5
    report(8, f"frozen optima for {', '.join(expected)} ({elapsed:.1f}s)")


def test_criterion_9_determinism():
    manifest = (
        [{"family": "bipartite-regular", "n_side": s, "d": 3, "seed": s}
         for s in range(4, 9)]
        + [{"family": "k-degenerate", "n": 10, "k": 2, "d": 4, "seed": s}
           for s in range(3)]
        + [{"family": "named", "name": n}
           for n in ("hypercube(3)", "petersen", "heawood")]
    )

    def run_bytes():
        reports, errors = run_benchmark(manifest)
        return json.dumps(benchmark_json(reports, errors),
                          sort_keys=True).encode()

    first = run_bytes()
    second = run_bytes()
    assert first == second
    report(9, f"repeated benchmark runs byte-identical ({len(first)} bytes)")
