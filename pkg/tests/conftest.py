"""Shared independent oracles for the test suite.

These deliberately follow the definitions directly (line-graph distances,
subset enumeration) rather than reusing the library's faster paths, so
they can serve as ground truth.
"""

from __future__ import annotations

import random
from itertools import combinations

from indmatch import Graph, build_graph


def conflict_oracle(G: Graph, e: int) -> frozenset:
    """f is in conflict with e iff f == e, they share a vertex, or some
    present edge joins an endpoint of f to an endpoint of e."""
    def share(a, b):
        return bool(set(G.edges[a]) & set(G.edges[b]))

    out = set()
    present = G.edge_ids()
    for f in present:
        if f == e or share(e, f):
            out.add(f)
            continue
        for g in present:
            if share(g, e) and share(g, f):
                out.add(f)
                break
    return frozenset(out)


def induced_matching_oracle(G: Graph, M) -> bool:
    """Independence in the explicitly-built square of the line graph."""
    M = sorted(M)
    if any(e not in G.present for e in M):
        return False
    for a, b in combinations(M, 2):
        if b in conflict_oracle(G, a):
            return False
    return True


def exhaustive_max_induced_matching(G: Graph) -> tuple[int, frozenset]:
    """Best induced matching by enumerating all edge subsets (small m only)."""
    eids = G.edge_ids()
    masks = {}
    pos = {e: i for i, e in enumerate(eids)}
    for e in eids:
        mask = 0
        for f in conflict_oracle(G, e):
            mask |= 1 << pos[f]
        masks[e] = mask
    best, best_set = 0, frozenset()
    for sub in range(1 << len(eids)):
        size = bin(sub).count("1")
        if size <= best:
            continue
        ok = True
        for i, e in enumerate(eids):
            if sub >> i & 1 and masks[e] & sub != 1 << i:
                ok = False
                break
        if ok:
            best, best_set = size, frozenset(e for i, e in enumerate(eids)
                                             if sub >> i & 1)
    return best, best_set


def random_bounded_degree(n: int, d: int, rng: random.Random,
                          target_edges=None) -> Graph:
    """Random simple graph with max degree at most d."""
    if target_edges is None:
        target_edges = n * d // 2
    deg = [0] * n
    pairs = set()
    for _ in range(4 * target_edges):
        if len(pairs) >= target_edges:
            break
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u == v:
            continue
        if u > v:
            u, v = v, u
        if (u, v) in pairs or deg[u] >= d or deg[v] >= d:
            continue
        pairs.add((u, v))
        deg[u] += 1
        deg[v] += 1
    return build_graph(n, sorted(pairs))


def girth(G: Graph) -> int:
    """Length of a shortest cycle, or 0 if the graph is a forest (BFS)."""
    best = 0
    for s in range(G.n):
        dist = {s: 0}
        parent_edge = {s: None}
        queue = [s]
        while queue:
            nxt = []
            for v in queue:
                for w, eid in G.adj[v]:
                    if eid == parent_edge[v]:
                        continue
                    if w in dist:
                        cyc = dist[v] + dist[w] + 1
                        if best == 0 or cyc < best:
                            best = cyc
                    else:
                        dist[w] = dist[v] + 1
                        parent_edge[w] = eid
                        nxt.append(w)
            queue = nxt
    return best
