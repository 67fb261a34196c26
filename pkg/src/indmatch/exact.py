"""Exact maximum induced matching via branch and bound.

Edges are bits of an integer mask; the search branches on including or
excluding one edge at a time, treating the problem as maximum independent
set in the conflict graph of the edges.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError, conflict_set, regular_degree


@dataclass(frozen=True)
class ExactResult:
    optimum: int
    witness: frozenset[int]
    nodes_explored: int
    budget_exhausted: bool


def upper_bound_regular(m: int, d: int) -> int:
    """floor(m / (2d - 1)): each matching edge claims 2d-1 distinct edges
    of a d-regular graph."""
    if d <= 0:
        raise GraphError(f"degree must be positive, got {d}")
    return m // (2 * d - 1)


class _Budget(Exception):
    pass


def exact_induced_matching(G: Graph, node_budget: int = 10_000_000) -> ExactResult:
    """Maximum induced matching, exact when the node budget suffices.

    Branching picks the available edge conflicting with the most other
    available edges (fail first). Bounds: a maximal-matching clique cover
    of the remaining edges, plus m/(2d-1) as a global cap on regular
    inputs. On budget exhaustion the best matching found so far is
    returned with `budget_exhausted` set.
    """
    if node_budget < 1:
        raise GraphError(f"node budget must be >= 1, got {node_budget}")
    eids = G.edge_ids()
    if not eids:
        return ExactResult(0, frozenset(), 0, False)
    pos = {e: i for i, e in enumerate(eids)}
    nbits = len(eids)

    cmask = [0] * nbits
    imask = [0] * nbits  # edges sharing a vertex (cliques in the conflict graph)
    for e in eids:
        i = pos[e]
        for f in conflict_set(G, e):
            cmask[i] |= 1 << pos[f]
        u, v = G.endpoints(e)
        for _, f in G.adj[u]:
            imask[i] |= 1 << pos[f]
        for _, f in G.adj[v]:
            imask[i] |= 1 << pos[f]

    d = regular_degree(G)
    cap = upper_bound_regular(G.m, d) if d else nbits

    def clique_cover_bound(avail: int) -> int:
        cnt = 0
        while avail:
            low = avail & -avail
            avail &= ~imask[low.bit_length() - 1]
            cnt += 1
        return cnt

    # Seed the incumbent with a cheap greedy maximal matching so early
    # branches already prune.
    best = 0
    best_mask = 0
    avail = (1 << nbits) - 1
    while avail:
        i = min((j for j in range(nbits) if avail >> j & 1),
                key=lambda j: bin(cmask[j] & avail).count("1"))
        best_mask |= 1 << i
        best += 1
        avail &= ~cmask[i]

    nodes = 0
    exhausted = False

    def rec(avail: int, chosen: int, size: int) -> None:
        nonlocal best, best_mask, nodes
        nodes += 1
        if nodes > node_budget:
            raise _Budget
        if avail == 0:
            if size > best:
                best, best_mask = size, chosen
            return
        if size + min(clique_cover_bound(avail), cap - size) <= best:
            return
        # pivot: most-conflicting available edge, smallest index on ties
        pivot, pivot_deg = -1, -1
        a = avail
        while a:
            low = a & -a
            j = low.bit_length() - 1
            deg = bin(cmask[j] & avail).count("1")
            if deg > pivot_deg:
                pivot, pivot_deg = j, deg
            a &= a - 1
        rec(avail & ~cmask[pivot], chosen | (1 << pivot), size + 1)
        rec(avail & ~(1 << pivot), chosen, size)

    try:
        rec((1 << nbits) - 1, 0, 0)
    except _Budget:
        exhausted = True

    witness = frozenset(eids[i] for i in range(nbits) if best_mask >> i & 1)
    return ExactResult(best, witness, nodes, exhausted)
