"""Greedy and local-search induced matching algorithms.

All threshold comparisons are exact rational comparisons (`fractions.Fraction`);
the loop guard "conflict size <= threshold" is a correctness boundary and must
not go through floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .graph import (
    Graph,
    GraphError,
    conflict_set,
    degeneracy,
    is_c3c5_free,
    regular_degree,
)

Threshold = Union[int, Fraction]


class PreconditionError(GraphError):
    """A caller-supplied hypothesis (k < d, degree cap, ...) does not hold."""


class InternalInvariantError(AssertionError):
    """A guaranteed algorithm property failed; indicates an implementation bug."""


@dataclass(frozen=True)
class GreedyStep:
    chosen: int
    removed: frozenset[int]
    conflict_size: int


@dataclass(frozen=True)
class GreedyTrace:
    steps: tuple[GreedyStep, ...]
    residual: Graph


def greedy_f(G: Graph, f: Threshold) -> tuple[frozenset[int], GreedyTrace]:
    """Repeatedly pick a cheapest edge while its conflict size is <= f.

    Each pick removes the picked edge's whole conflict set from the working
    graph; the picks form an induced matching of G. Ties break to the
    smallest edge id, so the run is deterministic.
    """
    f = Fraction(f)
    g = G
    chosen: list[int] = []
    steps: list[GreedyStep] = []
    while g.present:
        best_c, best_e = None, None
        for e in g.edge_ids():
            c = len(conflict_set(g, e))
            if best_c is None or c < best_c:
                best_c, best_e = c, e
        if best_c > f:
            break
        removed = conflict_set(g, best_e)
        chosen.append(best_e)
        steps.append(GreedyStep(best_e, removed, best_c))
        g = g.remove_edges(removed)
    return frozenset(chosen), GreedyTrace(tuple(steps), g)


def local_search(G: Graph) -> frozenset[int]:
    """Grow an induced matching by single additions and 1-for-2 swaps.

    Starting from the empty matching: add any edge that keeps the matching
    induced; otherwise try to trade one matching edge for two non-matching
    edges. Stops at a fixpoint of both rules. Scan order is smallest edge
    id first, restarting after every successful move.
    """
    eids = G.edge_ids()
    C = {e: conflict_set(G, e) for e in eids}
    M: set[int] = set()

    def add_free_edges() -> None:
        changed = True
        while changed:
            changed = False
            for e in eids:
                if e in M:
                    continue
                if all(e not in C[f] for f in M):
                    M.add(e)
                    changed = True

    add_free_edges()
    while True:
        swapped = False
        for e in sorted(M):
            rest = M - {e}
            # Any usable pair must avoid every conflict with M other than e,
            # so candidates are exactly the edges private to e.
            cand = [g for g in eids
                    if g not in M and all(g not in C[f] for f in rest)]
            for i, e1 in enumerate(cand):
                for e2 in cand[i + 1:]:
                    if e2 not in C[e1]:
                        M.discard(e)
                        M.add(e1)
                        M.add(e2)
                        swapped = True
                        break
                if swapped:
                    break
            if swapped:
                break
        if not swapped:
            break
        add_free_edges()
    return frozenset(M)


def approx_bip_detail(G: Graph, d: int) -> tuple[
        frozenset[int], frozenset[int], GreedyTrace, dict]:
    """As `approx_bip` but also returns the two phases and the greedy trace."""
    if d <= 0:
        raise PreconditionError(f"degree parameter must be positive, got {d}")
    f = Fraction(17 * d * d, 12)
    M, trace = greedy_f(G, f)
    M2 = local_search(trace.residual)
    report = {
        "greedy_size": len(M),
        "local_search_size": len(M2),
        "residual_edges": trace.residual.m,
        "threshold": f"{f.numerator}/{f.denominator}",
        "preconditions": {
            "regular": regular_degree(G) == d,
            "c3c5_free": is_c3c5_free(G),
            "d_ok": d >= 3 and G.max_degree() <= d,
        },
    }
    return M, M2, trace, report


def approx_bip(G: Graph, d: int) -> tuple[frozenset[int], dict]:
    """Greedy with threshold 17*d^2/12, then local search on the residual.

    The size guarantee (at least 12m/(17 d^2)) holds when the graph has no
    3- or 5-cycle, maximum degree at most d, and d >= 3; the report flags
    state which of these actually held for the input.
    """
    M, M2, _, report = approx_bip_detail(G, d)
    return M | M2, report


def lemma_threshold(k: int, d: int) -> int:
    """Conflict-size threshold (3k-1)d - k(k+1) + 1 for k-degenerate graphs."""
    return (3 * k - 1) * d - k * (k + 1) + 1


def find_cheap_edge(G: Graph, k: int, d: int) -> int:
    """An edge whose conflict size is at most (3k-1)d - k(k+1) + 1.

    Requires a nonempty graph of degeneracy <= k and maximum degree <= d
    with k < d. Returns the globally cheapest edge, which meets the bound
    a fortiori.
    """
    if not G.present:
        raise GraphError("empty graph has no edges")
    if k >= d:
        raise PreconditionError(f"requires k < d, got k={k}, d={d}")
    if G.max_degree() > d:
        raise PreconditionError(f"maximum degree {G.max_degree()} exceeds d={d}")
    actual_k = degeneracy(G).k
    if actual_k > k:
        raise PreconditionError(f"degeneracy {actual_k} exceeds k={k}")
    best = min(G.edge_ids(), key=lambda e: (len(conflict_set(G, e)), e))
    c = len(conflict_set(G, best))
    bound = lemma_threshold(k, d)
    if c > bound:
        raise InternalInvariantError(
            f"cheapest edge has conflict size {c} > {bound}")
    return best


def degenerate_greedy(G: Graph, k: int, d: int, *,
                      enforce: bool = True) -> frozenset[int]:
    """Greedy with the degenerate-graph threshold; consumes every edge.

    With k >= degeneracy and max degree <= d and k < d, every residual
    subgraph keeps a cheap edge, so the run only stops once the graph is
    edgeless and the matching has at least m / ((3k-1)d - k(k+1) + 1)
    edges. `enforce=False` skips the hypothesis checks and the residual
    assertion (heuristic mode, no guarantee).
    """
    if enforce:
        if k >= d:
            raise PreconditionError(f"requires k < d, got k={k}, d={d}")
        if G.max_degree() > d:
            raise PreconditionError(
                f"maximum degree {G.max_degree()} exceeds d={d}")
        actual_k = degeneracy(G).k
        if actual_k > k:
            raise PreconditionError(f"degeneracy {actual_k} exceeds k={k}")
    M, trace = greedy_f(G, lemma_threshold(k, d))
    if enforce and trace.residual.m != 0:
        raise InternalInvariantError(
            f"residual still has {trace.residual.m} edges")
    return M


@dataclass(frozen=True)
class StrongColoring:
    """Edge coloring in which every color class is an induced matching."""
    color: dict[int, int]

    @property
    def num_colors(self) -> int:
        return max(self.color.values(), default=-1) + 1

    def classes(self) -> list[frozenset[int]]:
        out: list[set[int]] = [set() for _ in range(self.num_colors)]
        for e, c in self.color.items():
            out[c].add(e)
        return [frozenset(s) for s in out]


def greedy_strong_coloring(G: Graph) -> StrongColoring:
    """First-fit coloring over edge ids: smallest color absent from the
    conflict set. Uses at most 2d^2 - 2d + 1 colors for max degree d."""
    color: dict[int, int] = {}
    for e in G.edge_ids():
        used = {color[f] for f in conflict_set(G, e) if f in color}
        c = 0
        while c in used:
            c += 1
        color[e] = c
    return StrongColoring(color)
