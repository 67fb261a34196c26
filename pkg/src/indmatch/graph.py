"""Immutable simple undirected graphs with stable edge identities.

Edges are numbered 0..m-1 in construction order and keep their ids across
edge removals (a subgraph is the same edge table plus a presence set), so
edge sets computed on different residual graphs can be compared directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence


class GraphError(ValueError):
    """Invalid graph construction or query."""


class EdgeAbsentError(GraphError):
    """An operation referenced an edge that is not present."""


class Graph:
    """Simple undirected graph; vertices 0..n-1, edges indexed by position.

    `present` is the set of surviving edge ids; removal produces a new
    Graph sharing the edge table. Instances are immutable after init.
    """

    __slots__ = ("n", "edges", "present", "adj")

    def __init__(self, n: int, edges: Sequence[tuple[int, int]],
                 present: Optional[frozenset[int]] = None):
        self.n = n
        self.edges = tuple(edges)
        if present is None:
            present = frozenset(range(len(self.edges)))
        self.present = present
        adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for eid in sorted(present):
            u, v = self.edges[eid]
            adj[u].append((v, eid))
            adj[v].append((u, eid))
        self.adj = tuple(tuple(sorted(a)) for a in adj)

    @property
    def m(self) -> int:
        return len(self.present)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def endpoints(self, eid: int) -> tuple[int, int]:
        return self.edges[eid]

    def edge_ids(self) -> list[int]:
        """Present edge ids in increasing order."""
        return sorted(self.present)

    def has_edge_between(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return any(w == v for w, _ in self.adj[u])

    def remove_edges(self, eids: Iterable[int]) -> "Graph":
        """New graph with the given edges removed; ids of survivors unchanged."""
        gone = set(eids)
        absent = gone - self.present
        if absent:
            raise EdgeAbsentError(f"edges not present: {sorted(absent)}")
        return Graph(self.n, self.edges, self.present - gone)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Graph) and self.n == other.n
                and self.edges == other.edges and self.present == other.present)

    def __hash__(self):
        return hash((self.n, self.edges, self.present))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, pairs: Sequence[tuple[int, int]],
                allow_duplicates: bool = False) -> Graph:
    """Build a graph from vertex pairs, canonicalized to u < v.

    Rejects self-loops, out-of-range endpoints and (by default) duplicate
    edges; with `allow_duplicates` duplicates are silently dropped.
    """
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    seen: set[tuple[int, int]] = set()
    edges: list[tuple[int, int]] = []
    for u, v in pairs:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"endpoint out of range in ({u}, {v}) with n={n}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        if u > v:
            u, v = v, u
        if (u, v) in seen:
            if allow_duplicates:
                continue
            raise GraphError(f"duplicate edge ({u}, {v})")
        seen.add((u, v))
        edges.append((u, v))
    return Graph(n, edges)


def conflict_set(G: Graph, eid: int) -> frozenset[int]:
    """Edges within line-graph distance 2 of `eid`, including `eid` itself.

    Equivalently: every present edge with an endpoint in N[x] or N[y],
    where (x, y) are the endpoints of `eid`.
    """
    if eid not in G.present:
        raise EdgeAbsentError(f"edge {eid} not present")
    x, y = G.edges[eid]
    ball = {x, y}
    ball.update(w for w, _ in G.adj[x])
    ball.update(w for w, _ in G.adj[y])
    out: set[int] = set()
    for v in ball:
        for _, f in G.adj[v]:
            out.add(f)
    return frozenset(out)


def conflict_size(G: Graph, eid: int) -> int:
    return len(conflict_set(G, eid))


def private_conflicts(G: Graph, M: Iterable[int], eid: int) -> frozenset[int]:
    """Conflict edges of `eid` claimed by no other edge of the matching M."""
    M = frozenset(M)
    if eid not in M:
        raise GraphError(f"edge {eid} is not in the given matching")
    result = set(conflict_set(G, eid))
    for f in M:
        if f != eid:
            result -= conflict_set(G, f)
    return frozenset(result)


def remove_conflicts(G: Graph, eid: int) -> Graph:
    """Remove the whole conflict set of `eid`; vertex set is unchanged."""
    return G.remove_edges(conflict_set(G, eid))


def is_induced_matching(G: Graph, M: Iterable[int]) -> bool:
    """True iff no two distinct edges of M conflict.

    Edges of M that are absent from G make the answer False.
    """
    M = sorted(set(M))
    for e in M:
        if e not in G.present:
            return False
    for i, e in enumerate(M):
        ce = conflict_set(G, e)
        for f in M[i + 1:]:
            if f in ce:
                return False
    return True


@dataclass(frozen=True)
class DegeneracyResult:
    k: int
    ordering: tuple[int, ...]


def degeneracy(G: Graph) -> DegeneracyResult:
    """Degeneracy and a minimum-degree elimination ordering.

    Ties among minimum-degree vertices break to the smallest index, so
    the ordering is reproducible.
    """
    deg = [G.degree(v) for v in range(G.n)]
    alive = [True] * G.n
    ordering: list[int] = []
    k = 0
    for _ in range(G.n):
        v = min((x for x in range(G.n) if alive[x]), key=lambda x: (deg[x], x))
        k = max(k, deg[v])
        alive[v] = False
        ordering.append(v)
        for w, _ in G.adj[v]:
            if alive[w]:
                deg[w] -= 1
    return DegeneracyResult(k, tuple(ordering))


def regular_degree(G: Graph) -> Optional[int]:
    """The common degree if the graph is regular, else None."""
    if G.n == 0:
        return None
    d = G.degree(0)
    if all(G.degree(v) == d for v in range(G.n)):
        return d
    return None


def is_bipartite(G: Graph) -> bool:
    color = [-1] * G.n
    for s in range(G.n):
        if color[s] != -1:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for w, _ in G.adj[v]:
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    stack.append(w)
                elif color[w] == color[v]:
                    return False
    return True


def _has_cycle_of_length(G: Graph, length: int) -> bool:
    # DFS over simple paths from each start vertex; a start-closing edge at
    # full depth witnesses the cycle. Starts restricted to the path minimum
    # so each cycle is seen from its smallest vertex.
    for s in range(G.n):
        path = [s]
        on_path = [False] * G.n
        on_path[s] = True

        def dfs(v: int) -> bool:
            if len(path) == length:
                return G.has_edge_between(v, s)
            for w, _ in G.adj[v]:
                if w <= s or on_path[w]:
                    continue
                on_path[w] = True
                path.append(w)
                if dfs(w):
                    return True
                path.pop()
                on_path[w] = False
            return False

        if dfs(s):
            return True
    return False


def is_c3c5_free(G: Graph) -> bool:
    """True iff the graph has no 3-cycle and no 5-cycle."""
    if is_bipartite(G):
        return True
    return not (_has_cycle_of_length(G, 3) or _has_cycle_of_length(G, 5))


# --- edge-list text format: "p <n> <m>" header, one "u v" line per edge ---

def format_edge_list(G: Graph) -> str:
    lines = [f"p {G.n} {G.m}"]
    for eid in G.edge_ids():
        u, v = G.edges[eid]
        lines.append(f"{u} {v}")
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    header = None
    pairs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if header is None:
            parts = line.split()
            if len(parts) != 3 or parts[0] != "p":
                raise GraphError(f"line {lineno}: expected 'p <n> <m>' header")
            header = (int(parts[1]), int(parts[2]))
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected '<u> <v>'")
        pairs.append((int(parts[0]), int(parts[1])))
    if header is None:
        raise GraphError("missing 'p <n> <m>' header")
    n, m = header
    if len(pairs) != m:
        raise GraphError(f"header declares {m} edges, found {len(pairs)}")
    return build_graph(n, pairs)


def read_edge_list(path) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def write_edge_list(G: Graph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_edge_list(G))
