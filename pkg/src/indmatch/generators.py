"""Seeded instance generators and named fixture graphs.

Everything is a pure function of its parameters and seed: the PRNG is
CPython's Mersenne Twister (`random.Random`), which is platform-stable,
and retry attempts derive fresh sub-seeds from (seed, attempt).
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from random import Random
from typing import Optional

from .graph import Graph, GraphError, build_graph

MAX_ATTEMPTS = 1000

_SEED_MIX = 0x9E3779B97F4A7C15


class GenerationError(GraphError):
    """Generation failed (bad parameters or rejection attempts exhausted)."""


def _rng(seed: int, attempt: int) -> Random:
    return Random(((seed * _SEED_MIX) ^ attempt) & 0xFFFFFFFFFFFFFFFF)


def gen_random_regular(n: int, d: int, seed: int) -> Graph:
    """Random d-regular simple graph via stub pairing with rejection."""
    if d < 0 or d >= n:
        raise GenerationError(f"need 0 <= d < n, got d={d}, n={n}")
    if (n * d) % 2 != 0:
        raise GenerationError(f"n*d must be even, got n={n}, d={d}")
    for attempt in range(MAX_ATTEMPTS):
        rng = _rng(seed, attempt)
        stubs = [v for v in range(n) for _ in range(d)]
        rng.shuffle(stubs)
        pairs = set()
        ok = True
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v:
                ok = False
                break
            if u > v:
                u, v = v, u
            if (u, v) in pairs:
                ok = False
                break
            pairs.add((u, v))
        if ok:
            return build_graph(n, sorted(pairs))
    raise GenerationError(
        f"no simple {d}-regular pairing found in {MAX_ATTEMPTS} attempts")


def gen_bipartite_regular(n_side: int, d: int, seed: int) -> Graph:
    """Union of d random perfect matchings between two n_side-sets.

    Left vertices are 0..n_side-1, right vertices n_side..2*n_side-1.
    Structurally valid (d-regular, bipartite) but not uniform over all
    d-regular bipartite graphs.
    """
    if d < 0 or d > n_side:
        raise GenerationError(f"need 0 <= d <= n_side, got d={d}, n_side={n_side}")
    for attempt in range(MAX_ATTEMPTS):
        rng = _rng(seed, attempt)
        pairs: set[tuple[int, int]] = set()
        ok = True
        for _ in range(d):
            perm = list(range(n_side))
            rng.shuffle(perm)
            for i in range(n_side):
                edge = (i, n_side + perm[i])
                if edge in pairs:
                    ok = False
                    break
                pairs.add(edge)
            if not ok:
                break
        if ok:
            return build_graph(2 * n_side, sorted(pairs))
    raise GenerationError(
        f"no simple union of {d} matchings found in {MAX_ATTEMPTS} attempts")


def gen_k_degenerate(n: int, k: int, d: int, seed: int) -> Graph:
    """Incremental graph: each new vertex attaches to at most k earlier
    vertices of current degree below d. Degeneracy <= k, max degree <= d."""
    if not (1 <= k < d):
        raise GenerationError(f"need 1 <= k < d, got k={k}, d={d}")
    rng = _rng(seed, 0)
    deg = [0] * n
    pairs: list[tuple[int, int]] = []
    for v in range(1, n):
        eligible = [u for u in range(v) if deg[u] < d]
        take = min(k, len(eligible), d)
        for u in sorted(rng.sample(eligible, take)):
            pairs.append((u, v))
            deg[u] += 1
            deg[v] += 1
    return build_graph(n, pairs)


def _hypercube(dim: int) -> Graph:
    n = 1 << dim
    pairs = [(v, v | (1 << b)) for v in range(n) for b in range(dim)
             if not v >> b & 1]
    return build_graph(n, sorted(pairs))


def _petersen() -> Graph:
    pairs = [(i, (i + 1) % 5) for i in range(5)]                  # outer C5
    pairs += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]         # inner star
    pairs += [(i, 5 + i) for i in range(5)]                       # spokes
    return build_graph(10, pairs)


def _heawood() -> Graph:
    # 14-cycle plus a chord i -- i+5 from every even vertex.
    pairs = [(i, (i + 1) % 14) for i in range(14)]
    pairs += [(i, (i + 5) % 14) for i in range(0, 14, 2)]
    return build_graph(14, pairs)


_NAME_RE = re.compile(r"^([a-z_0-9]+)(?:\(([0-9, ]*)\))?$")


def named_instance(name: str) -> Graph:
    """Canonical fixture graphs by name, e.g. 'cycle(5)', 'petersen'."""
    m = _NAME_RE.match(name.strip().lower())
    if not m:
        raise GenerationError(f"unparseable instance name {name!r}")
    base = m.group(1)
    args = [int(x) for x in m.group(2).split(",")] if m.group(2) else []
    if base == "path" and len(args) == 1:
        n = args[0]
        return build_graph(n, [(i, i + 1) for i in range(n - 1)])
    if base == "cycle" and len(args) == 1:
        n = args[0]
        if n < 3:
            raise GenerationError("cycle needs n >= 3")
        return build_graph(n, [(i, (i + 1) % n) for i in range(n)])
    if base == "star" and len(args) == 1:
        d = args[0]
        return build_graph(d + 1, [(0, i) for i in range(1, d + 1)])
    if base == "complete" and len(args) == 1:
        n = args[0]
        return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
    if base == "complete_bipartite" and len(args) == 2:
        a, b = args
        return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])
    if base == "hypercube" and len(args) == 1:
        return _hypercube(args[0])
    if base == "petersen" and not args:
        return _petersen()
    if base == "heawood" and not args:
        return _heawood()
    raise GenerationError(f"unknown instance name {name!r}")


@dataclass(frozen=True)
class GenSpec:
    """Serializable description of one generated instance."""
    family: str  # regular | bipartite-regular | k-degenerate | named
    n: Optional[int] = None
    n_side: Optional[int] = None
    d: Optional[int] = None
    k: Optional[int] = None
    name: Optional[str] = None
    seed: int = 0
    id: Optional[str] = None

    def label(self) -> str:
        if self.id:
            return self.id
        if self.family == "named":
            return str(self.name)
        parts = [self.family]
        for key in ("n", "n_side", "d", "k"):
            val = getattr(self, key)
            if val is not None:
                parts.append(f"{key}{val}")
        parts.append(f"s{self.seed}")
        return "-".join(parts)

    def build(self) -> Graph:
        if self.family == "regular":
            return gen_random_regular(self.n, self.d, self.seed)
        if self.family == "bipartite-regular":
            return gen_bipartite_regular(self.n_side, self.d, self.seed)
        if self.family == "k-degenerate":
            return gen_k_degenerate(self.n, self.k, self.d, self.seed)
        if self.family == "named":
            return named_instance(self.name)
        raise GenerationError(f"unknown family {self.family!r}")

    def to_json(self) -> dict:
        out = {"family": self.family, "seed": self.seed}
        for key in ("n", "n_side", "d", "k", "name", "id"):
            val = getattr(self, key)
            if val is not None:
                out[key] = val
        return out

    @classmethod
    def from_json(cls, data: dict) -> "GenSpec":
        known = {"family", "n", "n_side", "d", "k", "name", "seed", "id"}
        extra = set(data) - known
        if extra:
            raise GenerationError(f"unknown GenSpec fields: {sorted(extra)}")
        return cls(**{k: data[k] for k in data})


def dump_manifest(specs: list[GenSpec]) -> str:
    return json.dumps([s.to_json() for s in specs], indent=2) + "\n"
