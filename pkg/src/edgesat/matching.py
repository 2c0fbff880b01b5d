"""Matching numbers of vertex-weighted graphs.

A matching of a weighted graph is an edge multiset in which every vertex
appears at most its weight many times; nu is the maximum size of one.
The canonical algorithm blows each vertex up into weight-many clones and
runs Edmonds' maximum-cardinality matching on the resulting simple graph.
An exhaustive edge-multiset search (`nu_bruteforce`) is kept as an
independent cross-check, and `has_augmenting_walk` decides maximality
directly via the weighted version of Berge's theorem.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping

from .graphs import SimpleGraph


@dataclass(frozen=True)
class WeightedGraph:
    """Graph on an arbitrary finite vertex set with positive integer weights."""

    vertices: tuple[int, ...]
    weights: tuple[int, ...]
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if list(self.vertices) != sorted(set(self.vertices)):
            raise ValueError("vertices must be sorted and distinct")
        if len(self.weights) != len(self.vertices):
            raise ValueError("one weight per vertex required")
        if any(w < 1 for w in self.weights):
            raise ValueError("weights must be positive")
        vs = set(self.vertices)
        for u, v in self.edges:
            if u >= v or u not in vs or v not in vs:
                raise ValueError(f"bad edge ({u},{v})")

    @classmethod
    def build(cls, weights: Mapping[int, int], edges: Iterable[tuple[int, int]]) -> "WeightedGraph":
        verts = tuple(sorted(weights))
        norm = frozenset((u, v) if u < v else (v, u) for u, v in edges)
        return cls(verts, tuple(weights[v] for v in verts), norm)

    @classmethod
    def from_exponents(cls, g: SimpleGraph, a: Iterable[int]) -> "WeightedGraph":
        """The weighted graph of a monomial: induced subgraph on the support
        of the exponent vector, vertex i carrying weight a_i."""
        a = tuple(a)
        if len(a) != g.n:
            raise ValueError(f"exponent vector has length {len(a)}, expected {g.n}")
        if any(x < 0 for x in a):
            raise ValueError("exponents must be non-negative")
        support = tuple(v for v in range(1, g.n + 1) if a[v - 1] > 0)
        sup = set(support)
        edges = frozenset(e for e in g.edges if e[0] in sup and e[1] in sup)
        return cls(support, tuple(a[v - 1] for v in support), edges)

    @cached_property
    def weight_map(self) -> dict[int, int]:
        return dict(zip(self.vertices, self.weights))

    @cached_property
    def adjacency(self) -> dict[int, frozenset[int]]:
        nbrs: dict[int, set[int]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return {v: frozenset(s) for v, s in nbrs.items()}

    @cached_property
    def total_weight(self) -> int:
        return sum(self.weights)

    @cached_property
    def cache_key(self) -> tuple:
        """Canonical key after relabelling the vertices to 0..k-1."""
        idx = {v: i for i, v in enumerate(self.vertices)}
        k = len(self.vertices)
        bits = 0
        for u, v in self.edges:
            bits |= 1 << (idx[u] * k + idx[v])
        return (self.weights, bits)

    def weighted_degree(self, v: int) -> int:
        """Sum of the weights of the neighbours of v."""
        return sum(self.weight_map[u] for u in self.adjacency[v])

    def minus(self, drop: Iterable[int]) -> "WeightedGraph":
        """Induced weighted subgraph on the vertices not in `drop`."""
        gone = set(drop)
        keep = tuple(v for v in self.vertices if v not in gone)
        ks = set(keep)
        return WeightedGraph(
            keep,
            tuple(w for v, w in zip(self.vertices, self.weights) if v in ks),
            frozenset(e for e in self.edges if e[0] in ks and e[1] in ks),
        )

    def components(self) -> list["WeightedGraph"]:
        seen: set[int] = set()
        out = []
        for v in self.vertices:
            if v in seen:
                continue
            comp = {v}
            q = deque([v])
            while q:
                x = q.popleft()
                for y in self.adjacency[x]:
                    if y not in comp:
                        comp.add(y)
                        q.append(y)
            seen |= comp
            out.append(self.minus(set(self.vertices) - comp))
        return out


@dataclass(frozen=True)
class Matching:
    """Edge multiset with per-vertex usage at most the vertex weight."""

    edges: tuple[tuple[int, int], ...]

    @classmethod
    def of(cls, pairs: Iterable[tuple[int, int]]) -> "Matching":
        return cls(tuple(sorted((u, v) if u < v else (v, u) for u, v in pairs)))

    def __len__(self) -> int:
        return len(self.edges)

    @cached_property
    def usage(self) -> dict[int, int]:
        c: Counter[int] = Counter()
        for u, v in self.edges:
            c[u] += 1
            c[v] += 1
        return dict(c)


def validate_matching(h: WeightedGraph, m: Matching) -> None:
    for e in m.edges:
        if e not in h.edges:
            raise ValueError(f"matching uses non-edge {e}")
    for v, c in m.usage.items():
        if c > h.weight_map[v]:
            raise ValueError(f"vertex {v} used {c} times, weight {h.weight_map[v]}")


# ---------------------------------------------------------------------------
# Edmonds' blossom algorithm on the clone blow-up


def _max_matching_simple(n: int, adj: list[list[int]]) -> list[int]:
    """Maximum-cardinality matching of a simple graph; mate array, -1 if free."""
    match = [-1] * n
    for v in range(n):  # greedy seed
        if match[v] == -1:
            for u in adj[v]:
                if match[u] == -1:
                    match[v] = u
                    match[u] = v
                    break

    def mark_path(base: list[int], p: list[int], blossom: list[bool], v: int, b: int, child: int) -> None:
        while base[v] != b:
            blossom[base[v]] = True
            blossom[base[match[v]]] = True
            p[v] = child
            child = match[v]
            v = p[match[v]]

    def lca(base: list[int], p: list[int], a: int, b: int) -> int:
        used = [False] * n
        x = a
        while True:
            x = base[x]
            used[x] = True
            if match[x] == -1:
                break
            x = p[match[x]]
        y = b
        while True:
            y = base[y]
            if used[y]:
                return y
            y = p[match[y]]

    for root in range(n):
        if match[root] != -1:
            continue
        p = [-1] * n
        base = list(range(n))
        used = [False] * n
        used[root] = True
        q = deque([root])
        augmented = False
        while q and not augmented:
            v = q.popleft()
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and p[match[to]] != -1):
                    curbase = lca(base, p, v, to)
                    blossom = [False] * n
                    mark_path(base, p, blossom, v, curbase, to)
                    mark_path(base, p, blossom, to, curbase, v)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = curbase
                            if not used[i]:
                                used[i] = True
                                q.append(i)
                elif p[to] == -1:
                    p[to] = v
                    if match[to] == -1:
                        u = to
                        while u != -1:
                            pv = p[u]
                            ppv = match[pv]
                            match[u] = pv
                            match[pv] = u
                            u = ppv
                        augmented = True
                        break
                    used[match[to]] = True
                    q.append(match[to])
    return match


def _blowup(h: WeightedGraph) -> tuple[int, list[list[int]], list[int]]:
    clone_of: list[int] = []
    start: dict[int, int] = {}
    for v, w in zip(h.vertices, h.weights):
        start[v] = len(clone_of)
        clone_of.extend([v] * w)
    size = len(clone_of)
    adj: list[list[int]] = [[] for _ in range(size)]
    wm = h.weight_map
    for u, v in sorted(h.edges):
        for i in range(start[u], start[u] + wm[u]):
            for j in range(start[v], start[v] + wm[v]):
                adj[i].append(j)
                adj[j].append(i)
    return size, adj, clone_of


def maximum_matching(h: WeightedGraph) -> Matching:
    """A maximum matching of h, in canonical (sorted multiset) order."""
    size, adj, clone_of = _blowup(h)
    mate = _max_matching_simple(size, adj)
    pairs = [
        (clone_of[i], clone_of[mate[i]]) for i in range(size) if mate[i] > i
    ]
    return Matching.of(pairs)


_NU_CACHE: dict[tuple, int] = {}


def nu(h: WeightedGraph) -> int:
    """The matching number nu(H)."""
    key = h.cache_key
    val = _NU_CACHE.get(key)
    if val is None:
        val = len(maximum_matching(h))
        _NU_CACHE[key] = val
    return val


def nu_minus(h: WeightedGraph, drop: Iterable[int]) -> int:
    """nu(H - N): matching number after removing a vertex set."""
    return nu(h.minus(drop))


def nu_bruteforce(h: WeightedGraph, cutoff: int = 14) -> int:
    """Exhaustive maximum over edge multisets respecting vertex capacities.

    Independent of the blow-up route; refuses inputs with total weight
    above `cutoff`.
    """
    if h.total_weight > cutoff:
        raise ValueError(
            f"total weight {h.total_weight} exceeds brute-force cutoff {cutoff}"
        )
    edges = sorted(h.edges)
    verts = h.vertices
    index = {v: i for i, v in enumerate(verts)}
    memo: dict[tuple[int, tuple[int, ...]], int] = {}

    def best(i: int, caps: tuple[int, ...]) -> int:
        if i == len(edges):
            return 0
        key = (i, caps)
        hit = memo.get(key)
        if hit is not None:
            return hit
        res = best(i + 1, caps)
        u, v = edges[i]
        ui, vi = index[u], index[v]
        top = min(caps[ui], caps[vi])
        for c in range(1, top + 1):
            nxt = list(caps)
            nxt[ui] -= c
            nxt[vi] -= c
            res = max(res, c + best(i + 1, tuple(nxt)))
        memo[key] = res
        return res

    return best(0, h.weights)


def has_augmenting_walk(h: WeightedGraph, m: Matching) -> bool:
    """Weighted Berge test: does m admit an augmenting walk?

    A walk qualifies when its first and last vertices are unmatched
    (usage below weight), no vertex appears in the walk more often than
    its weight, and it has oddly many edges with the even-position edges
    drawn from m (as a multiset).  A closed walk returns to its start, so
    there the start vertex needs two spare capacity units: with only one,
    swapping the walk's edges would overload it and the walk does not
    certify a larger matching.
    """
    validate_matching(h, m)
    verts = h.vertices
    index = {v: i for i, v in enumerate(verts)}
    weights = h.weights
    used0 = m.usage
    unmatched = [v for v in verts if used0.get(v, 0) < h.weight_map[v]]
    if not unmatched:
        return False
    adj = h.adjacency
    seen: set[tuple] = set()
    start = -1

    def dfs(v: int, parity: int, usage: tuple[int, ...], slots: tuple[tuple[int, int], ...]) -> bool:
        # parity = number of edges taken so far, mod 2
        if parity == 1:
            spare = h.weight_map[v] - used0.get(v, 0)
            if spare >= (2 if v == start else 1):
                return True
        state = (v, parity, usage, slots)
        if state in seen:
            return False
        seen.add(state)
        if parity == 0:  # next edge is odd-positioned: any edge of h
            for u in adj[v]:
                ui = index[u]
                if usage[ui] + 1 <= weights[ui]:
                    nxt = list(usage)
                    nxt[ui] += 1
                    if dfs(u, 1, tuple(nxt), slots):
                        return True
        else:  # next edge is even-positioned: consume a matched slot at v
            tried: set[tuple[int, int]] = set()
            for i, e in enumerate(slots):
                if v not in e or e in tried:
                    continue
                tried.add(e)
                u = e[0] if e[1] == v else e[1]
                ui = index[u]
                if usage[ui] + 1 <= weights[ui]:
                    nxt = list(usage)
                    nxt[ui] += 1
                    if dfs(u, 0, tuple(nxt), slots[:i] + slots[i + 1:]):
                        return True
        return False

    for v0 in unmatched:
        start = v0
        seen.clear()
        usage0 = [0] * len(verts)
        usage0[index[v0]] = 1
        if dfs(v0, 0, tuple(usage0), m.edges):
            return True
    return False
