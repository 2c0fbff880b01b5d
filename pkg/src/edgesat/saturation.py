"""Membership in powers and saturations of edge ideals, via weighted graphs.

For an exponent vector a, the weighted graph of the monomial x^a is the
induced subgraph on the support with vertex i weighted a_i.  Membership in
the t-th power is nu >= t; membership in the saturation is the system of
matching inequalities nu(G_a - N_a(i)) >= t - deg_a(i) over all vertices i
of the ambient graph.
"""

from __future__ import annotations

from itertools import combinations, product
from typing import Iterable, Sequence

from .graphs import (
    SimpleGraph,
    components_masked,
    induced_subgraph,
    iter_bits,
    mask_of,
    set_of,
    shortest_odd_cycle_masked,
)
from .matching import WeightedGraph, nu

ExponentVector = tuple[int, ...]


def support(a: Sequence[int]) -> frozenset[int]:
    """V_a: the vertices carrying a positive exponent."""
    return frozenset(i + 1 for i, x in enumerate(a) if x > 0)


def weighted_graph(g: SimpleGraph, a: Sequence[int]) -> WeightedGraph:
    """The weighted graph of the monomial x^a."""
    return WeightedGraph.from_exponents(g, a)


def _check_t(t: int) -> None:
    if t < 1:
        raise ValueError("power exponent t must be at least 1")


def in_power(g: SimpleGraph, a: Sequence[int], t: int) -> bool:
    """x^a lies in I^t exactly when nu of its weighted graph is at least t."""
    _check_t(t)
    return nu(weighted_graph(g, a)) >= t


def _saturation_condition(g: SimpleGraph, h: WeightedGraph, a: Sequence[int], i: int, t: int) -> bool:
    """nu(G_a - N_a(i)) >= t - deg_a(i), the per-vertex saturation inequality."""
    sup = set(h.vertices)
    na = [v for v in g.adj[i] if v in sup]
    deg = sum(a[v - 1] for v in na)
    if deg >= t:
        return True
    return nu(h.minus(na)) >= t - deg


def in_saturation(g: SimpleGraph, a: Sequence[int], t: int) -> bool:
    """x^a lies in the saturation of I^t.

    Holds when the per-vertex inequality holds at every vertex of g; members
    of I^t itself satisfy those inequalities automatically.
    """
    _check_t(t)
    h = weighted_graph(g, a)
    if nu(h) >= t:
        return True
    return all(
        _saturation_condition(g, h, a, i, t) for i in range(1, g.n + 1)
    )


def in_sat_minus_power(g: SimpleGraph, a: Sequence[int], t: int) -> bool:
    """x^a lies in the saturation of I^t but not in I^t itself."""
    _check_t(t)
    h = weighted_graph(g, a)
    if nu(h) >= t:
        return False
    return all(
        _saturation_condition(g, h, a, i, t) for i in range(1, g.n + 1)
    )


def is_t_saturating(h: WeightedGraph, t: int) -> bool:
    """nu(H) < t and nu(H - N(i)) >= t - deg(i) at every vertex of H.

    The empty weighted graph is not considered saturating (it has no odd
    cycle, and the corresponding monomial is 1).
    """
    _check_t(t)
    if not h.vertices:
        return False
    if nu(h) >= t:
        return False
    for i in h.vertices:
        deg = h.weighted_degree(i)
        if deg >= t:
            continue
        if nu(h.minus(h.adjacency[i])) < t - deg:
            return False
    return True


def is_strongly_t_saturating(h: WeightedGraph, t: int) -> bool:
    """nu(H) < t and nu(H - j) >= t - a_j for every vertex j of H."""
    _check_t(t)
    if not h.vertices:
        return False
    if nu(h) >= t:
        return False
    for j, w in zip(h.vertices, h.weights):
        if w >= t:
            continue
        if nu(h.minus((j,))) < t - w:
            return False
    return True


def _strong_chain_level(g: SimpleGraph, b: Sequence[int]) -> int:
    """Validate the edge-adding preconditions of b and return its level t."""
    total = sum(b)
    if total % 2 == 0:
        raise ValueError("exponent sum must be odd (2t-1)")
    t = (total + 1) // 2
    hb = weighted_graph(g, b)
    if not is_strongly_t_saturating(hb, t):
        raise ValueError(f"base weighted graph is not strongly {t}-saturating")
    if nu(hb) != t - 1:
        raise ValueError(f"base weighted graph must have matching number {t - 1}")
    for i in support(b):
        bm = list(b)
        bm[i - 1] -= 1
        if nu(weighted_graph(g, bm)) != t - 1:
            raise ValueError(
                f"dropping one weight unit at vertex {i} must keep matching number {t - 1}"
            )
    return t


def extend_by_edge(g: SimpleGraph, b: Sequence[int], edge: tuple[int, int]) -> ExponentVector:
    """Add one edge of g to a strongly saturating weighted graph.

    b must be strongly t-saturating with weight sum 2t-1 and matching number
    t-1 stable under single weight drops; the edge must have an endpoint in
    the support.  The result is b + e_h + e_j, strongly (t+1)-saturating with
    weight sum 2t+1, which is re-verified before returning.
    """
    u, v = edge
    if not g.has_edge(u, v):
        raise ValueError(f"({u},{v}) is not an edge of the graph")
    t = _strong_chain_level(g, b)
    sup = support(b)
    if u not in sup and v not in sup:
        raise ValueError("the added edge needs an endpoint in the support")
    a = list(b)
    a[u - 1] += 1
    a[v - 1] += 1
    ha = weighted_graph(g, a)
    assert sum(a) == 2 * t + 1
    assert is_strongly_t_saturating(ha, t + 1), "edge-adding lost strong saturation"
    assert nu(ha) == t, "edge-adding must raise the matching number by one"
    for i in support(a):
        am = list(a)
        am[i - 1] -= 1
        assert nu(weighted_graph(g, am)) == t, "single weight drops must preserve nu"
    return tuple(a)


def build_strong(g: SimpleGraph, u: Iterable[int], seed: Iterable[int]) -> ExponentVector:
    """Grow a strongly saturating weighted graph from a seed to cover u.

    The seed (2s-1 vertices, weight one each) must induce a strongly
    s-saturating graph and the induced graph on u must be connected.  Edges
    are added in breadth-first order until the support equals u; the result
    is strongly t-saturating for t = |u| - s + 1.
    """
    useq = frozenset(u)
    sseq = frozenset(seed)
    if not sseq <= useq:
        raise ValueError("the seed must be contained in u")
    if len(components_masked(g, mask_of(useq))) != 1:
        raise ValueError("the induced graph on u must be connected")
    if len(sseq) % 2 == 0:
        raise ValueError("the seed must have oddly many vertices")
    s = (len(sseq) + 1) // 2
    a = [0] * g.n
    for v in sseq:
        a[v - 1] = 1
    if not is_strongly_t_saturating(weighted_graph(g, a), s):
        raise ValueError(f"the seed does not induce a strongly {s}-saturating graph")
    current = tuple(a)
    while support(current) != useq:
        sup = support(current)
        candidates = sorted(
            (j, h)
            for h, j_set in ((x, g.adj[x]) for x in sup)
            for j in j_set
            if j in useq and j not in sup
        )
        if not candidates:
            raise ValueError("u is not reachable from the seed inside u")
        j, h = candidates[0]
        current = extend_by_edge(g, current, (h, j))
    return current


def _components_have_short_odd_cycles(g: SimpleGraph, sup_mask: int, bound: int) -> bool:
    for comp in components_masked(g, sup_mask):
        length = shortest_odd_cycle_masked(g, comp)
        if length is None or length > bound:
            return False
    return True


def saturating_vectors(
    g: SimpleGraph,
    t: int,
    *,
    max_weight: int | None = None,
    total_bound: int | None = None,
    odd_cycle_filter: bool = True,
) -> list[ExponentVector]:
    """All exponent vectors whose weighted graph is t-saturating.

    The default enumeration bounds are complete: weights below t, weight sum
    at most 3(t-1), and supports whose induced components each contain an odd
    cycle of length at most 2t-1.  The keyword switches exist so tests can
    compare against an unpruned enumeration.
    """
    if t < 2:
        raise ValueError("saturating graphs require t >= 2")
    if max_weight is None:
        max_weight = t - 1
    if total_bound is None:
        total_bound = 3 * (t - 1)
    out: list[ExponentVector] = []
    verts = range(1, g.n + 1)
    for size in range(1, min(g.n, total_bound) + 1):
        for sup in combinations(verts, size):
            if odd_cycle_filter and not _components_have_short_odd_cycles(
                g, mask_of(sup), 2 * t - 1
            ):
                continue
            for weights in product(range(1, max_weight + 1), repeat=size):
                if sum(weights) > total_bound:
                    continue
                a = [0] * g.n
                for v, w in zip(sup, weights):
                    a[v - 1] = w
                if is_t_saturating(weighted_graph(g, a), t):
                    out.append(tuple(a))
    return sorted(out)


def facets_delta(g: SimpleGraph, a: Sequence[int], t: int) -> list[frozenset[int]]:
    """Facets of the degree-a complex of I^t, for a signed exponent vector.

    For each G between G_a = {i : a_i < 0} and V, with F = V \\ G a cover,
    the localized membership question reduces to the edge ideal of the
    induced graph on core(F) at the shifted exponent s = t minus the weights
    sitting on F outside the core; negative or zero s means membership in
    the localized power and contributes no facet.
    """
    _check_t(t)
    a = tuple(a)
    if len(a) != g.n:
        raise ValueError(f"exponent vector has length {len(a)}, expected {g.n}")
    if not g.edges:
        raise ValueError("the facet formula needs a nonzero edge ideal")
    ga_mask = mask_of(i + 1 for i, x in enumerate(a) if x < 0)
    free = g.full_mask & ~ga_mask
    facets: list[frozenset[int]] = []
    sub = 0
    while True:  # all subsets of `free`; G = ga_mask | sub
        fmask = free & ~sub
        if _all_edges_met(g, fmask):
            core = _core_mask(g, fmask)
            shed = fmask & ~core
            s = t - sum(a[v - 1] for v in iter_bits(shed))
            if s >= 1:
                core_set = set_of(core)
                subg, relabel = induced_subgraph(g, core_set)
                a_core = [0] * subg.n
                for v in core_set:
                    a_core[relabel[v] - 1] = a[v - 1]
                if in_sat_minus_power(subg, a_core, s):
                    facets.append(set_of(sub))
        if sub == free:
            break
        sub = (sub - free) & free
    return sorted(facets, key=lambda f: (len(f), sorted(f)))


def _all_edges_met(g: SimpleGraph, m: int) -> bool:
    return all(em & m for em in g.edge_masks)


def _core_mask(g: SimpleGraph, m: int) -> int:
    outside = g.full_mask & ~m
    core = 0
    for v in iter_bits(m):
        if not g.adj_bits[v - 1] & outside:
            core |= 1 << (v - 1)
    return core
