"""Brute-force monomial ideal arithmetic: the ground-truth side of every check.

Ideals are stored by their unique minimal generating sets, as small integer
matrices.  All operations are purely combinatorial (componentwise min/max and
divisibility); saturation and colon-by-the-maximal-ideal additionally use a
membership bitmap over the bounded exponent box spanned by the generators.
No Groebner machinery anywhere.
"""

from __future__ import annotations

from itertools import combinations_with_replacement
from typing import Iterable, Sequence

import numpy as np

from .graphs import SimpleGraph


def _minimal_rows(arr: np.ndarray) -> np.ndarray:
    """Drop rows divisible by another row (the antichain of minimal elements)."""
    if arr.shape[0] == 0:
        return arr
    arr = np.unique(arr, axis=0)
    k = arr.shape[0]
    if k == 1:
        return arr
    if k <= 2048:
        le = (arr[:, None, :] <= arr[None, :, :]).all(axis=2)
        np.fill_diagonal(le, False)
        keep = ~le.any(axis=0)
        return arr[keep]
    # degree-ordered incremental sweep for very large inputs
    order = np.argsort(arr.sum(axis=1), kind="stable")
    arr = arr[order]
    kept: list[np.ndarray] = []
    for row in arr:
        if not kept or not (np.array(kept) <= row).all(axis=1).any():
            kept.append(row)
    return np.unique(np.array(kept, dtype=arr.dtype), axis=0)


class MonomialIdeal:
    """Monomial ideal given by its minimal generators (an exponent antichain)."""

    __slots__ = ("n", "gens")

    def __init__(self, n: int, gens: np.ndarray):
        self.n = n
        self.gens = gens
        assert self._is_antichain(), "generators must form a minimal antichain"

    def _is_antichain(self) -> bool:
        g = self.gens
        if g.shape[0] <= 1:
            return True
        le = (g[:, None, :] <= g[None, :, :]).all(axis=2)
        np.fill_diagonal(le, False)
        return not le.any()

    @classmethod
    def from_gens(cls, n: int, vectors: Iterable[Sequence[int]]) -> "MonomialIdeal":
        rows = [tuple(v) for v in vectors]
        if not rows:
            return cls(n, np.zeros((0, n), dtype=np.int64))
        arr = np.array(rows, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[1] != n:
            raise ValueError(f"generators must have length {n}")
        if (arr < 0).any():
            raise ValueError("generator exponents must be non-negative")
        return cls(n, _minimal_rows(arr))

    @property
    def is_zero(self) -> bool:
        return self.gens.shape[0] == 0

    @property
    def is_unit(self) -> bool:
        return self.gens.shape[0] == 1 and not self.gens.any()

    def to_lists(self) -> list[list[int]]:
        return [list(map(int, row)) for row in self.gens]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.n == other.n and self.gens.shape == other.gens.shape and bool(
            (self.gens == other.gens).all()
        )

    def __hash__(self) -> int:
        return hash((self.n, self.gens.shape, self.gens.tobytes()))

    def __repr__(self) -> str:
        return f"MonomialIdeal(n={self.n}, gens={self.to_lists()})"


def edge_ideal(g: SimpleGraph) -> MonomialIdeal:
    """The ideal generated by x_u x_v over the edges of g."""
    if g.n < 1:
        raise ValueError("edge ideal needs at least one vertex")
    rows = np.zeros((len(g.edges), g.n), dtype=np.int64)
    for i, (u, v) in enumerate(g.sorted_edges):
        rows[i, u - 1] = 1
        rows[i, v - 1] = 1
    return MonomialIdeal(g.n, _minimal_rows(rows))


def power(j: MonomialIdeal, t: int) -> MonomialIdeal:
    """Minimal generators of j**t (t-fold products as multisets of generators)."""
    if t < 1:
        raise ValueError("power requires t >= 1")
    if t == 1 or j.is_zero:
        return j
    k = j.gens.shape[0]
    combos = np.array(list(combinations_with_replacement(range(k), t)), dtype=np.int64)
    rows = j.gens[combos].sum(axis=1)
    return MonomialIdeal(j.n, _minimal_rows(rows))


def membership(j: MonomialIdeal, a: Sequence[int]) -> bool:
    """Does some generator divide x^a?"""
    if j.is_zero:
        return False
    return bool((j.gens <= np.asarray(a, dtype=np.int64)).all(axis=1).any())


def membership_many(j: MonomialIdeal, a_matrix: np.ndarray) -> np.ndarray:
    """Vectorised membership for many exponent vectors at once."""
    if j.is_zero:
        return np.zeros(a_matrix.shape[0], dtype=bool)
    return (j.gens[None, :, :] <= a_matrix[:, None, :]).all(axis=2).any(axis=1)


def colon_monomial(j: MonomialIdeal, w: Sequence[int]) -> MonomialIdeal:
    """j : x^w, by clipping each generator below w."""
    if j.is_zero:
        return j
    arr = np.clip(j.gens - np.asarray(w, dtype=np.int64), 0, None)
    return MonomialIdeal(j.n, _minimal_rows(arr))


def intersect(j1: MonomialIdeal, j2: MonomialIdeal) -> MonomialIdeal:
    """Intersection via componentwise max over generator pairs, minimalised."""
    if j1.n != j2.n:
        raise ValueError("ideals live in different rings")
    if j1.is_zero or j2.is_zero:
        return MonomialIdeal.from_gens(j1.n, [])
    rows = np.maximum(j1.gens[:, None, :], j2.gens[None, :, :]).reshape(-1, j1.n)
    return MonomialIdeal(j1.n, _minimal_rows(rows))


def membership_box(j: MonomialIdeal, shape: tuple[int, ...]) -> np.ndarray:
    """Membership table of j over the exponent box of the given shape.

    The generators are seeded as points and closed upward with one
    accumulating pass per axis, so the cost is box size times n.
    """
    box = np.zeros(shape, dtype=bool)
    for row in j.gens:
        if all(int(e) < s for e, s in zip(row, shape)):
            box[tuple(int(e) for e in row)] = True
        # a generator outside the box divides nothing inside it
    for axis in range(j.n):
        np.logical_or.accumulate(box, axis=axis, out=box)
    return box


def _bitmap(j: MonomialIdeal) -> np.ndarray:
    """Membership table over the exponent box spanned by the generators.

    Membership outside this box follows by clamping (exponents above the
    per-variable maximum are absorbing).
    """
    rho = j.gens.max(axis=0) if not j.is_zero else np.zeros(j.n, dtype=np.int64)
    return membership_box(j, tuple(int(r) + 1 for r in rho))


def _gens_from_upset(n: int, box: np.ndarray) -> MonomialIdeal:
    """Minimal elements of an upward-closed membership table."""
    dominated = np.zeros_like(box)
    for axis in range(n):
        if box.shape[axis] == 1:
            continue
        pad_shape = list(box.shape)
        pad_shape[axis] = 1
        pad = np.zeros(pad_shape, dtype=bool)
        shifted = np.concatenate(
            [pad, np.take(box, range(box.shape[axis] - 1), axis=axis)], axis=axis
        )
        dominated |= shifted
    minimal = box & ~dominated
    return MonomialIdeal(n, np.argwhere(minimal).astype(np.int64))


def colon_maximal(j: MonomialIdeal) -> MonomialIdeal:
    """j : m, the intersection of the colons by each variable.

    Computed on the bounded-box membership table: w is in j:x_i exactly when
    w + e_i is in j, and the box top is absorbing.
    """
    if j.n < 1:
        raise ValueError("colon_maximal needs at least one variable")
    if j.is_zero or j.is_unit:
        return j
    box = _bitmap(j)
    out = None
    for axis in range(j.n):
        if box.shape[axis] == 1:
            quot = box
        else:
            top = np.take(box, [box.shape[axis] - 1], axis=axis)
            rest = np.take(box, range(1, box.shape[axis]), axis=axis)
            quot = np.concatenate([rest, top], axis=axis)
        out = quot if out is None else out & quot
    return _gens_from_upset(j.n, out)


def saturate(j: MonomialIdeal) -> MonomialIdeal:
    """The saturation: iterate K <- K : m until the fixpoint is reached.

    Each step only grows the ideal inside the fixed exponent box, so the
    fixpoint arrives within the sum of the generator degree bounds.
    """
    k = j
    while True:
        nxt = colon_maximal(k)
        if nxt == k:
            return k
        k = nxt


def lcm_exponents(j: MonomialIdeal) -> np.ndarray:
    if j.is_zero:
        raise ValueError("zero ideal has no generator lcm")
    return j.gens.max(axis=0)


def ass_primes_oracle(j: MonomialIdeal, chunk: int = 8192) -> list[frozenset[int]]:
    """Associated primes of R/j by the witness sweep.

    P is associated exactly when P = j : w for a monomial w dividing the lcm
    of the generators; the sweep tests every such divisor and keeps those w
    for which the colon reduces to an ideal of variables.
    """
    if j.is_zero:
        raise ValueError("associated primes of the zero ideal are not swept")
    rho = lcm_exponents(j)
    gens16 = j.gens.astype(np.int16)
    grid = np.indices(tuple(int(r) + 1 for r in rho)).reshape(j.n, -1).T.astype(np.int16)
    found: set[frozenset[int]] = set()
    for lo in range(0, grid.shape[0], chunk):
        d = grid[lo:lo + chunk]
        reduced = gens16[None, :, :] - d[:, None, :]
        np.clip(reduced, 0, None, out=reduced)
        degs = reduced.sum(axis=2)
        proper = ~(degs == 0).any(axis=1)  # w not in j, else colon is the unit ideal
        units = degs == 1
        evars = ((reduced == 1) & units[:, :, None]).any(axis=1)
        covered = ((reduced > 0) & evars[:, None, :]).any(axis=2).all(axis=1)
        ok = proper & covered & evars.any(axis=1)
        for row in np.nonzero(ok)[0]:
            found.add(frozenset(int(i) + 1 for i in np.nonzero(evars[row])[0]))
    return sorted(found, key=lambda s: (len(s), sorted(s)))
