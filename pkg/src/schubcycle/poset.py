"""Brute-force ground truth: the lattice of minors above gamma, explicitly.

Everything here is computed by enumeration and cover counting, never from
the closed forms in :mod:`schubcycle.irreducible`, so the two can check each
other.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

import numpy as np

from . import kernels
from .minor import GammaContext, Minor

__all__ = [
    "DEFAULT_SIZE_GUARD",
    "GuardExceededError",
    "PosetView",
    "lattice_size",
    "enumerate_lattice",
    "join_irreducibles_oracle",
    "coheight_in",
    "induced_subposet",
    "is_pure",
    "u_gamma_support",
]

DEFAULT_SIZE_GUARD = 2_000_000


class GuardExceededError(RuntimeError):
    """The requested poset is larger than the caller's size guard."""

    def __init__(self, count: int, guard: int, what: str = "lattice"):
        self.count = count
        self.guard = guard
        super().__init__(f"{what} has {count} elements, above size guard {guard}")


@dataclass(frozen=True, eq=False)
class PosetView:
    """A finite poset of minors: rows in lexicographic order plus cover edges.

    ``entries`` is an (N, m) integer array; ``edges`` is an (E, 2) array of
    (lower index, upper index) pairs sorted lexicographically.  Because the
    rows are lex-sorted, every edge has lower < upper.
    """

    entries: np.ndarray
    edges: np.ndarray

    def __len__(self) -> int:
        return int(self.entries.shape[0])

    @cached_property
    def elements(self) -> tuple[Minor, ...]:
        return tuple(Minor(row) for row in self.entries.tolist())

    @cached_property
    def covers(self) -> frozenset[tuple[int, int]]:
        return frozenset(map(tuple, self.edges.tolist()))

    @cached_property
    def index(self) -> dict[Minor, int]:
        return {x: k for k, x in enumerate(self.elements)}

    @cached_property
    def lower_cover_counts(self) -> np.ndarray:
        return np.bincount(self.edges[:, 1], minlength=len(self)).astype(np.int64)

    @cached_property
    def chain_lengths(self) -> tuple[np.ndarray, np.ndarray]:
        """(longest, shortest) upward cover-path length from each element."""
        return kernels.chain_lengths(len(self), self.edges)

    def minimal_indices(self) -> np.ndarray:
        return np.flatnonzero(self.lower_cover_counts == 0)

    def find(self, x: Iterable[int]) -> int | None:
        """Index of ``x`` by binary search over the sorted rows, or None."""
        target = tuple(int(v) for v in x)
        lo, hi = 0, len(self)
        while lo < hi:
            mid = (lo + hi) // 2
            if tuple(self.entries[mid].tolist()) < target:
                lo = mid + 1
            else:
                hi = mid
        if lo < len(self) and tuple(self.entries[lo].tolist()) == target:
            return lo
        return None

    def __contains__(self, x) -> bool:
        return self.find(x) is not None


def lattice_size(ctx: GammaContext) -> int:
    """Number of minors above gamma, by dynamic programming over positions.

    Exact (Python ints), so it is safe to call before deciding to enumerate.
    """
    n, b = ctx.n, ctx.gamma
    # ways[v]: completions of the remaining positions when the current entry is v
    ways = {v: 1 for v in range(b[-1], n + 1)}
    for j in range(ctx.m - 2, -1, -1):
        ways = {
            v: sum(w for u, w in ways.items() if u > v)
            for v in range(b[j], n + 1)
        }
    return sum(ways.values())


def enumerate_lattice(ctx: GammaContext, size_guard: int = DEFAULT_SIZE_GUARD) -> PosetView:
    """All minors above ``ctx.gamma`` with their full cover relation.

    Raises :class:`GuardExceededError` carrying the exact element count when
    the lattice is larger than ``size_guard``.
    """
    count = lattice_size(ctx)
    if count > size_guard:
        raise GuardExceededError(count, size_guard)
    gamma = np.asarray(ctx.gamma, dtype=np.int64)
    entries = kernels.enumerate_minors(ctx.n, gamma)
    edges = kernels.cover_edges(ctx.n, gamma, entries)
    entries.setflags(write=False)
    edges.setflags(write=False)
    view = PosetView(entries, edges)
    check_covers(view)
    return view


def check_covers(view: PosetView) -> None:
    """Raise if some stored edge is not a single-entry increment by one."""
    diff = view.entries[view.edges[:, 1]] - view.entries[view.edges[:, 0]]
    ok = ((diff == 1).sum(axis=1) == 1) & ((diff == 0).sum(axis=1) == diff.shape[1] - 1)
    if not ok.all():
        lo, hi = view.edges[np.argmin(ok)]
        raise AssertionError(
            f"{Minor(view.entries[lo])} -> {Minor(view.entries[hi])} is not a cover"
        )


def join_irreducibles_oracle(view: PosetView) -> set[Minor]:
    """Elements with exactly one lower cover in ``view``."""
    picked = view.entries[view.lower_cover_counts == 1]
    return {Minor(row) for row in picked.tolist()}


def coheight_in(view: PosetView, x: Iterable[int]) -> int:
    """Length of the longest chain from ``x`` up to a maximal element."""
    k = view.find(x)
    if k is None:
        raise KeyError(f"{Minor(x)} is not an element of this poset")
    return int(view.chain_lengths[0][k])


def _view_from_rows(rows: list[tuple[int, ...]], m: int) -> PosetView:
    entries = np.array(sorted(rows), dtype=np.int64).reshape(len(rows), m)
    edges = kernels.induced_covers(entries)
    entries.setflags(write=False)
    edges.setflags(write=False)
    return PosetView(entries, edges)


def induced_subposet(view: PosetView, subset: Iterable[Iterable[int]]) -> PosetView:
    """Restrict the order to ``subset``; covers are recomputed, not inherited."""
    rows = sorted({tuple(int(v) for v in x) for x in subset})
    stray = [Minor(r) for r in rows if view.find(r) is None]
    if stray:
        raise KeyError(f"not in the poset: {stray}")
    m = view.entries.shape[1] if len(view) else (len(rows[0]) if rows else 0)
    return _view_from_rows(rows, m)


def poset_of_minors(minors: Iterable[Iterable[int]]) -> PosetView:
    """A :class:`PosetView` on an arbitrary set of equal-length minors."""
    rows = sorted({tuple(int(v) for v in x) for x in minors})
    return _view_from_rows(rows, len(rows[0]) if rows else 0)


def is_pure(view: PosetView) -> bool:
    """True iff all maximal chains have the same length (empty poset: True).

    Maximal chains are cover paths from a minimal to a maximal element, so it
    suffices to compare the shortest and longest such path.
    """
    if len(view) == 0:
        return True
    longest, shortest = view.chain_lengths
    minimal = view.minimal_indices()
    return int(shortest[minimal].min()) == int(longest[minimal].max())


def u_gamma_support(ctx: GammaContext) -> np.ndarray:
    """0/1 pattern of the ladder matrix: row i is nonzero from column b_i on."""
    cols = np.arange(1, ctx.n + 1)
    return (cols[None, :] >= np.asarray(ctx.gamma)[:, None]).astype(np.int8)
