"""Closed-form description of the join-irreducible elements above gamma.

A minor ``c >= gamma`` is join-irreducible iff exactly one position i has
``c_i > b_i`` and ``c_i > c_{i-1} + 1`` (with ``c_0 = 0``).  The pivot i gives
coordinates ``(p, q) = (n - c_i - (m - i), i - 1)`` which embed the poset of
join-irreducibles into N x N with the reversed product order; the image is a
union of "arms" ``{(p, q) : 0 <= p <= p_max(q)}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .minor import GammaContext, Minor, leq

__all__ = [
    "NotJoinIrreducibleError",
    "PQ",
    "FilterShape",
    "is_join_irreducible",
    "pivot_index",
    "phi",
    "phi_by_counting",
    "pq_in_image",
    "phi_inverse",
    "filter_shape",
    "l_set",
    "minimal_join_irreducibles",
    "join_irreducibles",
]


class NotJoinIrreducibleError(ValueError):
    pass


class PQ(NamedTuple):
    p: int
    q: int

    def __repr__(self) -> str:
        return f"({self.p},{self.q})"


@dataclass(frozen=True)
class FilterShape:
    """Finite filter of N x N isomorphic to the join-irreducible poset.

    ``arm_limits`` maps q to the largest p with (p, q) in the filter; only
    nonempty arms appear.
    """

    arm_limits: dict[int, int]
    minimal_points: frozenset[PQ]
    point_count: int

    def points(self) -> list[PQ]:
        return [PQ(p, q) for q, top in sorted(self.arm_limits.items()) for p in range(top + 1)]

    def __contains__(self, pq) -> bool:
        p, q = pq
        return q in self.arm_limits and 0 <= p <= self.arm_limits[q]


def _qualifying(c: Sequence[int], b: Sequence[int]) -> list[int]:
    """1-based positions i with c_i > b_i and c_i > c_{i-1} + 1."""
    out = []
    prev = 0
    for i, (ci, bi) in enumerate(zip(c, b), start=1):
        if ci > bi and ci > prev + 1:
            out.append(i)
        prev = ci
    return out


def _require_member(c: Sequence[int], ctx: GammaContext) -> Minor:
    c = Minor(c)
    if len(c) != ctx.m or c[-1] > ctx.n or not leq(ctx.gamma, c):
        raise ValueError(f"{c} is not in the lattice above {ctx.gamma} (n={ctx.n})")
    return c


def is_join_irreducible(c: Sequence[int], ctx: GammaContext) -> bool:
    c = _require_member(c, ctx)
    return len(_qualifying(c, ctx.gamma)) == 1


def pivot_index(c: Sequence[int], ctx: GammaContext) -> int:
    """The unique position i (1-based) witnessing join-irreducibility."""
    c = _require_member(c, ctx)
    hits = _qualifying(c, ctx.gamma)
    if len(hits) != 1:
        raise NotJoinIrreducibleError(f"{c} is not join-irreducible ({len(hits)} lower covers)")
    return hits[0]


def phi(c: Sequence[int], ctx: GammaContext) -> PQ:
    i = pivot_index(c, ctx)
    return PQ(ctx.n - c[i - 1] - (ctx.m - i), i - 1)


def phi_by_counting(c: Sequence[int], ctx: GammaContext) -> PQ:
    """Same as :func:`phi`, computed by counting indices instead of arithmetic.

    p counts t > c_i not among the entries of c; q counts entries below c_i.
    """
    i = pivot_index(c, ctx)
    pivot = c[i - 1]
    members = set(c)
    p = sum(1 for t in range(1, ctx.n + 1) if t > pivot and t not in members)
    q = sum(1 for t in range(1, ctx.n + 1) if t < pivot and t in members)
    return PQ(p, q)


def _pivot_value(pq: Sequence[int], ctx: GammaContext) -> tuple[int, int]:
    p, q = pq
    i = q + 1
    return i, ctx.n - p - (ctx.m - i)


def pq_in_image(pq: Sequence[int], ctx: GammaContext) -> bool:
    p, q = pq
    if p < 0 or q < 0 or q + 1 > ctx.m:
        return False
    i, ci = _pivot_value(pq, ctx)
    b = ctx.gamma
    prev = b[i - 2] if i > 1 else 0
    return ci > b[i - 1] and ci > prev + 1


def phi_inverse(pq: Sequence[int], ctx: GammaContext) -> Minor:
    """The join-irreducible with coordinates ``pq``.

    Entries before the pivot are forced to equal gamma; entries after it are
    the smallest values allowed by gamma and strict increase.
    """
    if not pq_in_image(pq, ctx):
        raise NotJoinIrreducibleError(f"{tuple(pq)} is not in the image for gamma={ctx.gamma}")
    i, ci = _pivot_value(pq, ctx)
    b = ctx.gamma
    c = list(b[: i - 1]) + [ci]
    for j in range(i, ctx.m):
        c.append(max(b[j], c[-1] + 1))
    return Minor(c)


def _arm_limit(i: int, ctx: GammaContext) -> int:
    b = ctx.gamma
    prev = b[i - 2] if i > 1 else 0
    return ctx.n - (ctx.m - i) - max(b[i - 1], prev + 1) - 1


def filter_shape(ctx: GammaContext) -> FilterShape:
    arms = {}
    for i in range(1, ctx.m + 1):
        top = _arm_limit(i, ctx)
        if top >= 0:
            arms[i - 1] = top
    tips = [PQ(top, q) for q, top in arms.items()]
    minimal = frozenset(
        t for t in tips if not any(o != t and o.p >= t.p and o.q >= t.q for o in tips)
    )
    return FilterShape(arms, minimal, sum(top + 1 for top in arms.values()))


def l_set(ctx: GammaContext) -> tuple[int, ...]:
    """Positions l where gamma can be raised: b_l + 1 < b_{l+1}, b_l < n.

    b_{m+1} is taken to be n + 1.
    """
    b = list(ctx.gamma) + [ctx.n + 1]
    return tuple(l for l in range(1, ctx.m + 1) if b[l - 1] + 1 < b[l] and b[l - 1] < ctx.n)


def minimal_join_irreducibles(ctx: GammaContext) -> list[tuple[Minor, int]]:
    """Minimal join-irreducibles, one per l-set index, with their coheights."""
    n, m, b = ctx.n, ctx.m, ctx.gamma
    out = []
    for l in l_set(ctx):
        raised = list(b)
        raised[l - 1] += 1
        out.append((Minor(raised), n - m - b[l - 1] + 2 * l - 2))
    return out


def join_irreducibles(ctx: GammaContext) -> list[Minor]:
    """All join-irreducibles, via phi_inverse over the filter, in lex order."""
    return sorted(phi_inverse(pq, ctx) for pq in filter_shape(ctx).points())
