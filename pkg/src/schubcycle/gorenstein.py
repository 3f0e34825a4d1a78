"""Gorenstein decision for Schubert cycles, with an optional purity cross-check.

The closed form: the cycle is Gorenstein iff ``b_l - 2l`` takes one value as
l runs over the l-set.  The independent witness: the poset of
join-irreducibles, found by brute force, is pure.
"""

from __future__ import annotations

from dataclasses import dataclass

from .irreducible import l_set, minimal_join_irreducibles
from .minor import GammaContext, Minor
from .poset import (
    DEFAULT_SIZE_GUARD,
    enumerate_lattice,
    induced_subposet,
    is_pure,
    join_irreducibles_oracle,
)

__all__ = [
    "DEGREE_NOTE",
    "OracleDisagreementError",
    "OracleSummary",
    "GorensteinReport",
    "criterion_values",
    "is_gorenstein",
    "gorenstein_report",
]

# Every generator of the lattice has degree 1, so deg(a)+deg(b) equals
# deg(a meet b)+deg(a join b) identically and the purity criterion applies.
DEGREE_NOTE = "all generators have degree 1; degree additivity holds identically"


class OracleDisagreementError(AssertionError):
    """Closed-form verdict and brute-force purity differ (always a bug)."""


@dataclass(frozen=True)
class OracleSummary:
    lattice_size: int
    p_size: int
    pure: bool


@dataclass(frozen=True)
class GorensteinReport:
    ctx: GammaContext
    l_set: tuple[int, ...]
    criterion_values: tuple[int, ...]
    gorenstein: bool
    minimal_irreducibles: tuple[tuple[Minor, int], ...]
    oracle: OracleSummary | None = None
    degree_note: str = DEGREE_NOTE

    @property
    def oracle_checked(self) -> bool | None:
        # only ever True: a disagreement raises before a report exists
        return None if self.oracle is None else True


def criterion_values(ctx: GammaContext) -> tuple[int, ...]:
    return tuple(ctx.gamma[l - 1] - 2 * l for l in l_set(ctx))


def is_gorenstein(ctx: GammaContext) -> bool:
    return len(set(criterion_values(ctx))) <= 1


def oracle_purity(ctx: GammaContext, size_guard: int = DEFAULT_SIZE_GUARD) -> OracleSummary:
    """Purity of the brute-force join-irreducible poset."""
    view = enumerate_lattice(ctx, size_guard)
    irreducibles = join_irreducibles_oracle(view)
    sub = induced_subposet(view, irreducibles)
    return OracleSummary(len(view), len(sub), is_pure(sub))


def gorenstein_report(
    ctx: GammaContext,
    run_oracle: bool = False,
    size_guard: int = DEFAULT_SIZE_GUARD,
) -> GorensteinReport:
    values = criterion_values(ctx)
    verdict = len(set(values)) <= 1
    oracle = None
    if run_oracle:
        oracle = oracle_purity(ctx, size_guard)
        if oracle.pure != verdict:
            raise OracleDisagreementError(
                f"gamma={ctx.gamma}, n={ctx.n}: criterion says {verdict}, purity says {oracle.pure}"
            )
    return GorensteinReport(
        ctx=ctx,
        l_set=l_set(ctx),
        criterion_values=values,
        gorenstein=verdict,
        minimal_irreducibles=tuple(minimal_join_irreducibles(ctx)),
        oracle=oracle,
    )
