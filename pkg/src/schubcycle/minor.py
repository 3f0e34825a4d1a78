"""Minors of an m x n matrix as index tuples, ordered componentwise.

A minor ``[a_1, ..., a_m]`` is a strictly increasing sequence of column
indices in ``1..n``.  Indices are 1-based everywhere.  Python's tuple
comparison (lexicographic) is kept as the canonical total order used for
deterministic output; the lattice order is :func:`leq`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "InvalidMinorError",
    "Minor",
    "GammaContext",
    "validate_minor",
    "leq",
    "meet",
    "join",
    "is_cover",
    "gamma_from_schubert_conditions",
]


class InvalidMinorError(ValueError):
    """Raised for sequences that are not strictly increasing in ``1..n``."""


class Minor(tuple):
    """Immutable strictly increasing tuple of positive column indices."""

    __slots__ = ()

    def __new__(cls, entries: Iterable[int] = ()) -> "Minor":
        values = tuple(int(v) for v in entries)
        if not values:
            raise InvalidMinorError("a minor needs at least one index")
        if values[0] < 1:
            raise InvalidMinorError(f"indices are 1-based, got {values[0]}")
        for prev, cur in zip(values, values[1:]):
            if cur <= prev:
                raise InvalidMinorError(f"not strictly increasing: {list(values)}")
        return super().__new__(cls, values)

    @property
    def m(self) -> int:
        return len(self)

    def __repr__(self) -> str:
        return "[" + ",".join(map(str, self)) + "]"

    __str__ = __repr__

    @classmethod
    def parse(cls, text: str) -> "Minor":
        """Parse ``"2,4,5"`` or ``"[2,4,5]"``."""
        body = text.strip().removeprefix("[").removesuffix("]")
        try:
            parts = [int(tok) for tok in body.split(",") if tok.strip()]
        except ValueError as exc:
            raise InvalidMinorError(f"cannot parse minor from {text!r}") from exc
        return cls(parts)


def validate_minor(entries: Sequence[int], n: int) -> Minor:
    """Return ``entries`` as a :class:`Minor`, checking it lies in ``1..n``."""
    minor = Minor(entries)
    if minor[-1] > n:
        raise InvalidMinorError(f"{minor} exceeds n={n}")
    return minor


@dataclass(frozen=True)
class GammaContext:
    """The data ``(n, m, gamma)`` fixing one Schubert cycle.

    ``gamma`` is the bottom element of the lattice of minors above it.
    """

    n: int
    gamma: Minor

    def __post_init__(self) -> None:
        if not isinstance(self.gamma, Minor):
            object.__setattr__(self, "gamma", Minor(self.gamma))
        if self.n < 1:
            raise InvalidMinorError(f"n must be positive, got {self.n}")
        if self.m > self.n:
            raise InvalidMinorError(f"m={self.m} exceeds n={self.n}")
        validate_minor(self.gamma, self.n)

    @property
    def m(self) -> int:
        return len(self.gamma)

    @property
    def top(self) -> Minor:
        return top_minor(self.n, self.m)

    @property
    def is_top(self) -> bool:
        return self.gamma == self.top

    @classmethod
    def from_schubert(cls, conditions: Sequence[int], n: int) -> "GammaContext":
        return cls(n, gamma_from_schubert_conditions(validate_minor(conditions, n), n))


def top_minor(n: int, m: int) -> Minor:
    return Minor(range(n - m + 1, n + 1))


def _check_lengths(a: Sequence[int], b: Sequence[int]) -> None:
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")


def leq(a: Sequence[int], b: Sequence[int]) -> bool:
    """Componentwise order: ``a_i <= b_i`` for every i."""
    _check_lengths(a, b)
    return all(x <= y for x, y in zip(a, b))


def meet(a: Sequence[int], b: Sequence[int]) -> Minor:
    _check_lengths(a, b)
    return Minor(map(min, a, b))


def join(a: Sequence[int], b: Sequence[int]) -> Minor:
    _check_lengths(a, b)
    return Minor(map(max, a, b))


def is_cover(c: Sequence[int], d: Sequence[int]) -> bool:
    """True iff d is obtained from c by raising exactly one entry by one."""
    _check_lengths(c, d)
    diffs = [y - x for x, y in zip(c, d)]
    return diffs.count(1) == 1 and diffs.count(0) == len(diffs) - 1


def gamma_from_schubert_conditions(a: Sequence[int], n: int) -> Minor:
    """Flip Schubert conditions ``a`` into the bottom minor: b_i = n+1-a_{m+1-i}.

    The map is an involution and reverses the componentwise order.
    """
    a = validate_minor(a, n)
    return Minor(n + 1 - x for x in reversed(a))
