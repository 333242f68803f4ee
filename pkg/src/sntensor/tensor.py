"""Irreducible multiplicities in tensor powers of the defining and standard reps.

The closed forms are only used where they are known to hold,
``1 <= r <= n - lam_2``; outside that range :func:`decompose` falls back to
the character inner product computed by :func:`oracle_multiplicity`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

from .characters import character_table
from .errors import ConsistencyError, ValidityRangeError
from .exactmath import binomial, stirling2
from .partitions import Partition, dimension, enumerate_partitions, fixed_points, truncate

Rep = Literal["defining", "standard"]
REPS = ("defining", "standard")


def _check_range(lam: Partition, r: int) -> None:
    if r < 1:
        raise ValidityRangeError(f"r must be >= 1, got {r}")
    bound = sum(lam) - Partition(lam).part(1)
    if r > bound:
        raise ValidityRangeError(
            f"closed form for {Partition(lam)} only holds for r <= {bound}, got r={r}"
        )


def in_closed_form_range(lam: Partition, r: int) -> bool:
    return 1 <= r <= sum(lam) - Partition(lam).part(1)


def _bell_binomial_sum(depth: int, r: int) -> int:
    # sum_{i=depth}^{r} C(i, depth) S(r, i)
    return sum(binomial(i, depth) * stirling2(r, i) for i in range(depth, r + 1))


def defining_multiplicity(lam: Partition, r: int, *, check_range: bool = True) -> int:
    """Multiplicity of S^lam in the r-th tensor power of the defining rep."""
    lam = Partition(lam)
    if check_range:
        _check_range(lam, r)
    bar = truncate(lam)
    return dimension(bar) * _bell_binomial_sum(bar.weight, r)


def standard_multiplicity(lam: Partition, r: int, *, check_range: bool = True) -> int:
    """Multiplicity of S^lam in the r-th tensor power of S^(n-1,1).

    The alternating binomial sum is evaluated in signed integers; a negative
    total means the implementation is wrong.
    """
    lam = Partition(lam)
    if check_range:
        _check_range(lam, r)
    bar = truncate(lam)
    depth = bar.weight
    total = 0
    for s in range(depth, r + 1):
        term = binomial(r, s) * _bell_binomial_sum(depth, s)
        total += -term if (r - s) % 2 else term
    if total < 0 and check_range:
        raise ConsistencyError(f"negative standard multiplicity {total} at {lam}, r={r}")
    return dimension(bar) * total


def oracle_multiplicity(lam: Partition, r: int, rep: Rep, *, ceiling: int | None = None) -> int:
    """<phi^r, chi^lam> by summing over conjugacy classes.

    phi is the fixed-point count (defining) or fixed points minus one
    (standard). Independent of the closed forms.
    """
    lam = Partition(lam)
    if rep not in REPS:
        raise ValueError(f"unknown representation {rep!r}")
    table = character_table(lam.weight, ceiling)
    shift = 1 if rep == "standard" else 0
    row = table.row(lam)
    total = sum(
        table.class_sizes[g] * (fixed_points(g) - shift) ** r * row[g]
        for g in table.partitions
    )
    mult, rem = divmod(total, math.factorial(table.n))
    if rem or mult < 0:
        raise ConsistencyError(
            f"character inner product {total}/{table.n}! is not a nonnegative integer"
        )
    return mult


@dataclass(frozen=True)
class Entry:
    multiplicity: int
    method: str  # "closed_form" or "oracle"


@dataclass(frozen=True)
class DecompositionTable:
    n: int
    r: int
    rep: str
    entries: dict  # Partition -> Entry, every partition of n present

    def dimension_sum(self) -> int:
        return sum(e.multiplicity * dimension(lam) for lam, e in self.entries.items())

    def expected_dimension(self) -> int:
        return (self.n if self.rep == "defining" else self.n - 1) ** self.r

    def multiplicity(self, lam) -> int:
        return self.entries[Partition(lam)].multiplicity

    def methods(self) -> set:
        return {e.method for e in self.entries.values()}


def decompose(n: int, r: int, rep: Rep = "defining", *, ceiling: int | None = None,
              oracle_only: bool = False) -> DecompositionTable:
    if n < 3 or r < 1:
        raise ValueError(f"decompose needs n >= 3 and r >= 1, got n={n}, r={r}")
    if rep not in REPS:
        raise ValueError(f"unknown representation {rep!r}")
    closed = defining_multiplicity if rep == "defining" else standard_multiplicity
    entries = {}
    for lam in enumerate_partitions(n):
        if not oracle_only and in_closed_form_range(lam, r):
            entries[lam] = Entry(closed(lam, r), "closed_form")
        else:
            entries[lam] = Entry(oracle_multiplicity(lam, r, rep, ceiling=ceiling), "oracle")
    table = DecompositionTable(n, r, rep, entries)
    if table.dimension_sum() != table.expected_dimension():
        raise ConsistencyError(
            f"dimension sum {table.dimension_sum()} != {table.expected_dimension()}"
        )
    return table


def closed_form_divergence(n: int, r: int, rep: Rep = "defining", *,
                           ceiling: int | None = None) -> list[tuple[Partition, int, int]]:
    """Partitions where the closed form, evaluated outside its proven range,
    disagrees with the oracle: (lam, extrapolated, oracle)."""
    closed = defining_multiplicity if rep == "defining" else standard_multiplicity
    out = []
    for lam in enumerate_partitions(n):
        if in_closed_form_range(lam, r):
            continue
        guess = closed(lam, r, check_range=False)
        truth = oracle_multiplicity(lam, r, rep, ceiling=ceiling)
        if guess != truth:
            out.append((lam, guess, truth))
    return out
