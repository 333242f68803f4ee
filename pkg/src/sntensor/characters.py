"""Irreducible characters of S_n.

General values come from the Murnaghan-Nakayama rule, run on beta-sets
(first-column hook lengths): removing a rim hook of length m is moving one
bead from position b to an empty position b - m, with sign (-1)^(number of
beads jumped over).
"""
from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .errors import ResourceLimitError, WeightMismatchError
from .partitions import (
    Partition,
    class_size,
    dimension,
    enumerate_partitions,
    is_hook,
)

#: Largest n for which full character tables are built.
TABLE_CEILING = 20


def _to_beta(lam: tuple) -> tuple:
    length = len(lam)
    return tuple(p + length - 1 - i for i, p in enumerate(lam))


def _from_beta(beta) -> tuple:
    beta = sorted(beta, reverse=True)
    length = len(beta)
    return tuple(b - (length - 1 - i) for i, b in enumerate(beta) if b - (length - 1 - i) > 0)


def rim_hook_removals(lam: tuple, m: int):
    """Yield (shape after removal, sign) for each rim hook of length m in lam."""
    beta = _to_beta(lam)
    occupied = set(beta)
    for b in beta:
        target = b - m
        if target < 0 or target in occupied:
            continue
        jumped = sum(1 for x in beta if target < x < b)
        rest = [x for x in beta if x != b]
        rest.append(target)
        yield _from_beta(rest), (-1) ** jumped


@lru_cache(maxsize=None)
def _mn(lam: tuple, gamma: tuple) -> int:
    if not gamma:
        return 1
    if gamma[0] == 1:
        return dimension(Partition(lam))
    total = 0
    rest = gamma[1:]
    for shape, sgn in rim_hook_removals(lam, gamma[0]):
        total += sgn * _mn(shape, rest)
    return total


def mn_character(lam: Partition, gamma: Partition) -> int:
    """chi^lam evaluated on the class of cycle type gamma."""
    if sum(lam) != sum(gamma):
        raise WeightMismatchError(
            f"|{list(lam)}| = {sum(lam)} but |{list(gamma)}| = {sum(gamma)}"
        )
    return _mn(tuple(lam), tuple(sorted(gamma, reverse=True)))


def ncycle_character(lam: Partition) -> int:
    """chi^lam at an n-cycle: 0 off hooks, else (-1)^(rows - 1)."""
    if not is_hook(lam):
        return 0
    return 1 if len(lam) % 2 else -1


def normalized_transposition_char(lam: Partition) -> Fraction:
    """chi^lam(tau) / dim(lam) from the Frobenius content formula."""
    n = sum(lam)
    if n < 2:
        raise ValueError("a transposition needs n >= 2")
    s = sum(p * p - (2 * i - 1) * p for i, p in enumerate(lam, start=1))
    return Fraction(s, n * (n - 1))


def transposition_type(n: int) -> Partition:
    return Partition([2] + [1] * (n - 2))


@dataclass
class CharacterTable:
    """Exact character table of S_n; rows are filled on first access."""

    n: int
    partitions: tuple[Partition, ...]
    dims: dict = field(default_factory=dict)
    class_sizes: dict = field(default_factory=dict)
    _rows: dict = field(default_factory=dict, repr=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    def row(self, lam: Partition) -> dict:
        lam = Partition(lam)
        row = self._rows.get(lam)
        if row is None:
            row = {g: mn_character(lam, g) for g in self.partitions}
            with self._lock:
                row = self._rows.setdefault(lam, row)
        return row

    def chi(self, lam: Partition, gamma: Partition) -> int:
        return self.row(lam)[Partition(gamma)]

    @property
    def rows(self) -> dict:
        return {lam: self.row(lam) for lam in self.partitions}

    def records(self):
        """(lambda, gamma, chi, class_size, dim) for every pair, in table order."""
        for lam in self.partitions:
            row = self.row(lam)
            for g in self.partitions:
                yield lam, g, row[g], self.class_sizes[g], self.dims[lam]


_tables: dict[int, CharacterTable] = {}
_tables_lock = threading.Lock()


def character_table(n: int, ceiling: int | None = None) -> CharacterTable:
    limit = TABLE_CEILING if ceiling is None else ceiling
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > limit:
        raise ResourceLimitError(f"character table for n={n} exceeds ceiling {limit}")
    with _tables_lock:
        table = _tables.get(n)
        if table is None:
            parts = tuple(enumerate_partitions(n))
            table = CharacterTable(
                n=n,
                partitions=parts,
                dims={lam: dimension(lam) for lam in parts},
                class_sizes={g: class_size(g) for g in parts},
            )
            _tables[n] = table
    return table
