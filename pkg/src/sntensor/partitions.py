"""Integer partitions: enumeration, diagram operations and class counting.

A :class:`Partition` serves both as an irrep label and as a cycle type.
"""
from __future__ import annotations

import math
import re
from collections import Counter
from functools import lru_cache


class Partition(tuple):
    """Immutable weakly decreasing tuple of positive integers."""

    __slots__ = ()

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        for a, b in zip(parts, parts[1:]):
            if b > a:
                raise ValueError(f"parts of {parts} are not weakly decreasing")
        if parts and parts[-1] < 1:
            raise ValueError(f"parts of {parts} must be positive")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``[4,1,1]`` or the exponent shorthand ``[4,1^2]``."""
        body = text.strip()
        if body.startswith("[") and body.endswith("]"):
            body = body[1:-1]
        parts: list[int] = []
        for token in filter(None, (t.strip() for t in body.split(","))):
            m = re.fullmatch(r"(\d+)(?:\^(\d+))?", token)
            if not m:
                raise ValueError(f"bad partition token {token!r} in {text!r}")
            parts.extend([int(m.group(1))] * int(m.group(2) or 1))
        return cls(sorted(parts, reverse=True))

    @property
    def weight(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """The i-th part (0-based), or 0 past the end."""
        return self[i] if i < len(self) else 0

    def __repr__(self):
        return f"Partition({list(self)})"

    def __str__(self):
        return "[" + ",".join(map(str, self)) + "]"


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order, ``(n)`` first."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return list(_partitions(n))


@lru_cache(maxsize=None)
def _partitions(n: int) -> tuple[Partition, ...]:
    out = []

    def rec(remaining, largest, prefix):
        if remaining == 0:
            out.append(Partition(prefix))
            return
        for p in range(min(remaining, largest), 0, -1):
            prefix.append(p)
            rec(remaining - p, p, prefix)
            prefix.pop()

    rec(n, n, [])
    return tuple(out)


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return Partition()
    return Partition(sum(1 for p in lam if p > j) for j in range(lam[0]))


def hook_lengths(lam: Partition) -> list[int]:
    conj = conjugate(lam)
    return [
        (row - j - 1) + (conj[j] - i - 1) + 1
        for i, row in enumerate(lam)
        for j in range(row)
    ]


@lru_cache(maxsize=None)
def dimension(lam: Partition) -> int:
    """Number of standard Young tableaux of shape ``lam`` (hook length formula)."""
    lam = Partition(lam)
    hooks = math.prod(hook_lengths(lam))
    d, rem = divmod(math.factorial(lam.weight), hooks)
    assert rem == 0
    return d


def truncate(lam: Partition) -> Partition:
    """Drop the first row: (lam_2, lam_3, ...)."""
    return Partition(lam[1:])


def is_proper_hook(lam: Partition) -> bool:
    """True for (n-j, 1^j) with j >= 1 and n-j >= 2, i.e. hooks other than (n), (1^n)."""
    return len(lam) >= 2 and lam[0] > 1 and lam[1] == 1


def is_hook(lam: Partition) -> bool:
    return len(lam) <= 1 or lam[1] == 1


def hook_height(lam: Partition) -> int:
    """Number of rows minus one."""
    return len(lam) - 1


def class_size(gamma: Partition) -> int:
    """Number of permutations of cycle type ``gamma``: n!/z_gamma."""
    z = 1
    for part, mult in Counter(gamma).items():
        z *= math.factorial(mult) * part**mult
    return math.factorial(sum(gamma)) // z


def fixed_points(gamma: Partition) -> int:
    return sum(1 for p in gamma if p == 1)


def sign(gamma: Partition) -> int:
    """Sign of any permutation with cycle type ``gamma``."""
    return -1 if (sum(gamma) - len(gamma)) % 2 else 1


def cycle_type(perm) -> Partition:
    """Cycle type of a permutation given in one-line form on 0..n-1."""
    n = len(perm)
    seen = [False] * n
    lengths = []
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = perm[x]
            length += 1
        lengths.append(length)
    return Partition(sorted(lengths, reverse=True))
