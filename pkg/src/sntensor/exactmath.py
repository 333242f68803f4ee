"""Exact integer/rational substrate and the combinatorial sequences built on it.

Integers are Python ``int`` (arbitrary precision) and rationals are
:class:`fractions.Fraction`, which is always kept in lowest terms with a
positive denominator.
"""
from __future__ import annotations

import math
import threading
from fractions import Fraction

Ratio = Fraction

_lock = threading.Lock()
# _stirling_rows[r][i] == S(r, i) for 0 <= i <= r
_stirling_rows: list[list[int]] = [[1]]
_bell: list[int] = [1]


def binomial(n: int, k: int) -> int:
    if n < 0 or k < 0:
        raise ValueError("binomial arguments must be nonnegative")
    return math.comb(n, k)


def _grow(r: int) -> None:
    with _lock:
        rows = _stirling_rows
        while len(rows) <= r:
            prev = rows[-1]
            m = len(rows)
            row = [0] * (m + 1)
            for i in range(1, m + 1):
                row[i] = (i * prev[i] if i < m else 0) + prev[i - 1]
            # publish only after the row is complete
            rows.append(row)
            _bell.append(sum(row))


def stirling2(r: int, i: int) -> int:
    """Stirling number of the second kind, with S(0, 0) = 1."""
    if r < 0 or i < 0:
        raise ValueError("stirling2 arguments must be nonnegative")
    if i > r:
        return 0
    if r >= len(_stirling_rows):
        _grow(r)
    return _stirling_rows[r][i]


def bell(t: int) -> int:
    if t < 0:
        raise ValueError("bell argument must be nonnegative")
    if t >= len(_bell):
        _grow(t)
    return _bell[t]
