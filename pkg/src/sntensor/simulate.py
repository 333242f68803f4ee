"""Seeded Monte Carlo for the n-cycle-then-transpositions chain.

Trajectories are generated in fixed blocks of ``BLOCK`` trajectories. Block
``b`` draws from its own Philox stream keyed by ``SeedSequence(seed,
spawn_key=(b,))``, so trajectory ``t`` always sees the same random numbers
(block ``t // BLOCK``, lane ``t % BLOCK``) regardless of how blocks are
scheduled across workers.
"""
from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import ParityMismatchError, WeightMismatchError
from .mixing import ChainSpec, ClassDistribution
from .partitions import Partition, enumerate_partitions, fixed_points

BLOCK = 4096
RNG_NAME = "philox4x64-seedseq-block4096/v1"
THREADS_ENV = "SNTENSOR_THREADS"
N_MOMENTS = 4


def default_workers() -> int:
    value = os.environ.get(THREADS_ENV)
    if value:
        return max(1, int(value))
    return os.cpu_count() or 1


def block_generator(seed: int, block: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(seed, spawn_key=(block,))))


def _ncycles(gen: np.random.Generator, n: int, size: int) -> np.ndarray:
    """Uniform n-cycles (0 -> a_1 -> ... -> a_{n-1} -> 0) in one-line form."""
    rows = np.arange(size)
    order = np.tile(np.arange(1, n), (size, 1))
    # Fisher-Yates on the arrangement of 1..n-1 following 0
    for i in range(n - 2, 0, -1):
        j = gen.integers(0, i + 1, size=size)
        tmp = order[rows, i].copy()
        order[rows, i] = order[rows, j]
        order[rows, j] = tmp
    seq = np.concatenate([np.zeros((size, 1), dtype=order.dtype), order], axis=1)
    perm = np.empty((size, n), dtype=np.int64)
    perm[rows[:, None], seq] = np.roll(seq, -1, axis=1)
    return perm


def _apply_transpositions(gen: np.random.Generator, perm: np.ndarray, k: int) -> None:
    """Left-multiply each row by k uniform transpositions, in place."""
    size, n = perm.shape
    rows = np.arange(size)
    inv = np.empty_like(perm)
    inv[rows[:, None], perm] = np.arange(n)
    for _ in range(k):
        a = gen.integers(0, n, size=size)
        b = gen.integers(0, n - 1, size=size)
        b += b >= a
        pa = inv[rows, a]
        pb = inv[rows, b]
        perm[rows, pa] = b
        perm[rows, pb] = a
        inv[rows, a] = pb
        inv[rows, b] = pa


def sample_block(spec: ChainSpec, seed: int, block: int, size: int = BLOCK) -> np.ndarray:
    # always draw a full block so lane t sees the same numbers whatever `size` is
    gen = block_generator(seed, block)
    perm = _ncycles(gen, spec.n, BLOCK)
    _apply_transpositions(gen, perm, spec.k)
    return perm[:size]


def sample_permutations(spec: ChainSpec, trials: int, seed: int):
    """Yield final permutations of X_{k+1}, one array per block."""
    for block in range(-(-trials // BLOCK)):
        yield sample_block(spec, seed, block, min(BLOCK, trials - block * BLOCK))


def cycle_counts(perm: np.ndarray) -> np.ndarray:
    """m[t, i-1] = number of i-cycles in row t."""
    size, n = perm.shape
    rows = np.arange(size)[:, None]
    start = np.tile(np.arange(n), (size, 1))
    cur = perm.copy()
    orbit = np.zeros((size, n), dtype=np.int64)
    for step in range(1, n + 1):
        hit = (cur == start) & (orbit == 0)
        orbit[hit] = step
        cur = perm[rows, cur]
    counts = np.zeros((size, n), dtype=np.int64)
    for length in range(1, n + 1):
        counts[:, length - 1] = (orbit == length).sum(axis=1) // length
    return counts


def _type_from_counts(counts) -> Partition:
    parts = []
    for length in range(len(counts), 0, -1):
        parts.extend([length] * int(counts[length - 1]))
    return Partition(parts)


def _count_block(args) -> Counter:
    spec, seed, block, size = args
    counts = cycle_counts(sample_block(spec, seed, block, size))
    keys, freq = np.unique(counts, axis=0, return_counts=True)
    return Counter({_type_from_counts(key): int(f) for key, f in zip(keys, freq)})


@dataclass(frozen=True)
class SimulationReport:
    n: int
    parity: str
    trials: int
    seed: int
    class_counts: dict  # every class of S_n, canonical order
    fixed_point_histogram: dict
    empirical_moments: list  # E[fix^r], r = 1..N_MOMENTS
    spec: ChainSpec | None = None
    rng: str = RNG_NAME

    def frequency(self, gamma) -> float:
        return self.class_counts.get(Partition(gamma), 0) / self.trials

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": None if self.spec is None else self.spec.k,
            "parity": self.parity,
            "trials": self.trials,
            "seed": self.seed,
            "rng": self.rng,
            "class_counts": {str(g): c for g, c in self.class_counts.items()},
            "fixed_point_histogram": {str(f): c for f, c in self.fixed_point_histogram.items()},
            "empirical_moments": [repr(m) for m in self.empirical_moments],
        }


def _report(n, parity, trials, seed, counter, spec=None) -> SimulationReport:
    class_counts = {g: counter.get(g, 0) for g in enumerate_partitions(n)}
    hist = {f: 0 for f in range(n + 1)}
    for g, c in class_counts.items():
        hist[fixed_points(g)] += c
    moments = [
        float(Fraction(sum(c * f**r for f, c in hist.items()), trials))
        for r in range(1, N_MOMENTS + 1)
    ]
    return SimulationReport(n, parity, trials, seed, class_counts, hist, moments, spec)


def run_chain(spec: ChainSpec, trials: int, seed: int, *, workers: int | None = None) -> SimulationReport:
    """Simulate ``trials`` independent trajectories of X_{k+1} and tally cycle types."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if not 0 <= seed < 2**64:
        raise ValueError("seed must be a 64-bit unsigned value")
    jobs = [
        (spec, seed, b, min(BLOCK, trials - b * BLOCK))
        for b in range(-(-trials // BLOCK))
    ]
    workers = default_workers() if workers is None else workers
    total = Counter()
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=min(workers, len(jobs))) as pool:
            for part in pool.map(_count_block, jobs):
                total.update(part)
    else:
        for job in jobs:
            total.update(_count_block(job))
    return _report(spec.n, spec.parity, trials, seed, total, spec)


def sample_distribution(dist: ClassDistribution, trials: int, seed: int) -> SimulationReport:
    """Draw classes i.i.d. from an exact class distribution."""
    classes = list(dist.masses)
    p = np.array([float(dist.masses[g]) for g in classes])
    gen = block_generator(seed, 0)
    draws = gen.choice(len(classes), size=trials, p=p / p.sum())
    idx, freq = np.unique(draws, return_counts=True)
    counter = Counter({classes[i]: int(f) for i, f in zip(idx, freq)})
    return _report(dist.n, dist.parity, trials, seed, counter)


def empirical_tv(report: SimulationReport, exact: ClassDistribution) -> float:
    if report.n != exact.n:
        raise WeightMismatchError(f"report on S_{report.n}, distribution on S_{exact.n}")
    if report.parity != exact.parity:
        raise ParityMismatchError(f"{report.parity} vs {exact.parity} coset")
    classes = set(report.class_counts) | set(exact.masses)
    return 0.5 * sum(
        abs(Fraction(report.class_counts.get(g, 0), report.trials) - exact[g])
        for g in classes
    ).__float__()
