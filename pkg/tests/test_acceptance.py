"""Exit criteria. Each test records one PASS/FAIL line, printed at the end of the run."""
import json
import math
import time
from contextlib import contextmanager
from fractions import Fraction
from math import factorial

import mpmath

from conftest import ACCEPTANCE_LINES
from sntensor.characters import (
    character_table,
    mn_character,
    normalized_transposition_char,
    transposition_type,
)
from sntensor.mixing import (
    ChainSpec,
    asymptotic_bounds,
    chain_distribution,
    ds_rhs,
    exact_tv,
    finite_lower_bound,
    moment_direct,
    poisson_moment,
)
from sntensor.partitions import Partition, conjugate, dimension, enumerate_partitions, sign
from sntensor.simulate import run_chain
from sntensor.tensor import (
    decompose,
    defining_multiplicity,
    oracle_multiplicity,
    standard_multiplicity,
)
from oracles import chain_law_by_convolution


@contextmanager
def criterion(number, title):
    start = time.perf_counter()
    info = {}
    try:
        yield info
    except BaseException:
        elapsed = time.perf_counter() - start
        ACCEPTANCE_LINES.append(f"FAIL  {number:>2}. {title} ({elapsed:.1f}s) {info.get('detail', '')}")
        raise
    elapsed = time.perf_counter() - start
    ACCEPTANCE_LINES.append(f"PASS  {number:>2}. {title} ({elapsed:.1f}s) {info.get('detail', '')}")


def closed_form_sweep(closed, rep):
    checked = 0
    for n in range(3, 9):
        for lam in enumerate_partitions(n):
            for r in range(1, n - lam.part(1) + 1):
                assert closed(lam, r) == oracle_multiplicity(lam, r, rep), (n, lam, r)
                checked += 1
    return checked


def test_01_defining_closed_form_equals_oracle():
    with criterion(1, "defining multiplicity closed form == oracle, n=3..8") as info:
        start = time.perf_counter()
        info["detail"] = f"[{closed_form_sweep(defining_multiplicity, 'defining')} cases]"
        assert time.perf_counter() - start < 30


def test_02_standard_closed_form_equals_oracle():
    with criterion(2, "standard multiplicity closed form == oracle, n=3..8") as info:
        info["detail"] = f"[{closed_form_sweep(standard_multiplicity, 'standard')} cases]"


def test_03_dimension_sums():
    with criterion(3, "oracle-table dimension sums n^r and (n-1)^r, n<=8, r<=6"):
        for n in range(3, 9):
            for r in range(1, 7):
                a = decompose(n, r, "defining", oracle_only=True)
                b = decompose(n, r, "standard", oracle_only=True)
                assert sum(e.multiplicity * dimension(l) for l, e in a.entries.items()) == n**r
                assert sum(e.multiplicity * dimension(l) for l, e in b.entries.items()) == (n - 1) ** r


def test_04_character_engine():
    with criterion(4, "orthogonality, conjugation sign, Frobenius and hook values"):
        for n in range(1, 9):
            t = character_table(n)
            parts = t.partitions
            for lam in parts:
                for mu in parts:
                    s = sum(t.class_sizes[g] * t.chi(lam, g) * t.chi(mu, g) for g in parts)
                    assert s == (factorial(n) if lam == mu else 0)
                for g in parts:
                    assert t.chi(conjugate(lam), g) == sign(g) * t.chi(lam, g)
            for g in parts:
                for h in parts:
                    s = sum(t.chi(lam, g) * t.chi(lam, h) for lam in parts)
                    assert s == (factorial(n) // t.class_sizes[g] if g == h else 0)
        for n in range(2, 11):
            tau = transposition_type(n)
            for lam in enumerate_partitions(n):
                assert normalized_transposition_char(lam) * dimension(lam) == mn_character(lam, tau)
        for n in range(3, 11):
            for j in range(1, (n - 1) // 2 + 1):
                lam = Partition([n - j] + [1] * j)
                assert normalized_transposition_char(lam) == Fraction(n - 1 - 2 * j, n - 1)


def test_05_chain_law_equals_convolution():
    with criterion(5, "chain law == n!-element convolution, n=3..7, k=0..8"):
        start = time.perf_counter()
        for n in range(3, 8):
            laws = chain_law_by_convolution(n, 8)
            for k in range(9):
                mu = chain_distribution(ChainSpec(n, k))
                for g in enumerate_partitions(n):
                    assert mu[g] == laws[k].get(tuple(g), 0), (n, k, g)
        assert time.perf_counter() - start < 120


def test_06_sandwich():
    with criterion(6, "lower bound <= TV <= spectral bound, n=4..10, k=1..12 (exact)"):
        for n in range(4, 11):
            for k in range(1, 13):
                spec = ChainSpec(n, k)
                tv = exact_tv(spec)
                assert finite_lower_bound(spec) <= tv, (n, k)
                assert 4 * tv * tv <= ds_rhs(spec), (n, k)


def test_07_spectral_bound_trend():
    with criterion(7, "4*bound^2 approaches e^-4c/(1-e^-4c); final gap < 15%") as info:
        details = []
        failures = []
        for c in (0.5, 1.0):
            limit = math.exp(-4 * c) / (1 - math.exp(-4 * c))
            gaps = []
            for n in (8, 12, 16, 20):
                k = math.floor(c * n + 0.5)
                rhs = float(ds_rhs(ChainSpec(n, k)))
                gaps.append(abs(rhs - limit) / limit)
            details.append(f"c={c}: gaps " + ", ".join(f"{g:.1%}" for g in gaps))
            if not all(a > b for a, b in zip(gaps, gaps[1:])):
                failures.append(f"c={c} not monotone")
            if not gaps[-1] < 0.15:
                failures.append(f"c={c} final gap {gaps[-1]:.1%} >= 15%")
        info["detail"] = "[" + "; ".join(details) + "]"
        assert not failures, failures


def test_08_poisson_moment_trend():
    with criterion(8, "fixed-point moments approach Poisson(1-e^-2), n=6,8,10,12"):
        nu = 1 - math.exp(-2)
        for r in (1, 2, 3):
            gaps = [abs(float(moment_direct(ChainSpec(n, n), r)) - poisson_moment(nu, r))
                    for n in (6, 8, 10, 12)]
            assert all(a > b for a, b in zip(gaps, gaps[1:])), (r, gaps)


def test_09_asymptotic_numbers():
    with criterion(9, "asymptotic bounds at c=0.5 to 6 significant figures") as info:
        mpmath.mp.dps = 30
        q = mpmath.exp(-1)
        lo_ref = q / mpmath.e
        hi_ref = q / (2 * mpmath.sqrt(1 - q * q))
        lo, hi = asymptotic_bounds(0.5)
        assert f"{lo:.6g}" == mpmath.nstr(lo_ref, 6) == "0.135335"
        assert f"{hi:.6g}" == mpmath.nstr(hi_ref, 6)
        info["detail"] = f"[({lo:.6g}, {hi:.6g})]"


def test_10_monte_carlo():
    with criterion(10, "Monte Carlo n=6,k=6, 1e5 trials x 3 seeds within 5 SE; byte-stable"):
        start = time.perf_counter()
        spec = ChainSpec(6, 6)
        trials = 100_000
        exact = chain_distribution(spec)
        for seed in (101, 202, 303):
            report = run_chain(spec, trials, seed, workers=1)
            for g, p in exact.masses.items():
                if p < Fraction(1, 1000):
                    continue
                p = float(p)
                se = math.sqrt(p * (1 - p) / trials)
                assert abs(report.frequency(g) - p) < 5 * se, (seed, g)
            first = json.dumps(report.to_dict())
            assert json.dumps(run_chain(spec, trials, seed, workers=1).to_dict()) == first
            assert json.dumps(run_chain(spec, trials, seed, workers=3).to_dict()) == first
        assert time.perf_counter() - start < 60
