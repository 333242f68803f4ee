"""The chain "one uniform n-cycle, then k uniform transpositions" on S_n.

Every increment is a class measure, so the law of X_{k+1} is a class
function and its Fourier transform at S^lam is the scalar

    (chi^lam(n-cycle) / dim) * (chi^lam(tau) / dim)^k.

Inverting gives exact class masses. All quantities are exact rationals;
floats appear only in asymptotic formulas and at final square roots.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .characters import (
    character_table,
    mn_character,
    ncycle_character,
    normalized_transposition_char,
)
from .errors import ConsistencyError, ParityMismatchError, WeightMismatchError
from .exactmath import stirling2
from .partitions import (
    Partition,
    class_size,
    dimension,
    enumerate_partitions,
    fixed_points,
    is_proper_hook,
    sign,
)
from .tensor import in_closed_form_range, defining_multiplicity, oracle_multiplicity


@dataclass(frozen=True)
class ChainSpec:
    n: int
    k: int

    def __post_init__(self):
        if self.n < 3:
            raise ValueError(f"deck size must be >= 3, got {self.n}")
        if self.k < 0:
            raise ValueError(f"k must be >= 0, got {self.k}")

    @property
    def parity(self) -> str:
        """Coset of X_{k+1}: an n-cycle has sign (-1)^(n-1), each transposition -1."""
        return "even" if (self.n - 1 + self.k) % 2 == 0 else "odd"


@dataclass(frozen=True)
class ClassDistribution:
    n: int
    masses: dict  # Partition -> Fraction, one entry per class of S_n
    parity: str

    def __post_init__(self):
        total = sum(self.masses.values(), Fraction(0))
        if total != 1:
            raise ConsistencyError(f"total mass {total} != 1")
        want = 1 if self.parity == "even" else -1
        for g, m in self.masses.items():
            if m < 0:
                raise ConsistencyError(f"negative mass {m} on class {g}")
            if m and sign(g) != want:
                raise ConsistencyError(f"mass on class {g} outside the {self.parity} coset")

    def __getitem__(self, gamma) -> Fraction:
        return self.masses.get(Partition(gamma), Fraction(0))

    def support(self) -> list:
        return [g for g, m in self.masses.items() if m]


def _transform_scalars(spec: ChainSpec, lams) -> dict:
    """tr of the Fourier transform at S^lam, divided by dim: the scalar r_lam."""
    out = {}
    for lam in lams:
        c = ncycle_character(lam)
        if c == 0:
            out[lam] = Fraction(0)
            continue
        out[lam] = Fraction(c, dimension(lam)) * normalized_transposition_char(lam) ** spec.k
    return out


def chain_distribution(spec: ChainSpec, *, ceiling: int | None = None) -> ClassDistribution:
    """Exact law of X_{k+1} on conjugacy classes by Fourier inversion."""
    n = spec.n
    table = character_table(n, ceiling)
    nfact = math.factorial(n)
    scalars = _transform_scalars(spec, table.partitions)
    weights = {lam: table.dims[lam] * s for lam, s in scalars.items() if s}
    masses = {}
    for g in table.partitions:
        point = sum((w * table.chi(lam, g) for lam, w in weights.items()), Fraction(0))
        masses[g] = point * table.class_sizes[g] / nfact
    return ClassDistribution(n, masses, spec.parity)


def reference_measure(n: int, parity: str) -> ClassDistribution:
    """Uniform measure on A_n (even) or on S_n minus A_n (odd)."""
    if n < 3:
        raise ValueError("n must be >= 3")
    if parity not in ("even", "odd"):
        raise ValueError(f"parity must be 'even' or 'odd', got {parity!r}")
    want = 1 if parity == "even" else -1
    half = math.factorial(n) // 2
    masses = {
        g: Fraction(class_size(g), half) if sign(g) == want else Fraction(0)
        for g in enumerate_partitions(n)
    }
    return ClassDistribution(n, masses, parity)


def total_variation(p: ClassDistribution, q: ClassDistribution) -> Fraction:
    if p.n != q.n:
        raise WeightMismatchError(f"distributions on S_{p.n} and S_{q.n}")
    if p.parity != q.parity:
        raise ParityMismatchError(f"{p.parity} vs {q.parity} coset")
    classes = set(p.masses) | set(q.masses)
    return sum((abs(p[g] - q[g]) for g in classes), Fraction(0)) / 2


def fixed_point_free_mass(d: ClassDistribution) -> Fraction:
    return sum((m for g, m in d.masses.items() if fixed_points(g) == 0), Fraction(0))


def finite_lower_bound(spec: ChainSpec, *, ceiling: int | None = None) -> Fraction:
    """|mu(derangements) - U(derangements)|, a lower bound on the exact TV."""
    mu = chain_distribution(spec, ceiling=ceiling)
    ref = reference_measure(spec.n, spec.parity)
    return abs(fixed_point_free_mass(mu) - fixed_point_free_mass(ref))


def exact_tv(spec: ChainSpec, *, ceiling: int | None = None) -> Fraction:
    mu = chain_distribution(spec, ceiling=ceiling)
    return total_variation(mu, reference_measure(spec.n, spec.parity))


def ds_rhs(spec: ChainSpec, *, hooks_only: bool = False) -> Fraction:
    """Right-hand side bounding 4 * TV^2 for the n-cycle-then-transpositions chain.

    (1/2) * sum over lam other than (n), (1^n) of
    dim^2 * (chi(tau)/dim)^(2k) * (chi(n-cycle)/dim)^2.
    """
    n = spec.n
    trivial, sgn = Partition([n]), Partition([1] * n)
    total = Fraction(0)
    for lam in enumerate_partitions(n):
        if lam in (trivial, sgn):
            continue
        if hooks_only and not is_proper_hook(lam):
            continue
        d = dimension(lam)
        cyc = Fraction(mn_character(lam, Partition([n])), d)
        total += d * d * normalized_transposition_char(lam) ** (2 * spec.k) * cyc * cyc
    return total / 2


def ds_upper_bound(spec: ChainSpec) -> float:
    """Upper bound on TV(mu_{k+1}, U_{k+1}): sqrt(rhs / 4)."""
    full = ds_rhs(spec)
    if full != ds_rhs(spec, hooks_only=True):
        raise ConsistencyError("non-hook irreps contributed to the spectral sum")
    return math.sqrt(full / 4)


def classic_rt_rhs(n: int, k: int) -> Fraction:
    """Right-hand side bounding 4 * TV^2 after k lazy random-transposition steps."""
    if n < 3:
        raise ValueError("n must be >= 3")
    total = Fraction(0)
    for lam in enumerate_partitions(n)[1:]:
        d = dimension(lam)
        eig = Fraction(1, n) + Fraction(n - 1, n) * normalized_transposition_char(lam)
        total += d * d * eig ** (2 * k)
    return total


def classic_rt_upper_bound(n: int, k: int) -> float:
    return math.sqrt(classic_rt_rhs(n, k) / 4)


def asymptotic_bounds(c: float) -> tuple[float, float]:
    """Limiting (lower, upper) TV bounds after one n-cycle and c*n transpositions."""
    if not c > 0:
        raise ValueError(f"c must be positive, got {c}")
    q = math.exp(-2 * c)
    return q / math.e, q / (2 * math.sqrt(1 - q * q))


def moment_direct(spec: ChainSpec, r: int, *, ceiling: int | None = None) -> Fraction:
    """E[fix^r] under the chain law, summed class by class."""
    mu = chain_distribution(spec, ceiling=ceiling)
    return sum((m * fixed_points(g) ** r for g, m in mu.masses.items()), Fraction(0))


def moment_via_decomposition(spec: ChainSpec, r: int, *, ceiling: int | None = None) -> Fraction:
    """E[fix^r] as sum_lam a_{lam,r} * chi^lam(n-cycle) * (chi^lam(tau)/dim)^k.

    Uses the closed-form multiplicity inside its range and the class-sum
    oracle elsewhere.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    total = Fraction(0)
    for lam in enumerate_partitions(spec.n):
        c = ncycle_character(lam)
        if c == 0:
            continue
        if in_closed_form_range(lam, r):
            a = defining_multiplicity(lam, r)
        else:
            a = oracle_multiplicity(lam, r, "defining", ceiling=ceiling)
        if a:
            total += a * c * normalized_transposition_char(lam) ** spec.k
    return total


def poisson_moment(nu, r: int):
    """r-th raw moment of Poisson(nu): sum_i S(r, i) nu^i.

    Exact when ``nu`` is a Fraction or int, float otherwise.
    """
    if nu < 0:
        raise ValueError("nu must be nonnegative")
    return sum(stirling2(r, i) * nu**i for i in range(r + 1))
