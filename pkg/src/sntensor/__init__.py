"""Tensor-power decompositions and shuffle-chain mixing analysis for S_n."""

__version__ = "0.1.0"

from .errors import (
    ConsistencyError,
    ParityMismatchError,
    ResourceLimitError,
    SnTensorError,
    ValidityRangeError,
    WeightMismatchError,
)
from .exactmath import Ratio, bell, binomial, stirling2
from .partitions import (
    Partition,
    class_size,
    conjugate,
    dimension,
    enumerate_partitions,
    fixed_points,
    hook_height,
    is_proper_hook,
    truncate,
)
from .characters import (
    CharacterTable,
    character_table,
    mn_character,
    ncycle_character,
    normalized_transposition_char,
)
from .tensor import (
    DecompositionTable,
    decompose,
    defining_multiplicity,
    oracle_multiplicity,
    standard_multiplicity,
)
from .mixing import (
    ChainSpec,
    ClassDistribution,
    asymptotic_bounds,
    chain_distribution,
    classic_rt_upper_bound,
    ds_upper_bound,
    finite_lower_bound,
    fixed_point_free_mass,
    moment_direct,
    moment_via_decomposition,
    poisson_moment,
    reference_measure,
    total_variation,
)
from .simulate import SimulationReport, empirical_tv, run_chain
