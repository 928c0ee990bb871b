"""Exact enumeration of simultaneous core partitions via poset order ideals."""

from ._cores import (
    Poset,
    average_size,
    beta_set,
    catalan,
    conjugate,
    core_count,
    core_size_sum,
    cores_up_to,
    hook_lengths,
    ideal_cardinality_sum,
    ideal_rank_sum,
    is_core,
    max_core,
    max_size,
    max_size_report,
    motzkin,
    pair_core_count,
    pair_core_max_size,
    partition_from_beta,
    partition_size,
    series_coefficients,
)

__all__ = [
    "Poset",
    "average_size",
    "beta_set",
    "catalan",
    "conjugate",
    "core_count",
    "core_size_sum",
    "cores_up_to",
    "hook_lengths",
    "ideal_cardinality_sum",
    "ideal_rank_sum",
    "is_core",
    "max_core",
    "max_size",
    "max_size_report",
    "motzkin",
    "pair_core_count",
    "pair_core_max_size",
    "partition_from_beta",
    "partition_size",
    "series_coefficients",
]

__version__ = "0.1.0"
