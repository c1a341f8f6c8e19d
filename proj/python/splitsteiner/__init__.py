"""Steiner trees on split graphs.

Vertex ids are 0-based here; the SSTP and X3C text formats stay 1-based.
"""

from ._core import (
    BudgetError,
    Error,
    GraphError,
    HardInstanceError,
    Instance,
    NotSplitError,
    ParseError,
    Partition,
    PreconditionError,
    brute_force_steiner,
    find_induced_star,
    gen_split,
    gen_x3c,
    maximum_matching,
    parse_instance,
    reduce_x3c,
    solve,
    solve_x3c_bruteforce,
    split_partition,
    verify_solution,
)

__all__ = [
    "BudgetError",
    "Error",
    "GraphError",
    "HardInstanceError",
    "Instance",
    "NotSplitError",
    "ParseError",
    "Partition",
    "PreconditionError",
    "brute_force_steiner",
    "find_induced_star",
    "gen_split",
    "gen_x3c",
    "maximum_matching",
    "parse_instance",
    "reduce_x3c",
    "solve",
    "solve_x3c_bruteforce",
    "split_partition",
    "verify_solution",
]
