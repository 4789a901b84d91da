"""Approximation pipelines for tracking paths, fault tolerant feedback vertex
set and vertex multicut, with exact oracles for small instances."""

from ._core import (
    CapExceeded,
    Graph,
    GraphError,
    InfeasibleInstance,
    TrackcutError,
    approx_fvs,
    exact_ftfvs,
    exact_fvs,
    exact_tracking,
    girth,
    hardness_gadget,
    is_tracking_set,
    parse_instance,
    run_cli,
    solve_ftfvs,
    solve_mcf_chordal,
    solve_mcf_forest,
    solve_tracking,
    verify_ftfvs,
)

__all__ = [
    "CapExceeded",
    "Graph",
    "GraphError",
    "InfeasibleInstance",
    "TrackcutError",
    "approx_fvs",
    "exact_ftfvs",
    "exact_fvs",
    "exact_tracking",
    "girth",
    "hardness_gadget",
    "is_tracking_set",
    "parse_instance",
    "run_cli",
    "solve_ftfvs",
    "solve_mcf_chordal",
    "solve_mcf_forest",
    "solve_tracking",
    "verify_ftfvs",
]
