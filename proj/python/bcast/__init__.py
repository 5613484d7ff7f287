"""Broadcast independence and packing solvers (C++ core)."""

from ._core import (
    Error,
    Graph,
    approx_bi,
    is_valid,
    oracle,
    run_cli,
    solve,
    treewidth_upper_bound,
    truncate,
)

__all__ = [
    "Error",
    "Graph",
    "approx_bi",
    "is_valid",
    "oracle",
    "run_cli",
    "solve",
    "treewidth_upper_bound",
    "truncate",
]
