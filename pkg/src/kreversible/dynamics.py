"""Synchronous update rule of the k-reversible process.

A vertex flips its state exactly when at least k of its neighbors currently
hold the opposite state; otherwise it keeps its state.  All vertices update
simultaneously.
"""

from __future__ import annotations

import numpy as np

from .graphs import Graph, as_config

__all__ = ["check_k", "step", "simulate", "is_predecessor"]


def check_k(k: int) -> int:
    if int(k) != k or k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")
    return int(k)


def step(g: Graph, k: int, y) -> np.ndarray:
    """One synchronous update; returns a fresh configuration."""
    k = check_k(k)
    y = as_config(y, g.n)
    eu, ev = g.edge_arrays()
    su, sv = y[eu], y[ev]
    differs = su != sv
    du, dv = eu[differs], ev[differs]
    diff_count = np.bincount(du, minlength=g.n) + np.bincount(dv, minlength=g.n)
    return np.where(diff_count >= k, -y, y).astype(np.int8)


def simulate(g: Graph, k: int, y, t: int) -> np.ndarray:
    """t-fold composition of step; t=0 returns the (validated) input."""
    check_k(k)
    if int(t) != t or t < 0:
        raise ValueError(f"step count must be nonnegative, got {t!r}")
    y = as_config(y, g.n)
    for _ in range(int(t)):
        y = step(g, k, y)
    return y


def is_predecessor(g: Graph, k: int, candidate, target) -> bool:
    """True iff one step from candidate yields target."""
    target = as_config(target, g.n)
    return bool(np.array_equal(step(g, k, candidate), target))
