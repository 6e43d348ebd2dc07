"""Linear-time predecessor search for the 1-reversible process.

With k = 1, two adjacent vertices sharing a state in the target must share a
state in any predecessor, so the target partitions the graph into maximal
connected same-state regions.  A vertex whose neighbors all agree with it is
*locked* (its predecessor state is forced), and so is any region containing
one.  A predecessor exists iff no two locked regions touch and every vertex
of an unlocked region has a neighbor in another unlocked region; flipping
all unlocked regions then yields a witness.

Small graphs run through plain Python traversal; large ones through
vectorized labeling.  Both paths produce identical partitions.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graphs import Graph, as_config, component_labels

__all__ = ["SameStatePartition", "same_state_partition", "find_predecessor_k1"]

_SMALL_N = 512


@dataclass(frozen=True)
class SameStatePartition:
    """Maximal connected same-state regions of a target configuration.

    Regions are numbered in order of their smallest vertex.
    """

    component: np.ndarray        # region label per vertex
    component_state: np.ndarray  # shared state per region
    component_locked: np.ndarray # region contains a locked vertex
    vertex_locked: np.ndarray    # all of the vertex's neighbors agree with it

    @property
    def n_components(self) -> int:
        return int(self.component_state.shape[0])


def _partition_small(g: Graph, ys: list[int]):
    adj = g.adjacency()
    n = g.n
    comp = [-1] * n
    comp_state: list[int] = []
    for s in range(n):
        if comp[s] >= 0:
            continue
        cid = len(comp_state)
        st = ys[s]
        comp_state.append(st)
        comp[s] = cid
        stack = [s]
        while stack:
            v = stack.pop()
            for u in adj[v]:
                if comp[u] < 0 and ys[u] == st:
                    comp[u] = cid
                    stack.append(u)
    vertex_locked = [all(ys[u] == ys[v] for u in adj[v]) for v in range(n)]
    comp_locked = [False] * len(comp_state)
    for v in range(n):
        if vertex_locked[v]:
            comp_locked[comp[v]] = True
    return comp, comp_state, comp_locked, vertex_locked


def _partition_large(g: Graph, y: np.ndarray):
    eu, ev = g.edge_arrays()
    same = y[eu] == y[ev]
    labels = component_labels(g.n, eu[same], ev[same])
    diff_u, diff_v = eu[~same], ev[~same]
    diff_count = np.bincount(diff_u, minlength=g.n) + np.bincount(diff_v, minlength=g.n)
    vertex_locked = diff_count == 0
    ncomp = int(labels.max()) + 1 if g.n else 0
    component_state = np.zeros(ncomp, dtype=np.int8)
    component_state[labels] = y
    component_locked = np.zeros(ncomp, dtype=bool)
    component_locked[labels[vertex_locked]] = True
    return labels, component_state, component_locked, vertex_locked


def same_state_partition(g: Graph, y) -> SameStatePartition:
    y = as_config(y, g.n)
    if g.n < _SMALL_N:
        comp, comp_state, comp_locked, vertex_locked = _partition_small(g, y.tolist())
        return SameStatePartition(
            np.array(comp, dtype=np.int64),
            np.array(comp_state, dtype=np.int8),
            np.array(comp_locked, dtype=bool),
            np.array(vertex_locked, dtype=bool),
        )
    labels, component_state, component_locked, vertex_locked = _partition_large(g, y)
    return SameStatePartition(labels, component_state, component_locked, vertex_locked)


def _find_small(g: Graph, y: np.ndarray) -> np.ndarray | None:
    ys = y.tolist()
    comp, _, comp_locked, _ = _partition_small(g, ys)
    adj = g.adjacency()
    for v in range(g.n):
        sv = ys[v]
        if comp_locked[comp[v]]:
            for u in adj[v]:
                if ys[u] != sv and comp_locked[comp[u]]:
                    return None  # two locked regions touch
        else:
            if not any(ys[u] != sv and not comp_locked[comp[u]] for u in adj[v]):
                return None  # unlocked vertex without unlocked outside support
    return np.array(
        [sv if comp_locked[comp[v]] else -sv for v, sv in enumerate(ys)], dtype=np.int8
    )


def _find_large(g: Graph, y: np.ndarray) -> np.ndarray | None:
    labels, _, locked, _ = _partition_large(g, y)
    eu, ev = g.edge_arrays()
    differs = y[eu] != y[ev]
    du, dv = eu[differs], ev[differs]
    lu, lv = locked[labels[du]], locked[labels[dv]]
    if np.any(lu & lv):
        return None
    supported = np.zeros(g.n, dtype=bool)
    supported[du[~lv]] = True
    supported[dv[~lu]] = True
    vertex_unlocked = ~locked[labels]
    if np.any(vertex_unlocked & ~supported):
        return None
    return np.where(vertex_unlocked, -y, y).astype(np.int8)


def find_predecessor_k1(g: Graph, y) -> np.ndarray | None:
    """Witness predecessor for k = 1, or None if the target has none."""
    y = as_config(y, g.n)
    if g.n < _SMALL_N:
        return _find_small(g, y)
    return _find_large(g, y)
