"""Linear-time predecessor search on trees, for any threshold k.

Working over a rooted tree, ``forced state of v given parent state c`` is
the state v must hold in any predecessor of the target restricted to v's
subtree, with the parent pinned to c.  When both states work the tie breaks
to the parent's target state (root: +1), which can only help the parent's
own transition.  Entries are memoized, so each vertex is visited at most
four times; an explicit stack stands in for recursion so that path graphs
of a million vertices stay well inside interpreter limits.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graphs import RootedTree, config_list
from .dynamics import check_k

__all__ = [
    "UNSET",
    "INFEASIBLE",
    "ForcedStateTable",
    "transition_possible",
    "compute_forced_states",
    "find_predecessor_tree",
]

UNSET = 0
INFEASIBLE = 2


def transition_possible(target: int, current: int, differing: int, k: int) -> bool:
    """Can a vertex in `current` with `differing` opposite neighbors reach `target`?"""
    if current == target:
        return differing < k
    return differing >= k


@dataclass
class ForcedStateTable:
    """Memo table of forced states plus the per-vertex visit counters."""

    tree: RootedTree
    k: int
    root_entry: int
    visits: list[int]
    _minus: list[int]
    _plus: list[int]

    def entry(self, v: int, parent_state: int | None = None) -> int:
        """Forced state of v given the parent's state (None for the root)."""
        if parent_state is None:
            if v != self.tree.root:
                raise ValueError("only the root has a parent-free entry")
            return self.root_entry
        return (self._minus if parent_state < 0 else self._plus)[v]


def compute_forced_states(tree: RootedTree, k: int, y) -> ForcedStateTable:
    k = check_k(k)
    n = tree.graph.n
    ys = config_list(y, n)
    parent = tree.parent
    cptr, cidx = tree.child_slices()
    root = tree.root
    # first candidate per vertex: the parent's target state (root prefers +1)
    pref = [1 if parent[v] is None else ys[parent[v]] for v in range(n)]
    tm = [UNSET] * n
    tp = [UNSET] * n
    root_slot = [UNSET]
    visits = [0] * n
    visits[root] = 1

    # frames: vertex, parent context (-1/+1, 0 = none), code = trial*2 + phase
    sv = [root]
    sc = [0]
    scode = [0]
    while sv:
        v = sv.pop()
        c = sc.pop()
        code = scode.pop()
        trial, phase = code >> 1, code & 1
        st = pref[v] if trial == 0 else -pref[v]
        tblc = tm if st < 0 else tp
        a, b = cptr[v], cptr[v + 1]
        l = 1 if c == -st else 0
        ok = True
        if phase == 0:
            missing = None
            for fi in range(a, b):
                f = cidx[fi]
                visits[f] += 1
                e = tblc[f]
                if e == UNSET:
                    if missing is None:
                        missing = [f]
                    else:
                        missing.append(f)
                elif e == INFEASIBLE:
                    ok = False
                elif e == -st:
                    l += 1
            if missing is not None:
                sv.append(v)
                sc.append(c)
                scode.append(code | 1)
                for f in missing:
                    sv.append(f)
                    sc.append(st)
                    scode.append(0)
                continue
        else:
            for fi in range(a, b):
                e = tblc[cidx[fi]]
                if e == INFEASIBLE:
                    ok = False
                elif e == -st:
                    l += 1
        tgt = ys[v]
        if ok and not ((st == tgt and l >= k) or (st != tgt and l < k)):
            value = st
        elif trial == 0:
            sv.append(v)
            sc.append(c)
            scode.append(2)
            continue
        else:
            value = INFEASIBLE
        if c < 0:
            tm[v] = value
        elif c > 0:
            tp[v] = value
        else:
            root_slot[0] = value

    return ForcedStateTable(tree, k, root_slot[0], visits, tm, tp)


def find_predecessor_tree(tree: RootedTree, k: int, y) -> np.ndarray | None:
    """Witness predecessor of y on the tree, or None if y has none."""
    table = compute_forced_states(tree, k, y)
    if table.root_entry == INFEASIBLE:
        return None
    n = tree.graph.n
    cptr, cidx = tree.child_slices()
    w = [0] * n
    w[tree.root] = table.root_entry
    tm, tp = table._minus, table._plus
    for v in tree.bfs_order:
        tbl = tm if w[v] < 0 else tp
        for fi in range(cptr[v], cptr[v + 1]):
            f = cidx[fi]
            w[f] = tbl[f]
    return np.array(w, dtype=np.int8)
