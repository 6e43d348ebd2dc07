"""Exact predecessor counting on trees, for any threshold k.

Per vertex v and parent state c, a pair holds the number of predecessors of
the target restricted to v's subtree with v at +1 and at -1.  Whether a
candidate state for v is consistent depends only on how many children sit in
v's target state, so the children combine through a small counting DP (ways
to have exactly j children in the target state) instead of enumerating child
subsets.  Counts are exact Python integers; they grow exponentially in n.
"""

from __future__ import annotations

from .graphs import RootedTree, config_list
from .dynamics import check_k

__all__ = [
    "children_threshold",
    "count_predecessors_tree",
    "count_predecessors_tree_by_subsets",
]

_LEAF_ROW = (1,)


def children_threshold(degree: int, target: int, current: int, parent_state: int | None, k: int) -> int:
    """Minimum number of children in the target state for v's transition.

    ``degree`` is v's degree in the underlying graph; ``parent_state`` is
    None for the root.  A vertex currently agreeing with its target must not
    see k differing neighbors; one disagreeing must see at least k.
    """
    if current == target:
        if parent_state == target:
            return max(degree - k, 0)
        return max(degree - k + 1, 0)
    if parent_state == target:
        return k - 1
    return k


def count_predecessors_tree(tree: RootedTree, k: int, y) -> int:
    """Exact number of predecessors of y on the tree."""
    k = check_k(k)
    n = tree.graph.n
    ys = config_list(y, n)
    deg = tree.graph.degree_list()
    cptr, cidx = tree.child_slices()
    root = tree.root
    # pair (count at +1, count at -1) per vertex, one table per parent context
    ctx_minus: list = [None] * n
    ctx_plus: list = [None] * n
    for v in reversed(tree.bfs_order):
        a, b = cptr[v], cptr[v + 1]
        tgt = ys[v]
        if a == b:
            row_t = row_o = _LEAF_ROW
        else:
            # row_t: v in its target state; row_o: v in the opposite state;
            # cell j = ways for exactly j children to sit in the target state
            row_t = [1]
            row_o = [1]
            for fi in range(a, b):
                pair_t = (ctx_plus if tgt > 0 else ctx_minus)[cidx[fi]]
                pair_o = (ctx_minus if tgt > 0 else ctx_plus)[cidx[fi]]
                if tgt > 0:
                    wt_t, wo_t = pair_t
                    wt_o, wo_o = pair_o
                else:
                    wo_t, wt_t = pair_t
                    wo_o, wt_o = pair_o
                width = len(row_t)
                new_t = [0] * (width + 1)
                new_o = [0] * (width + 1)
                carry_t = carry_o = 0
                for j in range(width):
                    wt = row_t[j]
                    wo = row_o[j]
                    new_t[j] = wt * wo_t + carry_t
                    new_o[j] = wo * wo_o + carry_o
                    carry_t = wt * wt_t
                    carry_o = wo * wt_o
                new_t[width] = carry_t
                new_o[width] = carry_o
                row_t = new_t
                row_o = new_o
        # thresholds per parent context (same branch table as children_threshold)
        d = deg[v]
        l_agree = d - k
        l_help = k - 1
        if v == root:
            lt = l_agree + 1
            total = sum(row_t[lt if lt > 0 else 0:])
            if k <= b - a:
                total += sum(row_o[k:])
            return total
        e_t_same = sum(row_t[l_agree if l_agree > 0 else 0:])
        la = l_agree + 1
        e_t_diff = sum(row_t[la if la > 0 else 0:])
        e_o_same = sum(row_o[l_help if l_help > 0 else 0:]) if l_help <= b - a else 0
        e_o_diff = sum(row_o[k:]) if k <= b - a else 0
        # pair order: (count with v at +1, count with v at -1);
        # same/diff mean the parent context agreeing with the target or not
        if tgt > 0:
            ctx_plus[v] = (e_t_same, e_o_same)
            ctx_minus[v] = (e_t_diff, e_o_diff)
        else:
            ctx_minus[v] = (e_o_same, e_t_same)
            ctx_plus[v] = (e_o_diff, e_t_diff)
    raise AssertionError("unreachable: bfs_order always ends at the root")


def count_predecessors_tree_by_subsets(tree: RootedTree, k: int, y, max_children: int = 10) -> int:
    """Reference counter that enumerates child subsets instead of the DP.

    Exponential in the child count (guarded by ``max_children``); kept as an
    independent cross-check for the production DP.
    """
    k = check_k(k)
    n = tree.graph.n
    ys = config_list(y, n)
    deg = tree.graph.degree_list()
    cptr, cidx = tree.child_slices()
    root = tree.root
    ctx_minus: list = [None] * n
    ctx_plus: list = [None] * n

    def tally(kids, pair_for_rt, tgt, l):
        total = 0
        for mask in range(1 << len(kids)):
            if bin(mask).count("1") < l:
                continue
            ways = 1
            for i, f in enumerate(kids):
                plus, minus = pair_for_rt[f]
                if (mask >> i) & 1:
                    ways *= plus if tgt > 0 else minus
                else:
                    ways *= minus if tgt > 0 else plus
            total += ways
        return total

    for v in reversed(tree.bfs_order):
        kids = cidx[cptr[v]:cptr[v + 1]]
        if len(kids) > max_children:
            raise ValueError(f"vertex {v} has {len(kids)} children, above the guard")
        d = deg[v]
        tgt = ys[v]
        if v == root:
            at_plus = tally(kids, ctx_plus, tgt, children_threshold(d, tgt, 1, None, k))
            at_minus = tally(kids, ctx_minus, tgt, children_threshold(d, tgt, -1, None, k))
            return at_plus + at_minus
        ctx_minus[v] = (
            tally(kids, ctx_plus, tgt, children_threshold(d, tgt, 1, -1, k)),
            tally(kids, ctx_minus, tgt, children_threshold(d, tgt, -1, -1, k)),
        )
        ctx_plus[v] = (
            tally(kids, ctx_plus, tgt, children_threshold(d, tgt, 1, 1, k)),
            tally(kids, ctx_minus, tgt, children_threshold(d, tgt, -1, 1, k)),
        )
    raise AssertionError("unreachable: bfs_order always ends at the root")
