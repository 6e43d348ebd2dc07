"""Predecessor search for the 2-reversible process on graphs of max degree 3.

Whether a predecessor exists reduces to a 2SAT instance with one variable
per vertex (true meaning predecessor state +1) and at most three clauses per
vertex.  For a vertex targeting +1: degree 1 pins the vertex to +1; degree 2
demands each neighbor or the vertex itself be +1 and at least one neighbor
+1; degree 3 demands at least two of the three neighbors be +1 regardless of
the vertex's own state.  Targets of -1 use the same clauses with every
literal negated.  The instance is solved by the strongly-connected-component
method on the implication graph.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graphs import Graph, as_config, max_degree

__all__ = [
    "TwoSatInstance",
    "predecessor_clauses",
    "solve_2sat",
    "find_predecessor_deg3",
    "to_dimacs",
]

Literal = tuple[int, bool]  # (variable id, positive?)


@dataclass
class TwoSatInstance:
    num_vars: int
    clauses: list[tuple[Literal, ...]]  # 1 or 2 literals each


def predecessor_clauses(g: Graph, y) -> TwoSatInstance:
    """2SAT instance whose satisfying assignments are the predecessors of y."""
    if max_degree(g) > 3:
        raise ValueError(f"max degree {max_degree(g)} exceeds 3")
    y = as_config(y, g.n)
    adj = g.adjacency()
    clauses: list[tuple[Literal, ...]] = []
    for v in range(g.n):
        pos = bool(y[v] > 0)
        nbs = adj[v]
        d = len(nbs)
        if d <= 1:
            # an isolated or degree-1 vertex can never flip under k = 2
            clauses.append(((v, pos),))
        elif d == 2:
            u, w = nbs
            clauses.append(((v, pos), (u, pos)))
            clauses.append(((v, pos), (w, pos)))
            clauses.append(((u, pos), (w, pos)))
        else:
            u, w, z = nbs
            clauses.append(((u, pos), (w, pos)))
            clauses.append(((u, pos), (z, pos)))
            clauses.append(((w, pos), (z, pos)))
    return TwoSatInstance(g.n, clauses)


def _node(lit: Literal) -> int:
    v, positive = lit
    return 2 * v if positive else 2 * v + 1


def solve_2sat(inst: TwoSatInstance) -> list[bool] | None:
    """Satisfying assignment, or None.

    Tarjan's algorithm numbers strongly connected components of the
    implication graph in reverse topological order; a variable is set true
    iff its positive literal's component finishes before its negation's.
    Deterministic for a fixed clause order.
    """
    nn = 2 * inst.num_vars
    src: list[int] = []
    dst: list[int] = []
    for cl in inst.clauses:
        if len(cl) == 1:
            a = _node(cl[0])
            src.append(a ^ 1)
            dst.append(a)
        elif len(cl) == 2:
            a, b = _node(cl[0]), _node(cl[1])
            src.append(a ^ 1)
            dst.append(b)
            src.append(b ^ 1)
            dst.append(a)
        else:
            raise ValueError("clauses must have 1 or 2 literals")
    order = sorted(range(len(src)), key=src.__getitem__)
    indices = [dst[i] for i in order]
    indptr = [0] * (nn + 1)
    for s in src:
        indptr[s + 1] += 1
    for i in range(nn):
        indptr[i + 1] += indptr[i]

    index = [-1] * nn
    low = [0] * nn
    comp = [-1] * nn
    on_stack = bytearray(nn)
    cursor = [0] * nn
    tstack: list[int] = []
    counter = 0
    ncomp = 0
    for s0 in range(nn):
        if index[s0] >= 0:
            continue
        index[s0] = low[s0] = counter
        counter += 1
        tstack.append(s0)
        on_stack[s0] = 1
        cursor[s0] = indptr[s0]
        call = [s0]
        while call:
            v = call[-1]
            if cursor[v] < indptr[v + 1]:
                w = indices[cursor[v]]
                cursor[v] += 1
                if index[w] < 0:
                    index[w] = low[w] = counter
                    counter += 1
                    tstack.append(w)
                    on_stack[w] = 1
                    cursor[w] = indptr[w]
                    call.append(w)
                elif on_stack[w] and index[w] < low[v]:
                    low[v] = index[w]
            else:
                call.pop()
                if call and low[v] < low[call[-1]]:
                    low[call[-1]] = low[v]
                if low[v] == index[v]:
                    while True:
                        w = tstack.pop()
                        on_stack[w] = 0
                        comp[w] = ncomp
                        if w == v:
                            break
                    ncomp += 1

    assignment = [False] * inst.num_vars
    for v in range(inst.num_vars):
        cp, cn = comp[2 * v], comp[2 * v + 1]
        if cp == cn:
            return None
        assignment[v] = cp < cn
    return assignment


def find_predecessor_deg3(g: Graph, y) -> np.ndarray | None:
    """Witness predecessor of y under k = 2 on a max-degree-3 graph."""
    assignment = solve_2sat(predecessor_clauses(g, y))
    if assignment is None:
        return None
    return np.array([1 if b else -1 for b in assignment], dtype=np.int8)


def to_dimacs(inst: TwoSatInstance) -> str:
    """DIMACS CNF serialization (1-based signed variables)."""
    lines = [f"p cnf {inst.num_vars} {len(inst.clauses)}"]
    for cl in inst.clauses:
        lits = " ".join(str(v + 1 if positive else -(v + 1)) for v, positive in cl)
        lines.append(f"{lits} 0")
    return "\n".join(lines) + "\n"
