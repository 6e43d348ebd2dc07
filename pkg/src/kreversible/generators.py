"""Seeded generators for graphs, trees, and configurations.

Every generator is deterministic in its seed so emitted instances are
byte-identical across runs and usable as frozen test fixtures.
"""

from __future__ import annotations

import random

import numpy as np

from .graphs import Graph

__all__ = [
    "tree_from_pruefer",
    "random_tree",
    "random_config",
    "random_graph",
    "random_bounded_degree_graph",
    "random_regular_graph",
    "hub_spokes_tree",
]


def tree_from_pruefer(seq) -> Graph:
    """Decode a Pruefer sequence over 0..n-1 (n = len(seq) + 2) into a tree."""
    seq = list(seq)
    n = len(seq) + 2
    deg = [1] * n
    for x in seq:
        if not 0 <= x < n:
            raise ValueError(f"sequence entry {x} out of range")
        deg[x] += 1
    edges = []
    ptr = 0
    while deg[ptr] != 1:
        ptr += 1
    leaf = ptr
    for x in seq:
        edges.append((leaf, x))
        deg[x] -= 1
        if deg[x] == 1 and x < ptr:
            leaf = x
        else:
            ptr += 1
            while deg[ptr] != 1:
                ptr += 1
            leaf = ptr
    edges.append((leaf, n - 1))
    return Graph(n, edges)


def random_tree(n: int, seed: int) -> Graph:
    """Uniform random labeled tree on n vertices."""
    if n < 1:
        raise ValueError("tree needs at least one vertex")
    if n == 1:
        return Graph(1, [])
    if n == 2:
        return Graph(2, [(0, 1)])
    rng = np.random.default_rng(seed)
    return tree_from_pruefer(rng.integers(0, n, size=n - 2).tolist())


def random_config(n: int, seed: int) -> np.ndarray:
    rng = random.Random(seed)
    return np.array([rng.choice((-1, 1)) for _ in range(n)], dtype=np.int8)


def random_graph(n: int, m: int, seed: int) -> Graph:
    """Uniform random simple graph with exactly m edges."""
    limit = n * (n - 1) // 2
    if m > limit:
        raise ValueError(f"m={m} exceeds the {limit} possible edges")
    if n <= 2048:
        rng = random.Random(seed)
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        chosen = rng.sample(pairs, m)
        return Graph(n, chosen)
    rng = np.random.default_rng(seed)
    codes = np.empty(0, dtype=np.int64)
    while codes.size < m:
        want = (m - codes.size) * 2 + 16
        u = rng.integers(0, n, size=want)
        v = rng.integers(0, n, size=want)
        keep = u != v
        lo = np.minimum(u[keep], v[keep])
        hi = np.maximum(u[keep], v[keep])
        codes = np.unique(np.concatenate([codes, lo * n + hi]))
    codes = np.sort(rng.choice(codes, size=m, replace=False))
    return Graph(n, np.stack([codes // n, codes % n], axis=1))


def random_bounded_degree_graph(n: int, max_deg: int, seed: int, m: int | None = None) -> Graph:
    """Random simple graph greedily respecting a degree cap."""
    rng = random.Random(seed)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(pairs)
    deg = [0] * n
    edges = []
    for u, v in pairs:
        if m is not None and len(edges) >= m:
            break
        if deg[u] < max_deg and deg[v] < max_deg:
            deg[u] += 1
            deg[v] += 1
            edges.append((u, v))
    return Graph(n, edges)


def random_regular_graph(n: int, d: int, seed: int, max_tries: int = 500) -> Graph:
    """Random d-regular simple graph via stub pairing with retries."""
    if n * d % 2:
        raise ValueError("n*d must be even")
    if d >= n:
        raise ValueError("degree must be below n")
    rng = np.random.default_rng(seed)
    stubs = np.repeat(np.arange(n, dtype=np.int64), d)
    for _ in range(max_tries):
        perm = rng.permutation(stubs)
        u, v = perm[0::2], perm[1::2]
        if np.any(u == v):
            continue
        lo, hi = np.minimum(u, v), np.maximum(u, v)
        codes = lo * n + hi
        if np.unique(codes).size != codes.size:
            continue
        return Graph(n, np.stack([lo, hi], axis=1))
    raise RuntimeError(f"no simple {d}-regular pairing found in {max_tries} tries")


def hub_spokes_tree(p: int) -> Graph:
    """Hub joined to p spokes, each spoke joined to two leaves (n = 3p + 1)."""
    if p < 1:
        raise ValueError("need at least one spoke")
    edges = [(0, i) for i in range(1, p + 1)]
    for i in range(1, p + 1):
        edges.append((i, p + 2 * i - 1))
        edges.append((i, p + 2 * i))
    return Graph(3 * p + 1, edges)
