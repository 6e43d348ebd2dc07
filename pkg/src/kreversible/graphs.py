"""Graph, configuration, and rooted-tree primitives shared by every solver.

Vertices are dense 0-based ids.  Vertex states live in {-1, +1}; a
configuration is an int8 numpy array of states indexed by vertex id.
All structures are immutable after construction.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "Graph",
    "RootedTree",
    "parse_graph",
    "write_graph",
    "parse_config",
    "format_config",
    "as_config",
    "root_tree",
    "is_tree",
    "max_degree",
    "connected_components",
    "is_bipartite",
    "component_labels",
]

_STATE_TOKENS = {"+1": 1, "-1": -1, "+": 1, "-": -1}


class Graph:
    """Simple undirected graph: no loops, no parallel edges.

    Edges are stored canonically (u < v, sorted) alongside a CSR adjacency
    structure with ascending neighbor lists, so iteration order is
    deterministic everywhere.
    """

    __slots__ = ("n", "m", "_eu", "_ev", "_indptr", "_indices", "_adj", "_degs", "_deg_list")

    def __init__(self, n: int, edges=()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        e = np.asarray(edges, dtype=np.int64)
        if e.size == 0:
            e = e.reshape(0, 2)
        if e.ndim != 2 or e.shape[1] != 2:
            raise ValueError("edges must be pairs of vertex ids")
        if e.size and (e.min() < 0 or e.max() >= n):
            raise ValueError("edge endpoint out of range")
        lo = np.minimum(e[:, 0], e[:, 1])
        hi = np.maximum(e[:, 0], e[:, 1])
        if np.any(lo == hi):
            v = int(lo[np.argmax(lo == hi)])
            raise ValueError(f"loop at vertex {v}")
        codes = lo * n + hi
        order = np.argsort(codes, kind="stable")
        codes = codes[order]
        if codes.size > 1 and np.any(codes[1:] == codes[:-1]):
            i = int(np.argmax(codes[1:] == codes[:-1]))
            u, v = divmod(int(codes[i]), n)
            raise ValueError(f"duplicate edge {u} {v}")
        self.n = int(n)
        self.m = int(e.shape[0])
        self._eu = lo[order]
        self._ev = hi[order]
        src = np.concatenate([self._eu, self._ev])
        dst = np.concatenate([self._ev, self._eu])
        arc_order = np.argsort(src * n + dst, kind="stable")
        self._indices = dst[arc_order]
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])
        self._indptr = indptr
        self._adj = None
        self._degs = None
        self._deg_list = None

    @property
    def edges(self) -> list[tuple[int, int]]:
        """Canonical (u < v) edge list, sorted."""
        return list(zip(self._eu.tolist(), self._ev.tolist()))

    def edge_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        """Canonical edge endpoints as parallel numpy arrays (u < v)."""
        return self._eu, self._ev

    def neighbors(self, v: int) -> list[int]:
        return self._indices[self._indptr[v]:self._indptr[v + 1]].tolist()

    def adjacency(self) -> list[list[int]]:
        """Full adjacency as lists of ascending neighbor ids (cached)."""
        if self._adj is None:
            flat = self._indices.tolist()
            ptr = self._indptr.tolist()
            self._adj = [flat[ptr[v]:ptr[v + 1]] for v in range(self.n)]
        return self._adj

    def degree(self, v: int) -> int:
        return int(self._indptr[v + 1] - self._indptr[v])

    def degrees(self) -> np.ndarray:
        if self._degs is None:
            self._degs = np.diff(self._indptr)
        return self._degs

    def degree_list(self) -> list[int]:
        if self._deg_list is None:
            self._deg_list = self.degrees().tolist()
        return self._deg_list

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and self.m == other.m
            and bool(np.array_equal(self._eu, other._eu))
            and bool(np.array_equal(self._ev, other._ev))
        )

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


class RootedTree:
    """Breadth-first orientation of a tree.

    ``parent[root]`` is None.  ``children(v)`` lists children in ascending
    vertex id, the fixed order every tree algorithm relies on.
    ``bfs_order`` visits parents before children.
    """

    __slots__ = ("graph", "root", "parent", "bfs_order", "_cptr", "_cidx")

    def __init__(self, graph: Graph, root: int, parent, bfs_order, cptr, cidx):
        self.graph = graph
        self.root = root
        self.parent = parent
        self.bfs_order = bfs_order
        self._cptr = cptr
        self._cidx = cidx

    def children(self, v: int) -> list[int]:
        return self._cidx[self._cptr[v]:self._cptr[v + 1]]

    def n_children(self, v: int) -> int:
        return self._cptr[v + 1] - self._cptr[v]

    def child_slices(self) -> tuple[list[int], list[int]]:
        """Flat child storage (ptr, ids) for allocation-free traversal."""
        return self._cptr, self._cidx

    def __repr__(self) -> str:
        return f"RootedTree(n={self.graph.n}, root={self.root})"


def _decode(text) -> str:
    if isinstance(text, (bytes, bytearray)):
        return text.decode("utf-8")
    return text


def parse_graph(text) -> Graph:
    """Parse the graph file format.

    First significant line is ``n m``, followed by exactly m lines ``u v``.
    Lines starting with ``#`` and blank lines are ignored.
    """
    lines = [
        ln.split()
        for ln in _decode(text).splitlines()
        if ln.strip() and not ln.lstrip().startswith("#")
    ]
    if not lines:
        raise ValueError("empty graph file")
    header = lines[0]
    if len(header) != 2:
        raise ValueError("header must be 'n m'")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise ValueError("header must contain two integers") from None
    if n < 0 or m < 0:
        raise ValueError("header counts must be nonnegative")
    body = lines[1:]
    if len(body) != m:
        raise ValueError(f"expected {m} edge lines, found {len(body)}")
    edges = []
    for ln in body:
        if len(ln) != 2:
            raise ValueError(f"edge line must be 'u v', got {' '.join(ln)!r}")
        try:
            edges.append((int(ln[0]), int(ln[1])))
        except ValueError:
            raise ValueError(f"non-integer edge line {' '.join(ln)!r}") from None
    return Graph(n, edges)


def write_graph(g: Graph) -> str:
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"


def parse_config(text, n: int) -> np.ndarray:
    """Parse n whitespace-separated state tokens (+1, -1, +, -)."""
    tokens = _decode(text).split()
    if len(tokens) != n:
        raise ValueError(f"expected {n} state tokens, found {len(tokens)}")
    try:
        states = [_STATE_TOKENS[t] for t in tokens]
    except KeyError as exc:
        raise ValueError(f"unknown state token {exc.args[0]!r}") from None
    return np.array(states, dtype=np.int8)


def format_config(y) -> str:
    """Canonical serialization: +1/-1 tokens, space separated."""
    return " ".join("+1" if s > 0 else "-1" for s in np.asarray(y)) + "\n"


def as_config(y, n: int) -> np.ndarray:
    """Normalize y to a validated int8 state array of length n."""
    arr = np.asarray(y, dtype=np.int8)
    if arr.shape != (n,):
        raise ValueError(f"configuration length {arr.shape} does not match n={n}")
    if arr.size and not np.all(np.abs(arr) == 1):
        raise ValueError("states must be -1 or +1")
    return arr


def config_list(y, n: int) -> list[int]:
    """Like as_config but yielding a plain list, cheap for small inputs."""
    lst = y.tolist() if isinstance(y, np.ndarray) else list(y)
    if len(lst) != n:
        raise ValueError(f"configuration length {len(lst)} does not match n={n}")
    for s in lst:
        if s != 1 and s != -1:
            raise ValueError("states must be -1 or +1")
    return lst


def _bfs_from(g: Graph, root: int) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized BFS: (parent array with -1 for root/unreached, visit order)."""
    n = g.n
    indptr, indices = g._indptr, g._indices
    parent = np.full(n, -1, dtype=np.int64)
    visited = np.zeros(n, dtype=bool)
    visited[root] = True
    frontier = np.array([root], dtype=np.int64)
    levels = [frontier]
    while frontier.size:
        starts = indptr[frontier]
        counts = indptr[frontier + 1] - starts
        total = int(counts.sum())
        if total == 0:
            break
        cum = np.cumsum(counts)
        base = np.repeat(starts - np.concatenate(([0], cum[:-1])), counts)
        flat = base + np.arange(total, dtype=np.int64)
        neigh = indices[flat]
        src = np.repeat(frontier, counts)
        fresh = ~visited[neigh]
        cand, csrc = neigh[fresh], src[fresh]
        if cand.size == 0:
            break
        uniq, first = np.unique(cand, return_index=True)
        parent[uniq] = csrc[first]
        visited[uniq] = True
        frontier = uniq
        levels.append(frontier)
    return parent, np.concatenate(levels)


def root_tree(g: Graph, root: int) -> RootedTree:
    """Orient a tree from root via BFS; children ordered by ascending id."""
    n = g.n
    if not 0 <= root < n:
        raise ValueError(f"root {root} out of range")
    if g.m != n - 1:
        raise ValueError(f"not a tree: m={g.m}, expected {n - 1}")
    parent_arr, order = _bfs_from(g, root)
    if order.size != n:
        raise ValueError("not a tree: graph is disconnected")
    nonroot = np.concatenate([np.arange(root), np.arange(root + 1, n)])
    if nonroot.size:
        by_parent = nonroot[np.argsort(parent_arr[nonroot] * n + nonroot)]
        counts = np.bincount(parent_arr[nonroot], minlength=n)
    else:
        by_parent = nonroot
        counts = np.zeros(n, dtype=np.int64)
    cptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(counts, out=cptr[1:])
    parent = parent_arr.tolist()
    parent[root] = None
    return RootedTree(g, root, parent, order.tolist(), cptr.tolist(), by_parent.tolist())


def is_tree(g: Graph) -> bool:
    """True iff g is connected with exactly n-1 edges."""
    if g.n == 0 or g.m != g.n - 1:
        return False
    _, order = _bfs_from(g, 0)
    return order.size == g.n


def max_degree(g: Graph) -> int:
    return int(g.degrees().max()) if g.n else 0


def component_labels(n: int, u, v) -> np.ndarray:
    """Connected-component label per vertex for the graph (n, {u_i v_i}).

    Labels are canonical: numbered by order of each component's smallest
    vertex, so the labeling is independent of edge order.
    """
    u = np.asarray(u, dtype=np.int64)
    v = np.asarray(v, dtype=np.int64)
    if u.size == 0:
        return np.arange(n, dtype=np.int64)
    from scipy.sparse import coo_matrix
    from scipy.sparse.csgraph import connected_components as _cc

    mat = coo_matrix((np.ones(u.size, dtype=np.int8), (u, v)), shape=(n, n))
    _, labels = _cc(mat, directed=False)
    _, first = np.unique(labels, return_index=True)
    rank = np.empty(first.size, dtype=np.int64)
    rank[np.argsort(first, kind="stable")] = np.arange(first.size)
    return rank[labels]


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex partition into connected components, each sorted ascending."""
    eu, ev = g.edge_arrays()
    labels = component_labels(g.n, eu, ev)
    ncomp = int(labels.max()) + 1 if g.n else 0
    comps: list[list[int]] = [[] for _ in range(ncomp)]
    for v, c in enumerate(labels.tolist()):
        comps[c].append(v)
    return comps


def is_bipartite(g: Graph) -> tuple[bool, np.ndarray | None]:
    """Check bipartiteness; on success also return a witness 2-coloring."""
    adj = g.adjacency()
    color = np.full(g.n, -1, dtype=np.int8)
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = [s]
        while queue:
            nxt = []
            for v in queue:
                cv = color[v]
                for u in adj[v]:
                    if color[u] < 0:
                        color[u] = 1 - cv
                        nxt.append(u)
                    elif color[u] == cv:
                        return False, None
            queue = nxt
    return True, color
