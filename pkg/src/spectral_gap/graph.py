"""Immutable undirected simple graphs in compressed (CSR) adjacency form.

Vertices are 1-based at every public boundary (edge lists, files, reports).
Internally vertex ``v`` lives at row ``v - 1``; per-vertex numpy vectors
returned by this package are indexed the same way.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np
import scipy.sparse as sp

from .errors import DuplicateEdgeError, SelfLoopError, VertexOutOfRangeError


class Graph:
    """Undirected simple graph on vertices ``1..n``.

    Construct with :func:`from_edge_list`; the constructor itself trusts its
    arrays and is meant for internal use.
    """

    __slots__ = ("_n", "_indptr", "_indices", "_m", "_csr")

    def __init__(self, n: int, indptr: np.ndarray, indices: np.ndarray):
        indptr = np.asarray(indptr, dtype=np.int64).copy()
        indices = np.asarray(indices, dtype=np.int64).copy()
        indptr.setflags(write=False)
        indices.setflags(write=False)
        self._n = int(n)
        self._indptr = indptr
        self._indices = indices
        self._m = len(indices) // 2
        self._csr = None

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return self._m

    @property
    def indptr(self) -> np.ndarray:
        return self._indptr

    @property
    def indices(self) -> np.ndarray:
        """Concatenated 0-based neighbor lists, each sorted ascending."""
        return self._indices

    @property
    def degrees(self) -> np.ndarray:
        return np.diff(self._indptr)

    @property
    def max_degree(self) -> int:
        return int(self.degrees.max()) if self._n else 0

    @property
    def min_degree(self) -> int:
        return int(self.degrees.min()) if self._n else 0

    def neighbors(self, v: int) -> list[int]:
        """1-based neighbors of the 1-based vertex ``v``."""
        lo, hi = self._indptr[v - 1], self._indptr[v]
        return [int(u) + 1 for u in self._indices[lo:hi]]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as a 1-based pair ``(u, v)`` with ``u < v``."""
        for i in range(self._n):
            for j in self._indices[self._indptr[i]:self._indptr[i + 1]]:
                if i < j:
                    yield i + 1, int(j) + 1

    def adjacency_lists(self) -> list[list[int]]:
        """0-based neighbor lists as plain Python lists (fast for traversal)."""
        ptr, idx = self._indptr.tolist(), self._indices.tolist()
        return [idx[ptr[i]:ptr[i + 1]] for i in range(self._n)]

    def csr(self) -> sp.csr_array:
        """Adjacency matrix as a float scipy CSR array (cached)."""
        if self._csr is None:
            data = np.ones(len(self._indices))
            self._csr = sp.csr_array(
                (data, self._indices, self._indptr), shape=(self._n, self._n)
            )
        return self._csr

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self._n, self._n))
        rows = np.repeat(np.arange(self._n), self.degrees)
        a[rows, self._indices] = 1.0
        return a

    def relabel(self, order: Iterable[int]) -> "Graph":
        """Return the graph whose vertex ``i`` is this graph's ``order[i-1]``.

        ``order`` is a 1-based permutation of the vertices.
        """
        order = [int(v) for v in order]
        if sorted(order) != list(range(1, self._n + 1)):
            raise ValueError("order must be a permutation of 1..n")
        new_label = {old: new for new, old in enumerate(order, start=1)}
        return from_edge_list(
            self._n, [(new_label[u], new_label[v]) for u, v in self.edges()]
        )

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self._n == other._n
            and np.array_equal(self._indptr, other._indptr)
            and np.array_equal(self._indices, other._indices)
        )

    def __hash__(self):
        return hash((self._n, self._indptr.tobytes(), self._indices.tobytes()))

    def __repr__(self):
        return f"Graph(n={self._n}, m={self._m})"


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a canonical graph from 1-based vertex pairs.

    Self-loops, repeated edges (in either orientation) and vertices outside
    ``1..n`` raise instead of being repaired.
    """
    n = int(n)
    if n < 1:
        raise ValueError(f"vertex count must be positive, got {n}")
    seen = set()
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        u, v = int(u), int(v)
        for w in (u, v):
            if not 1 <= w <= n:
                raise VertexOutOfRangeError(w, n)
        if u == v:
            raise SelfLoopError(u)
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdgeError(u, v)
        seen.add(key)
        adj[u - 1].append(v - 1)
        adj[v - 1].append(u - 1)
    indptr = np.zeros(n + 1, dtype=np.int64)
    indptr[1:] = np.cumsum([len(a) for a in adj])
    indices = np.fromiter(
        (w for a in adj for w in sorted(a)), dtype=np.int64, count=int(indptr[-1])
    )
    return Graph(n, indptr, indices)


@dataclass(frozen=True)
class StructureReport:
    """Structural facts that gate the theorems.

    ``bipartition`` holds a side label (0 for side A, 1 for side B) per
    vertex when the graph is bipartite, else ``None``. ``diameter`` is
    ``None`` exactly when the graph is disconnected.
    """

    n: int
    m: int
    connected: bool
    bipartition: tuple[int, ...] | None
    diameter: int | None
    max_degree: int
    min_degree: int

    @property
    def irregular(self) -> bool:
        return self.min_degree < self.max_degree

    @property
    def bipartite(self) -> bool:
        return self.bipartition is not None

    def signs(self) -> np.ndarray:
        """The +1/-1 side pattern (side A positive); needs a bipartition."""
        if self.bipartition is None:
            raise ValueError("graph is not bipartite")
        return 1.0 - 2.0 * np.asarray(self.bipartition, dtype=float)


def _bfs_eccentricity(adj: list[list[int]], source: int) -> int:
    dist = [-1] * len(adj)
    dist[source] = 0
    queue = deque([source])
    far = 0
    while queue:
        u = queue.popleft()
        d = dist[u] + 1
        for w in adj[u]:
            if dist[w] < 0:
                dist[w] = d
                far = d
                queue.append(w)
    return far


def structure(g: Graph) -> StructureReport:
    """Connectivity, two-coloring, exact diameter and degree extremes."""
    adj = g.adjacency_lists()
    n = g.n
    color = [-1] * n
    bipartite = True
    components = 0
    for start in range(n):
        if color[start] >= 0:
            continue
        components += 1
        color[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    bipartite = False
    connected = components == 1
    diameter = None
    if connected:
        diameter = max(_bfs_eccentricity(adj, s) for s in range(n))
    return StructureReport(
        n=n,
        m=g.m,
        connected=connected,
        bipartition=tuple(color) if bipartite else None,
        diameter=diameter,
        max_degree=g.max_degree,
        min_degree=g.min_degree,
    )


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    adj = g.adjacency_lists()
    seen = [False] * g.n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if not seen[w]:
                seen[w] = True
                count += 1
                stack.append(w)
    return count == g.n
