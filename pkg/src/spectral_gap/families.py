"""Deterministic graph constructors and seeded random graph generation.

The centerpiece is the chained family ``G(delta, k)``: ``k`` copies of the
complete bipartite graph ``K_{delta,delta}``, each missing one edge, joined
in a chain. It is irregular and bipartite, has order ``2*k*delta`` and
diameter ``4k - 1``, and its spectral radius sits within
``pi^2 / (2 delta (k+1)^2)`` of its maximum degree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import GenerationExhaustedError, InvalidParamsError
from .graph import Graph, from_edge_list, is_connected


@dataclass(frozen=True)
class FamilyParams:
    delta: int
    k: int

    def __post_init__(self):
        if int(self.delta) != self.delta or self.delta < 2:
            raise InvalidParamsError(f"delta must be an integer >= 2, got {self.delta}")
        if int(self.k) != self.k or self.k < 1:
            raise InvalidParamsError(f"k must be an integer >= 1, got {self.k}")

    @property
    def n(self) -> int:
        return 2 * self.k * self.delta

    @property
    def diameter(self) -> int:
        return 4 * self.k - 1

    @property
    def m(self) -> int:
        return self.k * (self.delta ** 2 - 1) + (self.k - 1)


def _params(p, k=None) -> FamilyParams:
    if isinstance(p, FamilyParams):
        return p
    return FamilyParams(p, k)


def gdk_special_vertices(p: FamilyParams) -> list[int]:
    """The 1-based vertices ``v_1, ..., v_{2k}``.

    ``v_{2i-1}`` is the first side-A vertex of copy ``i`` and ``v_{2i}`` its
    first side-B vertex.
    """
    p = _params(p)
    out = []
    for i in range(p.k):
        base = 2 * p.delta * i
        out += [base + 1, base + p.delta + 1]
    return out


def build_gdk(p: FamilyParams | int, k: int | None = None) -> Graph:
    """Build ``G(delta, k)``.

    Copy ``i`` (1-based) occupies vertices ``(i-1)*2*delta + 1 .. i*2*delta``:
    the first ``delta`` are side A, the last ``delta`` side B. Each copy loses
    the edge between its first A and first B vertex, and that B vertex is
    bridged to the first A vertex of the next copy.
    """
    p = _params(p, k)
    d = p.delta
    edges = []
    for i in range(p.k):
        base = 2 * d * i
        for a in range(1, d + 1):
            for b in range(d + 1, 2 * d + 1):
                if a == 1 and b == d + 1:
                    continue
                edges.append((base + a, base + b))
        if i + 1 < p.k:
            edges.append((base + d + 1, base + 2 * d + 1))
    return from_edge_list(p.n, edges)


def sine_test_vector(p: FamilyParams | int, k: int | None = None) -> np.ndarray:
    """Unit vector equal to ``sin(j pi / (k+1)) / sqrt((k+1) delta)`` on copy ``j``."""
    p = _params(p, k)
    j = np.arange(1, p.k + 1)
    per_copy = np.sin(j * np.pi / (p.k + 1)) / math.sqrt((p.k + 1) * p.delta)
    return np.repeat(per_copy, 2 * p.delta)


def gdk_gap_upper_bound(p: FamilyParams | int, k: int | None = None) -> float:
    """``pi^2 / (2 delta (k+1)^2)``, an upper bound on ``delta - mu1(G(delta, k))``."""
    p = _params(p, k)
    return math.pi ** 2 / (2 * p.delta * (p.k + 1) ** 2)


def gdk_gap_order_bound(p: FamilyParams | int, k: int | None = None) -> float:
    """The weaker ``4 pi^2 / (n D)`` with ``n = 2 k delta`` and ``D = 4k - 1``."""
    p = _params(p, k)
    return 4 * math.pi ** 2 / (p.n * p.diameter)


def path_graph(k: int) -> Graph:
    if k < 1:
        raise InvalidParamsError("path needs at least one vertex")
    return from_edge_list(k, [(i, i + 1) for i in range(1, k)])


def path_mu1(k: int) -> float:
    """Spectral radius of the path on ``k`` vertices."""
    if k < 1:
        raise InvalidParamsError("path needs at least one vertex")
    return 2.0 * math.cos(math.pi / (k + 1))


def cycle_graph(k: int) -> Graph:
    if k < 3:
        raise InvalidParamsError("cycle needs at least three vertices")
    return from_edge_list(k, [(i, i % k + 1) for i in range(1, k + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    """``K_{a,b}`` with side A on ``1..a`` and side B on ``a+1..a+b``."""
    if a < 1 or b < 1:
        raise InvalidParamsError("both sides need at least one vertex")
    return from_edge_list(
        a + b, [(u, v) for u in range(1, a + 1) for v in range(a + 1, a + b + 1)]
    )


def star(leaves: int) -> Graph:
    """``K_{1,leaves}`` with the center at vertex 1."""
    if leaves < 1:
        raise InvalidParamsError("star needs at least one leaf")
    return complete_bipartite(1, leaves)


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise InvalidParamsError("complete graph needs at least one vertex")
    return from_edge_list(n, [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)])


MAX_RESAMPLES = 10_000


def random_graph(n: int, edge_probability: float, rng: np.random.Generator) -> Graph:
    """One G(n, p) sample drawn from ``rng``."""
    iu, ju = np.triu_indices(n, 1)
    keep = rng.random(iu.size) < edge_probability
    return from_edge_list(n, zip((iu[keep] + 1).tolist(), (ju[keep] + 1).tolist()))


def random_connected_irregular(n: int, edge_probability: float, seed=0) -> Graph:
    """Rejection-sample G(n, p) until the sample is connected and irregular.

    ``seed`` is anything :func:`numpy.random.default_rng` accepts; the same
    seed always yields the same graph.
    """
    if n < 3:
        raise InvalidParamsError("need n >= 3 for a connected irregular graph")
    if not 0.0 < edge_probability < 1.0:
        raise InvalidParamsError("edge probability must lie strictly between 0 and 1")
    rng = np.random.default_rng(seed)
    for _ in range(MAX_RESAMPLES):
        g = random_graph(n, edge_probability, rng)
        if g.min_degree < g.max_degree and is_connected(g):
            return g
    raise GenerationExhaustedError(
        f"no connected irregular sample in {MAX_RESAMPLES} draws (n={n}, p={edge_probability})"
    )


def random_connected(n: int, edge_probability: float, seed=0, accept=None) -> Graph:
    """Rejection-sample a connected G(n, p) that also satisfies ``accept``."""
    if n < 2:
        raise InvalidParamsError("need n >= 2")
    if not 0.0 < edge_probability <= 1.0:
        raise InvalidParamsError("edge probability must lie in (0, 1]")
    rng = np.random.default_rng(seed)
    for _ in range(MAX_RESAMPLES):
        g = random_graph(n, edge_probability, rng)
        if is_connected(g) and (accept is None or accept(g)):
            return g
    raise GenerationExhaustedError(f"no acceptable sample in {MAX_RESAMPLES} draws")


def random_connected_bipartite(a: int, b: int, edge_probability: float, seed=0) -> Graph:
    """Connected random subgraph of ``K_{a,b}`` (sides ``1..a`` and ``a+1..a+b``)."""
    if a < 1 or b < 1:
        raise InvalidParamsError("both sides need at least one vertex")
    if not 0.0 < edge_probability <= 1.0:
        raise InvalidParamsError("edge probability must lie in (0, 1]")
    rng = np.random.default_rng(seed)
    pairs = [(u, v) for u in range(1, a + 1) for v in range(a + 1, a + b + 1)]
    for _ in range(MAX_RESAMPLES):
        keep = rng.random(len(pairs)) < edge_probability
        g = from_edge_list(a + b, [e for e, kept in zip(pairs, keep) if kept])
        if is_connected(g):
            return g
    raise GenerationExhaustedError(f"no connected bipartite sample in {MAX_RESAMPLES} draws")
