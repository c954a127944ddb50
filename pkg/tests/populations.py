"""Seeded graph populations shared by the property and acceptance suites."""

from functools import lru_cache

import networkx as nx

from spectral_gap.families import (
    complete_graph,
    cycle_graph,
    random_connected,
    random_connected_bipartite,
    random_connected_irregular,
)
from spectral_gap.graph import from_edge_list, structure

PROBS = (0.25, 0.4, 0.6)


def from_nx(h):
    h = nx.convert_node_labels_to_integers(h, first_label=1)
    return from_edge_list(h.number_of_nodes(), h.edges())


@lru_cache(maxsize=None)
def irregular_suite(count=500, n_lo=4, n_hi=16):
    """Connected irregular G(n, p) samples, n cycling through [n_lo, n_hi]."""
    span = n_hi - n_lo + 1
    return tuple(
        random_connected_irregular(n_lo + s % span, PROBS[s % 3], seed=[s, 1])
        for s in range(count)
    )


@lru_cache(maxsize=None)
def nonbipartite_regular():
    graphs = [cycle_graph(k) for k in range(3, 17, 2)]
    graphs += [complete_graph(k) for k in range(3, 13)]
    graphs.append(from_nx(nx.petersen_graph()))
    for d, n in [(3, 8), (3, 10), (3, 12), (4, 9), (4, 11), (5, 12), (6, 14)]:
        for s in range(4):
            h = nx.random_regular_graph(d, n, seed=s)
            if nx.is_connected(h) and not nx.is_bipartite(h):
                graphs.append(from_nx(h))
    return tuple(graphs)


@lru_cache(maxsize=None)
def small_random(count=100, n_hi=12):
    """Connected G(n, p) samples with 3 <= n <= n_hi, regular ones allowed."""
    return tuple(
        random_connected(3 + s % (n_hi - 2), PROBS[s % 3], seed=[s, 2])
        for s in range(count)
    )


@lru_cache(maxsize=None)
def nonbipartite_suite(count=50):
    return tuple(
        random_connected(
            4 + s % 13, PROBS[s % 3], seed=[s, 3],
            accept=lambda g: not structure(g).bipartite,
        )
        for s in range(count)
    )


@lru_cache(maxsize=None)
def bipartite_suite(count=50):
    out = []
    for s in range(count):
        a, b = 1 + s % 7, 2 + (s * 3) % 8
        out.append(random_connected_bipartite(a, b, (0.4, 0.6, 0.8)[s % 3], seed=[s, 4]))
    return tuple(out)


@lru_cache(maxsize=None)
def mid_size(count=30):
    """Connected graphs up to n = 64 mixing parities, for solver cross-checks."""
    out = []
    for s in range(count):
        n = 8 + (s * 7) % 57
        if s % 3 == 0:
            out.append(random_connected_bipartite(n // 2, n - n // 2, 0.3, seed=[s, 5]))
        else:
            out.append(random_connected(n, max(0.1, 4.0 / n), seed=[s, 5]))
    return tuple(out)
