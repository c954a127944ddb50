"""Walk counting, the walk-ratio eigenvalue bound, and Wei-type limits.

A k-walk is a sequence of k vertices in which consecutive vertices are
adjacent, so ``w_1(u) = 1`` and ``w_2(u) = deg(u)``. Counts grow like
``mu1**k``; profiles therefore carry exact int64 counts while they fit and
fall back to a mantissa vector with a shared base-2 exponent afterwards.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    BipartiteInputError,
    DisconnectedGraphError,
    IsolatedVertexError,
    NotBipartiteError,
)
from .graph import Graph, is_connected, structure
from .spectral import DEFAULT_DENSE_CAP, DenseSpectrum, dense_spectrum

INT64_MAX = np.iinfo(np.int64).max
MAX_ADAPTIVE_K = 10_000


@dataclass(frozen=True)
class WalkProfile:
    """Per-vertex k-walk counts ``w_k(u) = mantissa[u] * 2**exponent``.

    ``exact`` holds the int64 counts while they fit, else ``None``. In
    scaled mode the mantissa is renormalized by a power of two each step,
    so relative magnitudes between vertices are never rounded by scaling.
    """

    k: int
    mantissa: np.ndarray
    exponent: int
    exact: np.ndarray | None = field(default=None)

    @property
    def is_exact(self) -> bool:
        return self.exact is not None

    @property
    def per_vertex(self) -> np.ndarray:
        """Counts as floats (may overflow to inf for very long walks)."""
        return np.ldexp(self.mantissa, self.exponent)

    @property
    def total_mantissa(self) -> float:
        return float(self.mantissa.sum())

    @property
    def total(self) -> float:
        if self.exact is not None:
            return float(self.exact_total)
        return math.ldexp(self.total_mantissa, self.exponent)

    @property
    def exact_total(self) -> int | None:
        if self.exact is None:
            return None
        return sum(int(c) for c in self.exact)

    def log2_total(self) -> float:
        return math.log2(self.total_mantissa) + self.exponent

    def normalized(self) -> np.ndarray:
        """``(w_k(1), ..., w_k(n)) / w_k(G)``, free of the shared scale."""
        return self.mantissa / self.mantissa.sum()


def _renormalize(vec: np.ndarray, exponent: int) -> tuple[np.ndarray, int]:
    top = float(vec.max())
    if top == 0.0:
        return vec, exponent
    _, e = math.frexp(top)
    return np.ldexp(vec, -e), exponent + e


def _iter_profiles(g: Graph, k_max: int, force_scaled: bool = False):
    """Yield the profiles for k = 1..k_max in order."""
    a = g.csr()
    a_int = a.astype(np.int64)
    dmax = g.max_degree
    if force_scaled:
        exact = None
        mant, exponent = _renormalize(np.ones(g.n), 0)
    else:
        exact = np.ones(g.n, dtype=np.int64)
        mant, exponent = exact.astype(float), 0
    k = 1
    while True:
        yield WalkProfile(k, mant, exponent, exact)
        if k == k_max:
            return
        k += 1
        if exact is None:
            mant, exponent = _renormalize(a @ mant, exponent)
            continue
        if int(exact.max()) * dmax <= INT64_MAX:
            exact = a_int @ exact
            mant = exact.astype(float)
            continue
        # the degree bound is conservative; settle it with unbounded ints
        big = _bigint_step(g, exact.tolist())
        if max(big) <= INT64_MAX:
            exact = np.array(big, dtype=np.int64)
            mant = exact.astype(float)
        else:
            exact = None
            mant, exponent = _renormalize(np.array(big, dtype=float), 0)


def _bigint_step(g: Graph, w: list[int]) -> list[int]:
    return [sum(w[j] for j in nbrs) for nbrs in g.adjacency_lists()]


def walk_counts(g: Graph, k: int, force_scaled: bool = False) -> WalkProfile:
    """Per-vertex and total k-walk counts by iterating ``w <- A w`` from ones."""
    if k < 1:
        raise ValueError(f"walk length must be >= 1, got {k}")
    for profile in _iter_profiles(g, k, force_scaled):
        pass
    return profile


def walk_profiles(g: Graph, k_max: int, force_scaled: bool = False) -> list[WalkProfile]:
    """Profiles for every k in ``1..k_max`` from a single pass."""
    return list(_iter_profiles(g, k_max, force_scaled))


def walk_count_spectral(
    g: Graph, k: int, spectrum: DenseSpectrum | None = None,
    dense_cap: int = DEFAULT_DENSE_CAP,
) -> float:
    """Total k-walk count as ``sum_i alpha_i**2 * mu_i**(k-1)``."""
    if k < 1:
        raise ValueError(f"walk length must be >= 1, got {k}")
    if spectrum is None:
        spectrum = dense_spectrum(g, dense_cap)
    return float(np.sum(spectrum.entry_sums ** 2 * spectrum.eigenvalues ** (k - 1)))


def profile_ratio(num: WalkProfile, den: WalkProfile) -> np.ndarray:
    """Per-vertex ``num / den`` with exponents subtracted before dividing."""
    if num.exact is not None and den.exact is not None:
        return num.exact / den.exact
    return np.ldexp(num.mantissa / den.mantissa, num.exponent - den.exponent)


def walk_ratio_bound(g: Graph, k: int, r: int) -> float:
    """Upper bound ``(max_u w_{k+r}(u) / w_k(u)) ** (1/r)`` on the spectral radius."""
    if k < 1 or r < 1:
        raise ValueError("k and r must be positive")
    if g.m == 0:
        raise IsolatedVertexError("graph has no edges")
    profiles = walk_profiles(g, k + r)
    low, high = profiles[k - 1], profiles[k + r - 1]
    if np.any(low.mantissa == 0):
        u = int(np.flatnonzero(low.mantissa == 0)[0]) + 1
        raise IsolatedVertexError(f"vertex {u} has no {k}-walks")
    best = float(profile_ratio(high, low).max())
    if r == 1:
        return best
    return best ** (1.0 / r)


def _check_dense_connected(g: Graph):
    if not is_connected(g):
        raise DisconnectedGraphError("graph is disconnected")
    return structure(g)


def adaptive_walk_length(ratio: float, target: float = 1e-10, cap: int = MAX_ADAPTIVE_K) -> int:
    """Smallest k with ``ratio**k < target``, capped.

    ``ratio`` is the subdominant-to-dominant eigenvalue magnitude ratio.
    """
    if ratio <= 0.0:
        return 2
    if ratio >= 1.0:
        return cap
    return min(cap, max(2, math.ceil(math.log(target) / math.log(ratio)) + 1))


def wei_target(spectrum: DenseSpectrum) -> np.ndarray:
    """Limit of the normalized walk vector for nonbipartite graphs: ``x / alpha_1``."""
    x = spectrum.perron_vector()
    return x / x.sum()


def wei_limit_deviation(
    g: Graph, k: int, spectrum: DenseSpectrum | None = None,
    dense_cap: int = DEFAULT_DENSE_CAP,
) -> float:
    """Max-norm distance between ``w_k(.) / w_k(G)`` and ``x / alpha_1``."""
    rep = _check_dense_connected(g)
    if rep.bipartite:
        raise BipartiteInputError("walk vectors of bipartite graphs need not converge")
    if spectrum is None:
        spectrum = dense_spectrum(g, dense_cap)
    walk = walk_counts(g, k).normalized()
    return float(np.abs(walk - wei_target(spectrum)).max())


def wei_adaptive_k(spectrum: DenseSpectrum, target: float = 1e-10) -> int:
    mu = spectrum.eigenvalues
    ratio = float(np.abs(mu[1:]).max() / mu[0]) if len(mu) > 1 else 0.0
    return adaptive_walk_length(ratio, target)


@dataclass(frozen=True)
class BipartiteWeiReport:
    """Closed-form parity limits of the walk vector of a bipartite graph.

    ``odd_limit`` is the limit over walks with an odd number of vertices
    (``w_{2k+1}``), ``even_limit`` over an even number (``w_{2k}``).
    """

    alpha1: float
    alphan: float
    odd_limit: np.ndarray
    even_limit: np.ndarray
    odd_lower: np.ndarray
    even_lower: np.ndarray
    odd_slack: float
    even_slack: float
    sign_pattern_error: float
    walk_length: int
    odd_empirical_error: float
    even_empirical_error: float
    tol: float = -1e-9

    @property
    def passed(self) -> bool:
        return self.odd_slack >= self.tol and self.even_slack >= self.tol

    def empirical_ok(self, tol: float = 1e-6) -> bool:
        return max(self.odd_empirical_error, self.even_empirical_error) < tol


def bipartite_wei_check(
    g: Graph, spectrum: DenseSpectrum | None = None,
    dense_cap: int = DEFAULT_DENSE_CAP, target: float = 1e-10,
) -> BipartiteWeiReport:
    """Evaluate and verify the parity-split walk limits of a bipartite graph.

    The closed forms come from the dense spectrum::

        odd  (w_{2k+1}):  (a1 x + an y) / (a1^2 + an^2)  >=  (a1 - |an|) / (a1^2 + an^2) * x
        even (w_{2k}):    (a1 x - an y) / (a1^2 - an^2)  >=  x / (a1 + |an|)

    where ``x`` is the Perron vector, ``y`` the bottom eigenvector and
    ``a1``, ``an`` their entry sums. Both are then compared against long
    walk profiles.
    """
    rep = _check_dense_connected(g)
    if not rep.bipartite:
        raise NotBipartiteError("graph has an odd cycle")
    if spectrum is None:
        spectrum = dense_spectrum(g, dense_cap)
    x = spectrum.perron_vector()
    y = spectrum.bottom_vector()
    a1, an = float(x.sum()), float(y.sum())

    odd_limit = (a1 * x + an * y) / (a1 ** 2 + an ** 2)
    even_limit = (a1 * x - an * y) / (a1 ** 2 - an ** 2)
    odd_lower = (a1 - abs(an)) / (a1 ** 2 + an ** 2) * x
    even_lower = x / (a1 + abs(an))

    eps = rep.signs()
    flipped = eps * x
    sign_err = float(min(np.abs(y - flipped).max(), np.abs(y + flipped).max()))

    mu = spectrum.eigenvalues
    inner = np.abs(mu[1:-1])
    ratio = float(inner.max() / mu[0]) if inner.size else 0.0
    half = adaptive_walk_length(ratio, target, cap=MAX_ADAPTIVE_K // 2)
    profiles = walk_profiles(g, 2 * half + 1)
    even_emp = profiles[2 * half - 1].normalized()
    odd_emp = profiles[2 * half].normalized()

    return BipartiteWeiReport(
        alpha1=a1,
        alphan=an,
        odd_limit=odd_limit,
        even_limit=even_limit,
        odd_lower=odd_lower,
        even_lower=even_lower,
        odd_slack=float((odd_limit - odd_lower).min()),
        even_slack=float((even_limit - even_lower).min()),
        sign_pattern_error=sign_err,
        walk_length=2 * half + 1,
        odd_empirical_error=float(np.abs(odd_emp - odd_limit).max()),
        even_empirical_error=float(np.abs(even_emp - even_limit).max()),
    )
