"""Extreme adjacency eigenpairs, computed two independent ways.

The iterative path runs power iteration on a shifted adjacency operator and
scales to large sparse graphs. The dense path is a cyclic Jacobi rotation
solver used as an oracle at small sizes; the two share nothing but the
adjacency matrix.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DisconnectedGraphError,
    LengthMismatchError,
    NoConvergenceError,
    PreconditionError,
    TooLargeForDenseOracleError,
    ZeroVectorError,
)
from .graph import Graph, is_connected

DEFAULT_TOL = 1e-10
DEFAULT_MAX_ITER = 200_000
DEFAULT_DENSE_CAP = 256
DEFAULT_SEED = 20070101


@dataclass(frozen=True)
class SpectrumEstimate:
    value: float
    vector: np.ndarray
    residual: float
    iterations: int


@dataclass(frozen=True)
class DenseSpectrum:
    """Full eigendecomposition with eigenvalues sorted descending.

    Column ``i`` of ``eigenvectors`` pairs with ``eigenvalues[i]``;
    ``entry_sums[i]`` is the sum of that column's entries.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    entry_sums: np.ndarray
    sweeps: int = 0

    @property
    def mu1(self) -> float:
        return float(self.eigenvalues[0])

    @property
    def mun(self) -> float:
        return float(self.eigenvalues[-1])

    def perron_vector(self) -> np.ndarray:
        """Unit eigenvector of the largest eigenvalue, signed to sum positive."""
        x = self.eigenvectors[:, 0]
        return x if x.sum() >= 0 else -x

    def bottom_vector(self) -> np.ndarray:
        return self.eigenvectors[:, -1]

    def reconstruct(self) -> np.ndarray:
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.T


def _require_connected(g: Graph) -> None:
    if g.n < 2:
        raise PreconditionError("need at least two vertices")
    if not is_connected(g):
        raise DisconnectedGraphError("graph is disconnected")


def _power_iterate(apply, v, shift_back, tol, max_iter):
    """Power iteration with a residual-based stopping rule.

    ``apply`` is the shifted operator; ``shift_back`` maps its Rayleigh
    quotient to the adjacency eigenvalue. The residual is measured on the
    shifted operator, which has the same eigenvectors and the same
    residual as the adjacency matrix.
    """
    residual = np.inf
    for it in range(1, max_iter + 1):
        w = apply(v)
        theta = float(v @ w)
        residual = float(np.abs(w - theta * v).max())
        if residual < tol:
            return SpectrumEstimate(shift_back(theta), v, residual, it)
        v = w / np.linalg.norm(w)
    raise NoConvergenceError(max_iter, residual)


def largest_eigenvalue(
    g: Graph, tol: float = DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER
) -> SpectrumEstimate:
    """Spectral radius and Perron vector via power iteration on ``A + I``.

    Every eigenvalue of ``A + I`` lies in ``[1 - mu1, 1 + mu1]``, so
    ``1 + mu1`` is strictly dominant even for bipartite graphs. The returned
    vector is strictly positive.
    """
    _require_connected(g)
    a = g.csr()
    v = np.full(g.n, 1.0 / np.sqrt(g.n))
    est = _power_iterate(lambda x: a @ x + x, v, lambda t: t - 1.0, tol, max_iter)
    return est


def smallest_eigenvalue(
    g: Graph,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
    seed: int | np.random.Generator = DEFAULT_SEED,
) -> SpectrumEstimate:
    """Least adjacency eigenvalue via power iteration on ``(Delta+1) I - A``.

    The start vector is pseudorandom: the all-ones vector is orthogonal to
    the bottom eigenvector of balanced bipartite graphs.
    """
    _require_connected(g)
    a = g.csr()
    c = g.max_degree + 1.0
    rng = np.random.default_rng(seed)
    v = rng.standard_normal(g.n)
    v /= np.linalg.norm(v)
    return _power_iterate(lambda x: c * x - a @ x, v, lambda t: c - t, tol, max_iter)


def _round_robin(n: int) -> list[tuple[np.ndarray, np.ndarray]]:
    """Tournament schedule: n-1 rounds of disjoint index pairs covering all pairs."""
    players = list(range(n)) + ([-1] if n % 2 else [])
    size = len(players)
    rounds = []
    for _ in range(size - 1):
        p, q = [], []
        for i in range(size // 2):
            a, b = players[i], players[size - 1 - i]
            if a >= 0 and b >= 0:
                p.append(min(a, b))
                q.append(max(a, b))
        rounds.append((np.array(p, dtype=np.intp), np.array(q, dtype=np.intp)))
        players = [players[0], players[-1]] + players[1:-1]
    return rounds


def jacobi_eigh(a: np.ndarray, rel_tol: float = 1e-12, max_sweeps: int = 100):
    """Cyclic Jacobi diagonalization of a real symmetric matrix.

    Pairs are visited in round-robin order, so each round applies up to
    ``n/2`` commuting rotations at once. Sweeps continue until the
    off-diagonal Frobenius norm drops below ``rel_tol`` times the Frobenius
    norm of ``a``. Returns ``(eigenvalues, eigenvectors, sweeps)`` unsorted.
    """
    a = np.array(a, dtype=float)
    n = a.shape[0]
    v = np.eye(n)
    if n == 1:
        return a.diagonal().copy(), v, 0
    scale = max(np.linalg.norm(a), np.finfo(float).tiny)
    rounds = _round_robin(n)

    def off_norm():
        return np.linalg.norm(a - np.diag(a.diagonal()))

    for sweep in range(1, max_sweeps + 1):
        if off_norm() <= rel_tol * scale:
            return a.diagonal().copy(), v, sweep - 1
        for p, q in rounds:
            apq = a[p, q]
            active = np.abs(apq) > 1e-300
            if not active.any():
                continue
            p, q, apq = p[active], q[active], apq[active]
            theta = (a[q, q] - a[p, p]) / (2.0 * apq)
            t = np.sign(theta) / (np.abs(theta) + np.hypot(theta, 1.0))
            t[theta == 0] = 1.0
            c = 1.0 / np.sqrt(t * t + 1.0)
            s = t * c
            ap, aq = a[:, p].copy(), a[:, q].copy()
            a[:, p] = c * ap - s * aq
            a[:, q] = s * ap + c * aq
            ap, aq = a[p, :].copy(), a[q, :].copy()
            a[p, :] = c[:, None] * ap - s[:, None] * aq
            a[q, :] = s[:, None] * ap + c[:, None] * aq
            a[p, q] = 0.0
            a[q, p] = 0.0
            vp, vq = v[:, p].copy(), v[:, q].copy()
            v[:, p] = c * vp - s * vq
            v[:, q] = s * vp + c * vq
    if off_norm() <= rel_tol * scale:
        return a.diagonal().copy(), v, max_sweeps
    raise NoConvergenceError(max_sweeps, off_norm() / scale)


def dense_spectrum(g: Graph, dense_cap: int = DEFAULT_DENSE_CAP) -> DenseSpectrum:
    if g.n > dense_cap:
        raise TooLargeForDenseOracleError(g.n, dense_cap)
    w, v, sweeps = jacobi_eigh(g.adjacency_matrix())
    order = np.argsort(-w, kind="stable")
    w, v = w[order], v[:, order]
    # sign convention: the largest-magnitude entry of each column is positive
    pivot = np.abs(v).argmax(axis=0)
    flip = np.sign(v[pivot, np.arange(g.n)])
    v = v * np.where(flip == 0, 1.0, flip)
    return DenseSpectrum(w, v, v.sum(axis=0), sweeps)


def rayleigh_quotient(g: Graph, v) -> float:
    v = np.asarray(v, dtype=float)
    if v.shape != (g.n,):
        raise LengthMismatchError(v.size, g.n)
    vv = float(v @ v)
    if vv == 0.0:
        raise ZeroVectorError("Rayleigh quotient of the zero vector")
    return float(v @ (g.csr() @ v)) / vv
