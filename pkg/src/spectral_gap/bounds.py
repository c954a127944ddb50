"""Closed-form spectral-gap bounds and per-graph certificates.

All bounds are plain double-precision formulas. A :class:`BoundReport`
collects the structural parameters of one connected graph, its extreme
eigenvalues, every bound, and a verdict per inequality.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DisconnectedGraphError, PreconditionError, RegularGraphError
from .graph import Graph, structure
from .spectral import (
    DEFAULT_DENSE_CAP,
    DEFAULT_MAX_ITER,
    DEFAULT_SEED,
    DEFAULT_TOL,
    dense_spectrum,
    largest_eigenvalue,
    smallest_eigenvalue,
)

SLACK_TOL = 1e-9

PASS = "pass"
MARGINAL = "marginal"
FAIL = "fail"
NOT_APPLICABLE = "n/a"


def main_gap_bound(n: int, D: int) -> float:
    """``1 / ((D + 2) n)``: lower bound on ``Delta - mu1`` for irregular graphs."""
    return 1.0 / ((D + 2) * n)


def alon_sudakov_bound(n: int, D: int) -> float:
    """``1 / ((D + 1) n)``: lower bound on ``Delta + mu_n`` for nonbipartite graphs."""
    return 1.0 / ((D + 1) * n)


def stevanovic_bound(n: int, delta: int) -> float:
    return 1.0 / (2 * n * (n * delta - 1) * delta ** 2)


def zhang_bound(n: int, delta: int, D: int) -> float:
    return 1.0 / ((math.sqrt(delta) + math.sqrt(delta - 1)) ** 2 * D * n * delta)


def zhang_weak_bounds(n: int, delta: int, D: int) -> tuple[float, float]:
    """The two coarser forms ``1/(4 D n Delta^2)`` and ``1/(4 n (n-1) Delta^2)``."""
    return 1.0 / (4 * D * n * delta ** 2), 1.0 / (4 * n * (n - 1) * delta ** 2)


def verdict(slack: float, tol: float = SLACK_TOL) -> str:
    if slack > tol:
        return PASS
    if slack >= -tol:
        return MARGINAL
    return FAIL


@dataclass(frozen=True)
class Check:
    """One inequality ``quantity >= bound`` (strict ones use the same slack)."""

    name: str
    quantity: float
    bound: float
    applicable: bool = True

    @property
    def slack(self) -> float:
        return self.quantity - self.bound if self.applicable else math.nan

    @property
    def verdict(self) -> str:
        return verdict(self.slack) if self.applicable else NOT_APPLICABLE

    @property
    def ok(self) -> bool:
        return self.verdict != FAIL


def crucin_upper(g: Graph, vector=None, tol: float = DEFAULT_TOL,
                 max_iter: int = DEFAULT_MAX_ITER) -> float:
    """``Delta - x_min / alpha_1`` for the Perron vector ``x`` of ``g``.

    Only meaningful for irregular graphs, which have a vertex of degree at
    most ``Delta - 1``; regular inputs are rejected. ``vector`` may supply a
    precomputed Perron vector (any positive scaling).
    """
    rep = structure(g)
    if not rep.connected:
        raise DisconnectedGraphError("graph is disconnected")
    if not rep.irregular:
        raise RegularGraphError("graph is regular")
    if vector is None:
        vector = largest_eigenvalue(g, tol, max_iter).vector
    x = np.asarray(vector, dtype=float)
    x = x if x.sum() > 0 else -x
    return rep.max_degree - float(x.min()) / float(x.sum())


@dataclass(frozen=True)
class BoundReport:
    n: int
    m: int
    max_degree: int
    min_degree: int
    diameter: int
    irregular: bool
    bipartite: bool
    mu1: float
    mun: float
    x_min: float
    alpha1: float
    method: str
    checks: tuple[Check, ...] = field(default=())

    @property
    def gap_top(self) -> float:
        return self.max_degree - self.mu1

    @property
    def gap_bottom(self) -> float:
        return self.max_degree + self.mun

    @property
    def main_bound(self) -> float:
        return main_gap_bound(self.n, self.diameter)

    @property
    def alon_sudakov_bound(self) -> float:
        return alon_sudakov_bound(self.n, self.diameter)

    @property
    def zhang_bound(self) -> float:
        return zhang_bound(self.n, self.max_degree, self.diameter)

    @property
    def stevanovic_bound(self) -> float:
        return stevanovic_bound(self.n, self.max_degree)

    @property
    def crucin_rhs(self) -> float:
        return self.max_degree - self.x_min / self.alpha1

    @property
    def main_beats_priors(self) -> bool | None:
        """Whether ``1/((D+2)n)`` exceeds both older bounds (``None`` when Delta < 2)."""
        if self.max_degree < 2:
            return None
        return self.main_bound > self.zhang_bound and self.main_bound > self.stevanovic_bound

    def check(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def marginal(self) -> bool:
        return any(c.verdict == MARGINAL for c in self.checks)


def build_report(rep, mu1: float, mun: float, x: np.ndarray, method: str) -> BoundReport:
    x = np.asarray(x, dtype=float)
    x = x if x.sum() > 0 else -x
    n, D, delta = rep.n, rep.diameter, rep.max_degree
    irregular = rep.irregular
    nonbipartite = not rep.bipartite
    x_min, alpha1 = float(x.min()), float(x.sum())
    main = main_gap_bound(n, D)
    checks = (
        Check("theorem1", delta - mu1, main, applicable=irregular),
        Check("corollary", delta + mun, main, applicable=irregular or nonbipartite),
        Check("alon_sudakov", delta + mun, alon_sudakov_bound(n, D), applicable=nonbipartite),
        Check("crucin", delta - x_min / alpha1, mu1, applicable=irregular),
    )
    return BoundReport(
        n=n, m=rep.m, max_degree=delta, min_degree=rep.min_degree, diameter=D,
        irregular=irregular, bipartite=rep.bipartite, mu1=float(mu1), mun=float(mun),
        x_min=x_min, alpha1=alpha1, method=method, checks=checks,
    )


def certify(
    g: Graph,
    method: str = "iterative",
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
    dense_cap: int = DEFAULT_DENSE_CAP,
    seed=DEFAULT_SEED,
) -> BoundReport:
    """Certificate for one connected graph.

    Checks that do not apply (e.g. the gap bound on a regular
    graph) are marked not applicable instead of raising.
    """
    rep = structure(g)
    if not rep.connected:
        raise DisconnectedGraphError("graph is disconnected")
    if g.n < 2:
        raise PreconditionError("need at least two vertices")
    if method == "dense":
        spec = dense_spectrum(g, dense_cap)
        mu1, mun, x = spec.mu1, spec.mun, spec.perron_vector()
    elif method == "iterative":
        top = largest_eigenvalue(g, tol, max_iter)
        bottom = smallest_eigenvalue(g, tol, max_iter, seed)
        mu1, mun, x = top.value, bottom.value, top.vector
    else:
        raise ValueError(f"unknown method {method!r}")
    return build_report(rep, mu1, mun, x, method)
