"""Sweep execution and report serialization behind the command line.

Each mode turns a :class:`SweepConfig` into an ordered list of flat records
(dicts with a fixed key order). Records are written as JSON lines, CSV, or
a human-readable table. Floats are printed with 17 significant digits in
the machine formats so every double round-trips.
"""

from __future__ import annotations

import csv
import io
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import edgelist
from .bounds import BoundReport, certify
from .errors import BadConfigError, SpectralGapError
from .families import (
    FamilyParams,
    build_gdk,
    complete_bipartite,
    cycle_graph,
    gdk_gap_order_bound,
    gdk_gap_upper_bound,
    path_graph,
    random_connected,
    random_connected_irregular,
    star,
)
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
from .walks import (
    bipartite_wei_check,
    profile_ratio,
    walk_profiles,
    wei_adaptive_k,
    wei_limit_deviation,
)

MODES = ("spectrum", "certify", "family-sweep", "random-suite", "walk-bound", "wei-check")
FORMATS = ("table", "csv", "jsonl")
WEI_TOL = 1e-6
SIGN_PATTERN_TOL = 1e-7

PASS_STATUS, FAIL_STATUS, ERROR_STATUS = "PASS", "FAIL", "ERROR"


@dataclass(frozen=True)
class SweepConfig:
    mode: str
    inputs: tuple[str, ...] = ()
    constructs: tuple[str, ...] = ()
    delta_range: tuple[int, ...] = (2,)
    k_range: tuple[int, ...] = (1,)
    n_range: tuple[int, ...] = ()
    seeds: tuple[int, ...] = ()
    edge_probability: float = 0.5
    k_max: int = 8
    r_max: int = 4
    tol: float = DEFAULT_TOL
    max_iter: int = DEFAULT_MAX_ITER
    dense_cap: int = DEFAULT_DENSE_CAP
    method: str = "iterative"
    seed: int = DEFAULT_SEED
    format: str = "table"
    output: str | None = None
    jobs: int = 1

    def validate(self) -> None:
        if self.mode not in MODES:
            raise BadConfigError(f"unknown mode {self.mode!r}")
        if self.format not in FORMATS:
            raise BadConfigError(f"unknown format {self.format!r}")
        if self.method not in ("iterative", "dense"):
            raise BadConfigError(f"unknown method {self.method!r}")
        if not self.tol > 0:
            raise BadConfigError("tol must be positive")
        if self.max_iter < 1 or self.dense_cap < 1 or self.jobs < 1:
            raise BadConfigError("max-iter, dense-cap and jobs must be positive")
        if not 0.0 < self.edge_probability < 1.0:
            raise BadConfigError("edge probability must lie strictly between 0 and 1")
        if self.k_max < 1 or self.r_max < 1:
            raise BadConfigError("k-max and r-max must be positive")
        if self.mode == "family-sweep":
            if not self.delta_range or not self.k_range:
                raise BadConfigError("family-sweep needs nonempty --delta and --k ranges")
            if min(self.delta_range) < 2 or min(self.k_range) < 1:
                raise BadConfigError("family-sweep needs delta >= 2 and k >= 1")
            largest = 2 * max(self.delta_range) * max(self.k_range)
        elif self.mode == "random-suite" or (
            self.mode in ("walk-bound", "wei-check") and not self._has_explicit_graphs()
        ):
            if not self.n_range or not self.seeds:
                raise BadConfigError(f"{self.mode} needs nonempty --n and --seeds")
            if min(self.n_range) < 3:
                raise BadConfigError("random graphs need n >= 3")
            largest = max(self.n_range)
        else:
            if not self._has_explicit_graphs():
                raise BadConfigError(f"{self.mode} needs --input or --construct")
            largest = 0
        dense_needed = self.method == "dense" or self.mode == "wei-check"
        if dense_needed and largest > self.dense_cap:
            raise BadConfigError(f"dense-cap {self.dense_cap} below largest n {largest}")

    def _has_explicit_graphs(self) -> bool:
        return bool(self.inputs or self.constructs)


# -- graph sources ---------------------------------------------------------

CONSTRUCTORS: dict[str, tuple[int, Callable[..., Graph]]] = {
    "gdk": (2, build_gdk),
    "path": (1, path_graph),
    "cycle": (1, cycle_graph),
    "kbipartite": (2, complete_bipartite),
    "star": (1, star),
}


def construct(spec: str) -> Graph:
    """Build a graph from ``kind:arg[:arg]``, e.g. ``gdk:3:2`` or ``path:4``."""
    kind, *raw = spec.split(":")
    if kind not in CONSTRUCTORS:
        raise BadConfigError(f"unknown construction {kind!r}; choose from {sorted(CONSTRUCTORS)}")
    arity, fn = CONSTRUCTORS[kind]
    try:
        args = [int(a) for a in raw]
    except ValueError:
        raise BadConfigError(f"non-integer parameter in {spec!r}") from None
    if len(args) != arity:
        raise BadConfigError(f"{kind} takes {arity} parameter(s), got {len(args)}")
    return fn(*args)


def explicit_graphs(cfg: SweepConfig) -> list[tuple[str, Graph]]:
    out = [(path, edgelist.parse_edge_list(path)) for path in cfg.inputs]
    out += [(spec, construct(spec)) for spec in cfg.constructs]
    return out


def random_tasks(cfg: SweepConfig) -> list[tuple[str, int, int]]:
    return [(f"random:n={n}:seed={s}", n, s) for n in cfg.n_range for s in cfg.seeds]


def suite_graph(n: int, seed: int, p: float, irregular: bool = True) -> Graph:
    """The random-suite graph for ``(n, seed)``; independent of sweep order."""
    if irregular:
        return random_connected_irregular(n, p, seed=[seed, n])
    return random_connected(n, p, seed=[seed, n])


# -- records ---------------------------------------------------------------

CHECK_NAMES = ("theorem1", "corollary", "alon_sudakov", "crucin")

REPORT_COLUMNS = (
    "label", "n", "m", "max_degree", "min_degree", "diameter", "irregular", "bipartite",
    "method", "mu1", "mun", "gap_top", "gap_bottom", "main_bound", "alon_sudakov_bound",
    "zhang_bound", "stevanovic_bound", "crucin_rhs",
    *(f"{c}_{f}" for c in CHECK_NAMES for f in ("slack", "verdict")),
    "main_beats_priors", "status", "error",
)

FAMILY_COLUMNS = (
    "delta", "k", *REPORT_COLUMNS[:-2], "gdk_gap_upper", "gdk_order_bound",
    "shape_ok", "tightness_ok", "status", "error",
)

SPECTRUM_COLUMNS = (
    "label", "n", "m", "method", "mu1", "mun", "mu1_residual", "mun_residual",
    "mu1_iterations", "mun_iterations", "status", "error",
)

WALK_COLUMNS = (
    "label", "n", "max_degree", "mu1", "k_max", "r_max", "k1r1_bound",
    "k1r1_equals_delta", "min_slack", "min_slack_k", "min_slack_r", "status", "error",
)

WEI_COLUMNS = (
    "label", "n", "bipartite", "walk_length", "deviation", "odd_slack", "even_slack",
    "odd_empirical_error", "even_empirical_error", "sign_pattern_error", "status", "error",
)

COLUMNS = {
    "spectrum": SPECTRUM_COLUMNS,
    "certify": REPORT_COLUMNS,
    "random-suite": REPORT_COLUMNS,
    "family-sweep": FAMILY_COLUMNS,
    "walk-bound": WALK_COLUMNS,
    "wei-check": WEI_COLUMNS,
}


def report_record(label: str, r: BoundReport) -> dict:
    rec = {
        "label": label, "n": r.n, "m": r.m, "max_degree": r.max_degree,
        "min_degree": r.min_degree, "diameter": r.diameter, "irregular": r.irregular,
        "bipartite": r.bipartite, "method": r.method, "mu1": r.mu1, "mun": r.mun,
        "gap_top": r.gap_top, "gap_bottom": r.gap_bottom, "main_bound": r.main_bound,
        "alon_sudakov_bound": r.alon_sudakov_bound, "zhang_bound": r.zhang_bound,
        "stevanovic_bound": r.stevanovic_bound, "crucin_rhs": r.crucin_rhs,
    }
    for name in CHECK_NAMES:
        c = r.check(name)
        rec[f"{name}_slack"] = c.slack
        rec[f"{name}_verdict"] = c.verdict
    rec["main_beats_priors"] = r.main_beats_priors
    rec["status"] = PASS_STATUS if r.passed else FAIL_STATUS
    rec["error"] = None
    return rec


def error_record(columns, label: str, exc: Exception, **known) -> dict:
    rec = dict.fromkeys(columns)
    rec.update(known)
    rec["label"] = label
    rec["status"] = ERROR_STATUS
    rec["error"] = f"{type(exc).__name__}: {exc}"
    return rec


def _spectrum_record(label: str, g: Graph, cfg: SweepConfig) -> dict:
    if cfg.method == "dense":
        spec = dense_spectrum(g, cfg.dense_cap)
        a = g.csr()
        x, y = spec.eigenvectors[:, 0], spec.eigenvectors[:, -1]
        mu1, mun = spec.mu1, spec.mun
        res1 = float(np.abs(a @ x - mu1 * x).max())
        resn = float(np.abs(a @ y - mun * y).max())
        it1 = itn = spec.sweeps
    else:
        top = largest_eigenvalue(g, cfg.tol, cfg.max_iter)
        bottom = smallest_eigenvalue(g, cfg.tol, cfg.max_iter, cfg.seed)
        mu1, mun, res1, resn = top.value, bottom.value, top.residual, bottom.residual
        it1, itn = top.iterations, bottom.iterations
    return {
        "label": label, "n": g.n, "m": g.m, "method": cfg.method, "mu1": mu1, "mun": mun,
        "mu1_residual": res1, "mun_residual": resn, "mu1_iterations": it1,
        "mun_iterations": itn, "status": PASS_STATUS, "error": None,
    }


def _certify(g: Graph, cfg: SweepConfig) -> BoundReport:
    return certify(g, cfg.method, cfg.tol, cfg.max_iter, cfg.dense_cap, cfg.seed)


def _family_record(delta: int, k: int, cfg: SweepConfig) -> dict:
    p = FamilyParams(delta, k)
    g = build_gdk(p)
    rep = structure(g)
    report = _certify(g, cfg)
    rec = {"delta": delta, "k": k, **report_record(f"gdk:{delta}:{k}", report)}
    upper, order = gdk_gap_upper_bound(p), gdk_gap_order_bound(p)
    shape_ok = (
        g.n == p.n and rep.max_degree == delta and rep.diameter == p.diameter
        and rep.bipartite and rep.irregular
    )
    tight_ok = 0.0 < report.gap_top < upper < order
    rec.update(gdk_gap_upper=upper, gdk_order_bound=order, shape_ok=shape_ok,
               tightness_ok=tight_ok)
    if not (shape_ok and tight_ok):
        rec["status"] = FAIL_STATUS
    return {c: rec.get(c) for c in FAMILY_COLUMNS}


def walk_bound_record(label: str, g: Graph, cfg: SweepConfig) -> dict:
    if cfg.method == "dense":
        mu1 = dense_spectrum(g, cfg.dense_cap).mu1
    else:
        mu1 = largest_eigenvalue(g, cfg.tol, cfg.max_iter).value
    profiles = walk_profiles(g, cfg.k_max + cfg.r_max)
    worst = (math.inf, 0, 0)
    k1r1 = None
    for k in range(1, cfg.k_max + 1):
        for r in range(1, cfg.r_max + 1):
            best = float(profile_ratio(profiles[k + r - 1], profiles[k - 1]).max())
            bound = best if r == 1 else best ** (1.0 / r)
            if k == 1 and r == 1:
                k1r1 = bound
            if bound - mu1 < worst[0]:
                worst = (bound - mu1, k, r)
    delta = g.max_degree
    ok = worst[0] >= -1e-9 and k1r1 == delta
    return {
        "label": label, "n": g.n, "max_degree": delta, "mu1": mu1, "k_max": cfg.k_max,
        "r_max": cfg.r_max, "k1r1_bound": k1r1, "k1r1_equals_delta": k1r1 == delta,
        "min_slack": worst[0], "min_slack_k": worst[1], "min_slack_r": worst[2],
        "status": PASS_STATUS if ok else FAIL_STATUS, "error": None,
    }


def wei_record(label: str, g: Graph, cfg: SweepConfig) -> dict:
    spec = dense_spectrum(g, cfg.dense_cap)
    rep = structure(g)
    rec = dict.fromkeys(WEI_COLUMNS)
    rec.update(label=label, n=g.n, bipartite=rep.bipartite)
    if rep.bipartite:
        w = bipartite_wei_check(g, spec)
        ok = w.passed and w.empirical_ok(WEI_TOL) and w.sign_pattern_error < SIGN_PATTERN_TOL
        rec.update(
            walk_length=w.walk_length, odd_slack=w.odd_slack, even_slack=w.even_slack,
            odd_empirical_error=w.odd_empirical_error,
            even_empirical_error=w.even_empirical_error,
            sign_pattern_error=w.sign_pattern_error,
        )
    else:
        k = wei_adaptive_k(spec)
        dev = wei_limit_deviation(g, k, spec)
        ok = dev < WEI_TOL
        rec.update(walk_length=k, deviation=dev)
    rec["status"] = PASS_STATUS if ok else FAIL_STATUS
    return rec


# -- evaluation ------------------------------------------------------------

def _evaluate(task) -> dict:
    """Evaluate one task; solver errors become an error row, never an abort."""
    kind, label, payload, cfg = task
    columns = COLUMNS[cfg.mode]
    try:
        if kind == "family":
            return _family_record(*payload, cfg)
        if kind == "random":
            n, seed = payload
            g = suite_graph(n, seed, cfg.edge_probability, irregular=cfg.mode == "random-suite")
        else:
            g = payload
        if cfg.mode == "spectrum":
            rec = _spectrum_record(label, g, cfg)
        elif cfg.mode in ("certify", "random-suite"):
            rec = report_record(label, _certify(g, cfg))
        elif cfg.mode == "walk-bound":
            rec = walk_bound_record(label, g, cfg)
        else:
            rec = wei_record(label, g, cfg)
        return {c: rec.get(c) for c in columns}
    except (SpectralGapError, ArithmeticError, ValueError) as exc:
        known = {"delta": payload[0], "k": payload[1]} if kind == "family" else {}
        return error_record(columns, label, exc, **known)


def build_tasks(cfg: SweepConfig) -> list:
    if cfg.mode == "family-sweep":
        return [("family", f"gdk:{d}:{k}", (d, k), cfg)
                for d in cfg.delta_range for k in cfg.k_range]
    if cfg.mode == "random-suite" or (
        cfg.mode in ("walk-bound", "wei-check") and not cfg._has_explicit_graphs()
    ):
        return [("random", label, (n, s), cfg) for label, n, s in random_tasks(cfg)]
    return [("graph", label, g, cfg) for label, g in explicit_graphs(cfg)]


def run(cfg: SweepConfig) -> list[dict]:
    """Evaluate every task of the sweep; output order equals task order."""
    cfg.validate()
    tasks = build_tasks(cfg)
    if cfg.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            return list(pool.map(_evaluate, tasks))
    return [_evaluate(t) for t in tasks]


def exit_status(records: list[dict]) -> int:
    return 0 if all(r["status"] == PASS_STATUS for r in records) else 1


def summarize(records: list[dict]) -> str:
    failed = [r for r in records if r["status"] != PASS_STATUS]
    marginal = sum(
        1 for r in records for key, v in r.items() if key.endswith("_verdict") and v == "marginal"
    )
    line = f"{len(records)} rows, {len(records) - len(failed)} passed, {len(failed)} failed"
    if marginal:
        line += f", {marginal} marginal verdicts"
    out = [line]
    for r in failed[:20]:
        out.append(f"  {r['status']}: {r['label']}" + (f" ({r['error']})" if r["error"] else ""))
    if len(failed) > 20:
        out.append(f"  ... {len(failed) - 20} more")
    return "\n".join(out)


# -- serialization ---------------------------------------------------------

def format_value(v) -> str:
    """Canonical text for a field; shared by CSV and JSON lines."""
    if v is None:
        return ""
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (float, np.floating)):
        v = float(v)
        if math.isnan(v):
            return ""
        if math.isinf(v):
            return "inf" if v > 0 else "-inf"
        return format(v, ".17g")
    return str(v)


def _json_value(v) -> str:
    if v is None:
        return "null"
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (float, np.floating)):
        v = float(v)
        if math.isnan(v) or math.isinf(v):
            return "null"
        return format(v, ".17g")
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    return json.dumps(v)


def to_jsonl(records: list[dict], columns) -> str:
    lines = []
    for r in records:
        body = ", ".join(f"{json.dumps(c)}: {_json_value(r.get(c))}" for c in columns)
        lines.append("{" + body + "}")
    return "".join(line + "\n" for line in lines)


def to_csv(records: list[dict], columns) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for r in records:
        writer.writerow([format_value(r.get(c)) for c in columns])
    return buf.getvalue()


TABLE_COLUMNS = {
    "spectrum": ("label", "n", "m", "mu1", "mun", "mu1_residual", "status"),
    "certify": ("label", "n", "max_degree", "diameter", "mu1", "gap_top", "main_bound",
                "theorem1_verdict", "corollary_verdict", "crucin_verdict", "status"),
    "family-sweep": ("delta", "k", "n", "diameter", "gap_top", "main_bound",
                     "gdk_gap_upper", "shape_ok", "tightness_ok", "status"),
    "walk-bound": ("label", "n", "max_degree", "mu1", "k1r1_bound", "min_slack", "status"),
    "wei-check": ("label", "n", "bipartite", "walk_length", "deviation",
                  "odd_empirical_error", "even_empirical_error", "status"),
}
TABLE_COLUMNS["random-suite"] = TABLE_COLUMNS["certify"]


def to_table(records: list[dict], mode: str) -> str:
    cols = TABLE_COLUMNS[mode]

    def cell(v):
        if isinstance(v, (float, np.floating)):
            return "" if math.isnan(v) else f"{float(v):.6g}"
        return format_value(v)

    rows = [list(cols)] + [[cell(r.get(c)) for c in cols] for r in records]
    widths = [max(len(row[i]) for row in rows) for i in range(len(cols))]
    lines = ["  ".join(s.rjust(w) for s, w in zip(row, widths)) for row in rows]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def render(records: list[dict], cfg: SweepConfig) -> str:
    columns = COLUMNS[cfg.mode]
    if cfg.format == "jsonl":
        return to_jsonl(records, columns)
    if cfg.format == "csv":
        return to_csv(records, columns)
    return to_table(records, cfg.mode)
