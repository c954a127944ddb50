"""Command-line entry point.

Exit status: 0 when every checked inequality passed, 1 when some row failed
or errored, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import sys

from . import edgelist
from .errors import SpectralGapError
from .harness import SweepConfig, construct, exit_status, render, run, summarize
from .spectral import DEFAULT_DENSE_CAP, DEFAULT_MAX_ITER, DEFAULT_SEED, DEFAULT_TOL


def int_range(text: str) -> tuple[int, ...]:
    """Parse ``"3"``, ``"2..5"`` (inclusive) or ``"1,4,9"``."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            values = tuple(range(int(lo), int(hi) + 1))
        else:
            values = tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad integer range {text!r}") from None
    if not values:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return values


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--tol", type=float, default=DEFAULT_TOL,
                   help="eigenvector residual tolerance (default %(default)g)")
    p.add_argument("--max-iter", type=int, default=DEFAULT_MAX_ITER)
    p.add_argument("--dense-cap", type=int, default=DEFAULT_DENSE_CAP,
                   help="largest n handed to the dense oracle")
    p.add_argument("--method", choices=("iterative", "dense"), default="iterative")
    p.add_argument("--format", choices=("table", "csv", "jsonl"), default="table")
    p.add_argument("--output", metavar="PATH", help="write the report here instead of stdout")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED,
                   help="base seed for start vectors and random graphs")
    p.add_argument("--jobs", type=int, default=1, help="worker processes (output order is fixed)")


def _graph_sources(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", action="append", default=[], metavar="PATH",
                   help="edge-list file (repeatable)")
    p.add_argument("--construct", action="append", default=[], metavar="KIND:ARGS",
                   help="gdk:D:K, path:K, cycle:K, kbipartite:A:B or star:L (repeatable)")


def _random_sources(p: argparse.ArgumentParser, required: bool) -> None:
    p.add_argument("--n", type=int_range, required=required, help="vertex counts, e.g. 4..12")
    p.add_argument("--seeds", type=int, required=required,
                   help="number of seeds per n, starting at --seed")
    p.add_argument("--p", type=float, default=0.5, dest="edge_probability",
                   help="edge probability of the random graphs (default %(default)s)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spectral-gap",
        description="Spectral radius versus maximum degree: compute, certify, sweep.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="largest and smallest adjacency eigenvalues")
    _graph_sources(p)
    _common(p)

    p = sub.add_parser("certify", help="bound certificate per graph")
    _graph_sources(p)
    _common(p)

    p = sub.add_parser("family-sweep", help="certify the chained K_{D,D} family over a grid")
    p.add_argument("--delta", type=int_range, required=True, help="e.g. 2..6")
    p.add_argument("--k", type=int_range, required=True, help="e.g. 1..10")
    _common(p)

    p = sub.add_parser("random-suite", help="certify seeded random connected irregular graphs")
    _random_sources(p, required=True)
    _common(p)

    p = sub.add_parser("walk-bound", help="check the walk-ratio upper bound on mu1")
    _graph_sources(p)
    _random_sources(p, required=False)
    p.add_argument("--k-max", type=int, default=8)
    p.add_argument("--r-max", type=int, default=4)
    _common(p)

    p = sub.add_parser("wei-check", help="check walk-vector limits against the Perron vector")
    _graph_sources(p)
    _random_sources(p, required=False)
    _common(p)

    p = sub.add_parser("construct", help="write a named graph as an edge list")
    p.add_argument("kind", choices=("gdk", "path", "cycle", "kbipartite", "star"))
    p.add_argument("params", type=int, nargs="+")
    p.add_argument("--output", metavar="PATH")
    return parser


def config_from_args(args: argparse.Namespace) -> SweepConfig:
    seeds = ()
    if getattr(args, "seeds", None) is not None:
        seeds = tuple(range(args.seed, args.seed + args.seeds))
    return SweepConfig(
        mode=args.command,
        inputs=tuple(getattr(args, "input", ()) or ()),
        constructs=tuple(getattr(args, "construct", ()) or ()),
        delta_range=getattr(args, "delta", None) or (),
        k_range=getattr(args, "k", None) or (),
        n_range=getattr(args, "n", None) or (),
        seeds=seeds,
        edge_probability=getattr(args, "edge_probability", 0.5),
        k_max=getattr(args, "k_max", 8),
        r_max=getattr(args, "r_max", 4),
        tol=args.tol,
        max_iter=args.max_iter,
        dense_cap=args.dense_cap,
        method=args.method,
        seed=args.seed,
        format=args.format,
        output=args.output,
        jobs=args.jobs,
    )


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "construct":
            g = construct(":".join([args.kind, *map(str, args.params)]))
            _emit(edgelist.dumps(g, comment=f"{args.kind} {' '.join(map(str, args.params))}"),
                  args.output)
            return 0
        cfg = config_from_args(args)
        records = run(cfg)
        _emit(render(records, cfg), cfg.output)
    except (SpectralGapError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(summarize(records), file=sys.stderr)
    return exit_status(records)


if __name__ == "__main__":
    sys.exit(main())
