"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 infeasible decision point,
3 I/O failure.  All randomised commands are fully determined by their
``--seed``, so repeated runs produce byte-identical output files.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

import numpy as np

from .calibrate import DEFAULT_EPSILON, DecisionPoint
from .errors import DomainError, InfeasiblePointError
from .explore import (
    GRID_METRICS,
    epsilon_sweep,
    fit_frontier,
    grid_csv_name,
    latin_hypercube,
    run_sweep,
    sensitivity_grid,
    write_epsilon_curve_csv,
    write_grid_csv,
    write_sweep_csv,
)
from .generate import GenerationOutcome, generate_weights
from .metrics import andness, dispersion, orness, owa_aggregate, tradeoff

__all__ = ["main", "build_parser"]

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INFEASIBLE = 2
EXIT_IO = 3

#: Epsilon grid for the rejected-fraction curve: log-spaced across the
#: range where the plateau shows up.
EPSILON_GRID = tuple(np.logspace(-12, -1, 30).tolist())


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; 2 means "infeasible" here
    def error(self, message):
        self.print_usage(sys.stderr)
        raise SystemExit2(message)


class SystemExit2(Exception):
    def __init__(self, message):
        self.message = message
        super().__init__(message)


def _fmt12(x: float) -> str:
    return f"{x:.12g}"


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="owagen", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="generate order weights for (alpha, delta, n)")
    gen.add_argument("--alpha", type=float, required=True)
    gen.add_argument("--delta", type=float, required=True)
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--epsilon", type=float, default=DEFAULT_EPSILON)
    gen.add_argument("--format", choices=("json", "csv", "plain"), default="plain")

    agg = sub.add_parser("aggregate", help="aggregate criteria with OWA weights")
    agg.add_argument("--criteria", required=True, help="comma-separated criteria values")
    agg.add_argument("--weights", help="comma-separated weights (alternative to --alpha/--delta)")
    agg.add_argument("--weights-file", help="file with one weight per line")
    agg.add_argument("--alpha", type=float)
    agg.add_argument("--delta", type=float)
    agg.add_argument("--n", type=int)
    agg.add_argument("--epsilon", type=float, default=DEFAULT_EPSILON)
    agg.add_argument("--format", choices=("json", "csv", "plain"), default="plain")

    met = sub.add_parser("metrics", help="orness/andness/dispersion/tradeoff of weights")
    met.add_argument("--weights", required=True, help="comma-separated weights")
    met.add_argument("--format", choices=("json", "csv", "plain"), default="plain")

    swp = sub.add_parser("sweep", help="LHS sweep: sweep.csv + epsilon_curve.csv")
    swp.add_argument("--samples", type=int, default=2000)
    swp.add_argument("--seed", type=int, default=0)
    swp.add_argument("--epsilon", type=float, default=DEFAULT_EPSILON)
    swp.add_argument("--out-dir", default=".")

    fro = sub.add_parser("frontier", help="LHS sweep + parabola fit of the frontier")
    fro.add_argument("--samples", type=int, default=10000)
    fro.add_argument("--seed", type=int, default=0)
    fro.add_argument("--epsilon", type=float, default=DEFAULT_EPSILON)
    fro.add_argument("--bins", type=int, default=25)
    fro.add_argument("--out-dir", default=".")

    grd = sub.add_parser("grid", help="sensitivity grid of one metric over (alpha, delta)")
    grd.add_argument("--n", type=int, required=True)
    grd.add_argument("--metric", choices=GRID_METRICS, required=True)
    grd.add_argument("--resolution", type=int, default=41)
    grd.add_argument("--epsilon", type=float, default=DEFAULT_EPSILON)
    grd.add_argument("--out-dir", default=".")

    srv = sub.add_parser("serve", help="serve the HTTP API (and the web explorer, if built)")
    srv.add_argument("--port", type=int, default=8080)
    srv.add_argument("--host", default="127.0.0.1")
    srv.add_argument("--static-dir", default=None)

    return parser


def _parse_floats(text: str) -> list[float]:
    try:
        return [float(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError as exc:
        raise DomainError(f"could not parse number list {text!r}: {exc}") from None


def outcome_doc(outcome: GenerationOutcome, epsilon: float) -> dict:
    """JSON document for a generation outcome (full-precision weights).

    Metrics undefined at n = 1 become null: emitting bare NaN would not
    be parseable by standard JSON consumers.
    """

    def num(value: float):
        return None if math.isnan(value) else value

    return {
        "weights": list(outcome.weights),
        "alpha": outcome.point.alpha,
        "delta": outcome.point.delta,
        "n": len(outcome.weights),
        "epsilon": epsilon,
        "orness": num(outcome.achieved_orness),
        "dispersion": num(outcome.achieved_dispersion),
        "tradeoff": num(outcome.achieved_tradeoff),
        "feasible": True,
        "method": outcome.method,
        "distance": outcome.calibration.distance if outcome.calibration else None,
    }


def _print_outcome(outcome: GenerationOutcome, epsilon: float, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(outcome_doc(outcome, epsilon)))
        return
    weights_text = ",".join(_fmt12(w) for w in outcome.weights)
    if fmt == "csv":
        names = ",".join(f"w{i + 1}" for i in range(len(outcome.weights)))
        print(f"alpha,delta,n,{names},orness,dispersion,tradeoff")
        print(
            f"{_fmt12(outcome.point.alpha)},{_fmt12(outcome.point.delta)},"
            f"{len(outcome.weights)},{weights_text},"
            f"{_fmt12(outcome.achieved_orness)},{_fmt12(outcome.achieved_dispersion)},"
            f"{_fmt12(outcome.achieved_tradeoff)}"
        )
        return
    print(weights_text)
    print(f"orness={_fmt12(outcome.achieved_orness)}")
    print(f"dispersion={_fmt12(outcome.achieved_dispersion)}")
    print(f"tradeoff={_fmt12(outcome.achieved_tradeoff)}")


def cmd_generate(args) -> int:
    point = DecisionPoint(args.alpha, args.delta)
    outcome = generate_weights(point, args.n, args.epsilon)
    _print_outcome(outcome, args.epsilon, args.format)
    return EXIT_OK


def cmd_aggregate(args) -> int:
    criteria = _parse_floats(args.criteria)
    sources = [s for s in (args.weights, args.weights_file, args.alpha) if s is not None]
    if len(sources) != 1:
        raise DomainError(
            "provide exactly one of --weights, --weights-file, or --alpha/--delta"
        )
    if args.weights is not None:
        weights = _parse_floats(args.weights)
    elif args.weights_file is not None:
        weights = [float(line) for line in Path(args.weights_file).read_text().split()]
    else:
        if args.delta is None:
            raise DomainError("--alpha requires --delta")
        n = args.n if args.n is not None else len(criteria)
        outcome = generate_weights(DecisionPoint(args.alpha, args.delta), n, args.epsilon)
        weights = list(outcome.weights)
    value = owa_aggregate(weights, criteria)
    if args.format == "json":
        print(json.dumps({"value": value, "weights": weights, "criteria": criteria}))
    else:
        print(_fmt12(value))
    return EXIT_OK


def cmd_metrics(args) -> int:
    weights = _parse_floats(args.weights)
    doc = {
        "orness": orness(weights),
        "andness": andness(weights),
        "dispersion": dispersion(weights),
        "tradeoff": tradeoff(weights),
        "n": len(weights),
    }
    if args.format == "json":
        print(json.dumps(doc))
    elif args.format == "csv":
        print("orness,andness,dispersion,tradeoff,n")
        print(
            f"{_fmt12(doc['orness'])},{_fmt12(doc['andness'])},"
            f"{_fmt12(doc['dispersion'])},{_fmt12(doc['tradeoff'])},{doc['n']}"
        )
    else:
        for key in ("orness", "andness", "dispersion", "tradeoff"):
            print(f"{key}={_fmt12(doc[key])}")
    return EXIT_OK


def cmd_sweep(args) -> int:
    points = latin_hypercube(args.samples, args.seed)
    records = run_sweep(points, args.epsilon)
    curve = epsilon_sweep(points, EPSILON_GRID)
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    write_sweep_csv(records, out / "sweep.csv")
    write_epsilon_curve_csv(curve, out / "epsilon_curve.csv")
    rejected = sum(1 for r in records if not r.accepted) / len(records)
    print(
        f"sweep: samples={args.samples} seed={args.seed} epsilon={args.epsilon:g} "
        f"rejected_fraction={rejected:.4f}"
    )
    return EXIT_OK


def cmd_frontier(args) -> int:
    points = latin_hypercube(args.samples, args.seed)
    records = run_sweep(points, args.epsilon)
    fit = fit_frontier(records, n_bins=args.bins)
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    write_sweep_csv(records, out / "sweep.csv")
    print(
        f"frontier: delta = {fit.a:.4f}*alpha^2 + {fit.b:.4f}*alpha + {fit.c:.4f} "
        f"(rmse={fit.rmse:.4f}, samples={args.samples}, seed={args.seed})"
    )
    return EXIT_OK


def cmd_grid(args) -> int:
    grid = sensitivity_grid(args.n, args.metric, args.resolution, args.epsilon)
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    path = out / grid_csv_name(args.metric, args.n)
    write_grid_csv(grid, path)
    feasible = int(grid.feasible.sum())
    print(
        f"grid: metric={args.metric} n={args.n} resolution={args.resolution} "
        f"feasible_cells={feasible}/{grid.feasible.size} -> {path}"
    )
    return EXIT_OK


def cmd_serve(args) -> int:
    from .service import serve  # deferred: keeps CLI import light

    serve(host=args.host, port=args.port, static_dir=args.static_dir)
    return EXIT_OK


_HANDLERS = {
    "generate": cmd_generate,
    "aggregate": cmd_aggregate,
    "metrics": cmd_metrics,
    "sweep": cmd_sweep,
    "frontier": cmd_frontier,
    "grid": cmd_grid,
    "serve": cmd_serve,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit2 as exc:
        print(f"error: {exc.message}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return _HANDLERS[args.command](args)
    except InfeasiblePointError as exc:
        print(f"error: {exc} (delta_max={exc.delta_max:g})", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (DomainError, ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    raise SystemExit(main())
