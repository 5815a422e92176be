"""Command-line interface.

Subcommands:

    threshold   critical ratio of one graph (engine)
    sweep       closed-form parameter sweeps over a family axis
    simulate    Monte Carlo fixation estimates over a b/c grid
    closedform  direct evaluation of family formulas, transitions, limits
    generate    emit a generated graph as edge-list text

All tabular output is CSV with a fixed header per command; non-finite values
are written as ``inf``/``-inf``/``nan`` so files round-trip through float().
Exit codes: 0 success, 2 invalid input, 3 numerical failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import math
import sys
from pathlib import Path

import numpy as np

from . import closed_forms as cf
from . import montecarlo as mc
from .errors import (
    InvalidFamilyParamsError,
    LoopfixError,
    NumericalError,
    ParameterError,
    UnknownAxisError,
)
from .graph import (
    Graph,
    LandscapeSpec,
    apply_landscape,
    degree_metrics,
    from_edge_list,
    largest_component,
    to_edge_list,
    validate,
)
from .generators import GeneratorSpec, generate
from .threshold import ThresholdResult

_NAMED_LANDSCAPES = {
    "zero": LandscapeSpec.zero,
    "ln_k": LandscapeSpec.ln_k,
    "exp_neg_k": LandscapeSpec.exp_neg_k,
    "one_minus_inv_k": LandscapeSpec.one_minus_inv_k,
    "inv_k_plus_one": LandscapeSpec.inv_k_plus_one,
}


def resolve_landscape(text: str, g: Graph) -> LandscapeSpec:
    """Parse a --landscape argument against a concrete graph.

    Accepts a named degree function (zero, ln_k, exp_neg_k, one_minus_inv_k,
    inv_k_plus_one), ``constant:X``, ``explicit:v0,v1,...``,
    ``bydegree:D=V,D=V[,default=V]``, or ``file:PATH`` with one value per
    line.
    """
    text = text.strip()
    if text in _NAMED_LANDSCAPES:
        return _NAMED_LANDSCAPES[text]()
    kind, _, rest = text.partition(":")
    if kind == "constant":
        return LandscapeSpec.constant(float(rest))
    if kind == "explicit":
        return LandscapeSpec.explicit([float(v) for v in rest.split(",")])
    if kind == "file":
        values = [float(line) for line in Path(rest).read_text().split()]
        return LandscapeSpec.explicit(values)
    if kind == "bydegree":
        table: dict[int, float] = {}
        default = None
        for part in rest.split(","):
            key, _, value = part.partition("=")
            if key.strip() == "default":
                default = float(value)
            else:
                table[int(key)] = float(value)
        values = []
        for k in (int(d) for d in g.degrees):
            if k in table:
                values.append(table[k])
            elif default is not None:
                values.append(default)
            else:
                raise ParameterError(f"bydegree landscape has no entry for degree {k}")
        return LandscapeSpec.explicit(values)
    raise ParameterError(f"cannot parse landscape {text!r}")


def _fmt(value) -> str:
    if value is None:
        return "nan"
    if isinstance(value, np.generic):
        value = value.item()
    if isinstance(value, float):
        return repr(value) if math.isfinite(value) else str(value)
    return str(value)


def _write_rows(out_path: str | None, header: list[str], rows: list[list]) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_fmt(v) for v in row])
    text = buf.getvalue()
    if out_path:
        Path(out_path).write_text(text)
    else:
        sys.stdout.write(text)


def _load_graph(args) -> tuple[Graph, str]:
    if getattr(args, "input", None):
        g = from_edge_list(Path(args.input).read_text())
        label = args.input
    else:
        spec = GeneratorSpec.parse(args.model, seed=args.seed)
        g = generate(spec, lcc=args.lcc)
        label = args.model
    if args.lcc:
        g = largest_component(g)
    if getattr(args, "landscape", None):
        g = apply_landscape(g, resolve_landscape(args.landscape, g))
    return g, label


# ---------------------------------------------------------------------------
# threshold

_THRESHOLD_HEADER = [
    "graph", "n", "mean_degree", "mean_neighbor_degree",
    "bc_star", "regime", "sigma", "eta1", "eta2", "eta3",
]


def cmd_threshold(args) -> int:
    from .coalescence import eta_series, remeeting_times, solve_pairwise_eta
    from .threshold import result_from_num_den
    from .walk import transition_matrix

    g, label = _load_graph(args)
    validate(g, threshold=True)
    metrics = degree_metrics(g)
    w = transition_matrix(g)
    eta = solve_pairwise_eta(g, w, method=args.method, max_sweeps=args.max_sweeps)
    eta1, eta2, eta3 = eta_series(eta, remeeting_times(eta, w), w)
    tr = result_from_num_den(eta2, eta3 - eta1)
    row = [
        label, g.n, metrics.mean_degree, metrics.mean_neighbor_degree,
        tr.bc_star, tr.regime.value, tr.sigma, eta1, eta2, eta3,
    ]
    _write_rows(args.out, _THRESHOLD_HEADER, [row])
    return 0


# ---------------------------------------------------------------------------
# sweep

_SWEEP_HEADER = ["family", "axis", "value", "bc_star", "regime", "sigma"]

_FAMILY_EVALUATORS = {
    "regular": ("N", "k", "ell"),
    "star": ("N", "alpha", "beta"),
    "hubhub": ("N", "alpha", "gamma"),
    "cf": ("N", "eps", "beta"),
}


def _family_bc(family: str, params: dict) -> ThresholdResult:
    if family == "regular":
        return cf.bc_regular(params["N"], params["k"], params["ell"])
    if family == "star":
        return cf.bc_star(params["N"], params["alpha"], params["beta"])
    if family == "hubhub":
        return cf.bc_hubhub(params["N"], params["alpha"], params["gamma"])
    if family == "cf":
        return cf.bc_ceiling_fan(params["N"], params["eps"], params["beta"])
    raise InvalidFamilyParamsError(f"unknown family {family!r}")


def cmd_sweep(args) -> int:
    if args.axis == "bc":
        raise UnknownAxisError("b/c grids are swept by the 'simulate' command")
    if args.axis not in ("ell", "alpha", "beta", "gamma", "eps", "N"):
        raise UnknownAxisError(f"unknown sweep axis {args.axis!r}")
    if not (math.isfinite(args.min) and math.isfinite(args.max) and args.steps >= 2):
        raise ParameterError("sweep needs finite bounds and steps >= 2")

    base = {
        "N": args.N, "k": args.k, "ell": args.ell,
        "alpha": args.alpha, "beta": args.beta, "gamma": args.gamma, "eps": args.eps,
    }
    family = args.family
    if family not in _FAMILY_EVALUATORS:
        raise InvalidFamilyParamsError(f"sweep supports families {sorted(_FAMILY_EVALUATORS)}")
    if args.axis != "N" and args.axis not in _FAMILY_EVALUATORS[family]:
        raise UnknownAxisError(f"axis {args.axis!r} does not apply to family {family!r}")

    grid = np.linspace(args.min, args.max, args.steps)
    rows = []
    for value in grid:
        params = dict(base)
        if args.axis == "N":
            value = int(round(value))
            if family == "cf" and value % 2 == 0:
                continue
            params["N"] = value
        else:
            params[args.axis] = float(value)
        tr = _family_bc(family, params)
        rows.append([family, args.axis, value, tr.bc_star, tr.regime.value, tr.sigma])
    _write_rows(args.out, _SWEEP_HEADER, rows)
    return 0


# ---------------------------------------------------------------------------
# simulate

_SIMULATE_HEADER = [
    "graph", "bc", "trials", "rho_c", "stderr_c", "rho_d", "stderr_d",
    "n_times_diff", "fit_slope", "fit_intercept", "fit_crossing",
]


def cmd_simulate(args) -> int:
    g, label = _load_graph(args)
    validate(g, threshold=True)
    if args.bc:
        bc_values = [float(v) for v in args.bc.split(",")]
    elif args.b is not None:
        bc_values = [args.b / args.c]
    else:
        if args.min is None or args.max is None:
            raise ParameterError("simulate needs --bc, --b, or --min/--max/--steps")
        bc_values = list(np.linspace(args.min, args.max, args.steps))

    points = []
    for bc_val in bc_values:
        params = mc.GameParams(b=bc_val * args.c, c=args.c, delta=args.delta)
        comp = mc.compare_fixation(g, params, args.trials, args.seed)
        points.append((bc_val, comp))

    if len(points) >= 2:
        slope, intercept, crossing = mc.fit_zero_crossing(
            [p[0] for p in points], [p[1].n_times_diff for p in points]
        )
    else:
        slope = intercept = crossing = math.nan

    rows = [
        [
            label, bc_val, args.trials,
            comp.coop.rho_hat, comp.coop.stderr,
            comp.defect.rho_hat, comp.defect.stderr,
            comp.n_times_diff, slope, intercept, crossing,
        ]
        for bc_val, comp in points
    ]
    _write_rows(args.out, _SIMULATE_HEADER, rows)
    return 0


# ---------------------------------------------------------------------------
# closedform

_CLOSEDFORM_HEADER = [
    "family", "quantity", "N", "k", "ell", "alpha", "beta", "gamma", "eps",
    "value", "regime", "sigma",
]


def cmd_closedform(args) -> int:
    family, quantity = args.family, args.quantity
    p = {
        "N": args.N, "k": args.k, "ell": args.ell,
        "alpha": args.alpha, "beta": args.beta, "gamma": args.gamma, "eps": args.eps,
    }
    regime = sigma = None
    if quantity == "bc":
        tr = _family_bc(family, p)
        value, regime, sigma = tr.bc_star, tr.regime.value, tr.sigma
    elif quantity == "transition" and family == "regular":
        value = cf.regular_spite_transition(p["N"], p["k"])
    elif quantity == "limit" and family == "star":
        value = cf.star_limit_beta0(p["alpha"])
    elif quantity == "limit" and family == "hubhub":
        value = cf.hubhub_limit(p["alpha"])
    elif quantity == "limit" and family == "cf":
        value = cf.cf_limit(p["eps"])
    elif quantity == "exception" and family == "star":
        value = cf.star_exception_threshold_N3()
    elif quantity == "exception" and family == "cf":
        value = cf.cf_exception_epsilon(p["N"])
    else:
        raise ParameterError(f"quantity {quantity!r} not defined for family {family!r}")
    row = [family, quantity, p["N"], p["k"], p["ell"], p["alpha"], p["beta"],
           p["gamma"], p["eps"], value, regime, sigma]
    _write_rows(args.out, _CLOSEDFORM_HEADER, [row])
    return 0


# ---------------------------------------------------------------------------
# generate

def cmd_generate(args) -> int:
    spec = GeneratorSpec.parse(args.model, seed=args.seed)
    g = generate(spec, lcc=args.lcc)
    if args.lcc:
        g = largest_component(g)
    text = to_edge_list(g)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


# ---------------------------------------------------------------------------
# parser

def _add_source_flags(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", help="edge-list file")
    src.add_argument("--model", help="generator spec, e.g. ws:N=100,k=6,p=0.1")
    p.add_argument("--landscape", default="zero", help="self-loop rule (default: zero)")
    p.add_argument("--lcc", action="store_true", help="reduce to largest connected component")
    p.add_argument("--seed", type=int, default=0, help="random seed (default 0)")


def _add_family_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", required=True, choices=sorted(_FAMILY_EVALUATORS))
    p.add_argument("--N", type=int, default=None)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--ell", type=float, default=0.0)
    p.add_argument("--alpha", type=float, default=0.0)
    p.add_argument("--beta", type=float, default=0.0)
    p.add_argument("--gamma", type=float, default=0.0)
    p.add_argument("--eps", type=float, default=0.0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="loopfix",
        description="cooperation thresholds and fixation dynamics on graphs with self-loops",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("threshold", help="critical benefit-to-cost ratio of one graph")
    _add_source_flags(p)
    p.add_argument("--method", choices=("direct", "jacobi"), default="direct")
    p.add_argument("--max-sweeps", type=int, default=10**6,
                   help="iteration budget for --method jacobi")
    p.add_argument("--out")
    p.set_defaults(func=cmd_threshold)

    p = sub.add_parser("sweep", help="closed-form sweep along a family parameter")
    _add_family_flags(p)
    p.add_argument("--axis", required=True)
    p.add_argument("--min", type=float, required=True)
    p.add_argument("--max", type=float, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("simulate", help="Monte Carlo fixation estimates over a b/c grid")
    _add_source_flags(p)
    p.add_argument("--bc", help="comma-separated b/c values")
    p.add_argument("--b", type=float, help="single benefit value (with --c)")
    p.add_argument("--min", type=float)
    p.add_argument("--max", type=float)
    p.add_argument("--steps", type=int, default=4)
    p.add_argument("--trials", type=int, default=10000)
    p.add_argument("--delta", type=float, default=0.01)
    p.add_argument("--c", type=float, default=1.0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("closedform", help="evaluate family formulas, transitions, limits")
    _add_family_flags(p)
    p.add_argument("--quantity", choices=("bc", "transition", "limit", "exception"),
                   default="bc")
    p.add_argument("--out")
    p.set_defaults(func=cmd_closedform)

    p = sub.add_parser("generate", help="emit a generated graph as an edge list")
    p.add_argument("--model", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--lcc", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_generate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NumericalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (LoopfixError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
