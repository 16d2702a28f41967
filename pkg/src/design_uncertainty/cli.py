"""Command-line front end: design verification, bound sweeps, random-state
audits and steering checks.

Exit codes: 0 success, 1 property/verification failure, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from . import __version__
from .bounds import (audit_state, bound_prior, bound_prop1, bound_prop1_nr,
                     bound_prop2)
from .designs import (AssignmentError, DesignLoadError, assign_povms,
                      builtin_design, load_design, mub_grouping, verify_design)
from .moments import beta_range
from .quantum import check_density, maximally_mixed, random_density
from .steering import (matched_alice_povms, steering_check_maxprob,
                       steering_check_renyi)

BUILTIN_NAMES = ("octahedron", "icosahedron", "icosidodecahedron")


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def _get_design(source: str):
    if source in BUILTIN_NAMES:
        return builtin_design(source)
    return load_design(source)


def _get_assignment(design, grouping: str):
    if grouping == "single":
        return assign_povms(design, "single")
    if grouping == "mub":
        return assign_povms(design, mub_grouping())
    with open(grouping) as fh:
        return assign_povms(design, json.load(fh))


def _parse_alphas(text: str) -> list[float]:
    alphas = []
    for tok in text.split(","):
        tok = tok.strip()
        if tok:
            alphas.append(math.inf if tok == "inf" else float(tok))
    return alphas


def _load_bipartite_state(path):
    with open(path) as fh:
        raw = json.load(fh)
    da, db = (int(x) for x in raw["dims"])
    rows = raw["matrix"]
    mat = np.array([[complex(p[0], p[1]) for p in row] for row in rows])
    if mat.shape != (da * db, da * db):
        raise ValueError(f"matrix shape {mat.shape} does not match dims {(da, db)}")
    if not np.all(np.isfinite(mat.view(float))):
        raise ValueError("state matrix contains non-finite entries")
    return check_density(mat), (da, db)


def cmd_verify(args) -> int:
    design = _get_design(args.design)
    t = args.t if args.t is not None else design.strength
    report = verify_design(design, t, tol=args.tol, method=args.method)
    print(f"design: {args.design}  d={design.dimension}  K={design.size}")
    print(f"method: {report.method}  tol: {_fmt(report.tol)}")
    for s, r in sorted(report.residuals.items()):
        print(f"  s={s}  residual={_fmt(r)}")
    print("PASS" if report.passes else "FAIL")
    return 0 if report.passes else 1


def cmd_sweep(args) -> int:
    design = _get_design(args.design)
    assignment = _get_assignment(design, args.grouping)
    n, d = assignment.n_outcomes, design.dimension
    s = args.s if args.s is not None else design.strength
    lo, hi = beta_range(n, d, s)
    grid = np.linspace(lo, hi, args.points)
    finite_alphas = [a for a in _parse_alphas(args.alphas) if not math.isinf(a)]

    header = ["beta_bar", "bound_prior", "bound_prop1", "bound_prop1_nr"]
    header += [f"bound_prop2_alpha{_fmt(a)}" for a in finite_alphas]
    rows = []
    for b in grid:
        prior = bound_prior(n, s, b, math.inf)
        prop1 = bound_prop1(n, s, b)
        nr = bound_prop1_nr(n, s, b)
        if not prop1 >= nr - 1e-12 or not nr >= prior - 1e-12:
            print(f"bound ordering violated at beta_bar={b}", file=sys.stderr)
            return 1
        row = [b, prior, prop1, nr]
        row += [bound_prop2(n, s, a, b) for a in finite_alphas]
        rows.append(row)

    if args.format == "csv":
        lines = [",".join(header)]
        lines += [",".join(_fmt(x) for x in row) for row in rows]
        text = "\n".join(lines) + "\n"
    else:
        text = json.dumps([dict(zip(header, row)) for row in rows], indent=1)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_audit(args) -> int:
    design = _get_design(args.design)
    assignment = _get_assignment(design, args.grouping)
    s = args.s if args.s is not None else design.strength
    alphas = [max(a, s) if not math.isinf(a) else a
              for a in _parse_alphas(args.alphas)]
    rng = np.random.default_rng(args.seed)
    violations = 0
    saturations = 0
    worst_margin = math.inf
    states = [maximally_mixed(design.dimension)]
    states += [random_density(design.dimension, rng) for _ in range(args.samples)]
    for rho in states:
        report = audit_state(assignment, rho, alphas, s=s)
        if not report.all_satisfied:
            violations += 1
        if report.saturated:
            saturations += 1
        for b in report.per_alpha.values():
            worst_margin = min(worst_margin, b.actual - b.bound_prop2)
    print(f"samples: {args.samples} (+ maximally mixed)  seed: {args.seed}")
    print(f"violations: {violations}")
    print(f"saturation events: {saturations}")
    print(f"worst entropy margin: {_fmt(worst_margin)}")
    return 1 if violations else 0


def cmd_steering(args) -> int:
    rho_ab, dims = _load_bipartite_state(args.state)
    design = _get_design(args.design)
    assignment = _get_assignment(design, args.grouping)
    if dims[1] != design.dimension:
        raise ValueError(f"Bob dimension {dims[1]} does not match design "
                         f"dimension {design.dimension}")
    alice = matched_alice_povms(assignment)
    alpha = _parse_alphas(args.alpha)[0]
    res_r = steering_check_renyi(rho_ab, dims, alice, assignment, alpha)
    res_m = steering_check_maxprob(rho_ab, dims, alice, assignment)
    print(f"renyi (alpha={args.alpha}): lhs={_fmt(res_r.lhs)} "
          f"rhs={_fmt(res_r.rhs)} satisfied={res_r.satisfied}")
    print(f"max-prob: lhs={_fmt(res_m.lhs)} rhs={_fmt(res_m.rhs)} "
          f"satisfied={res_m.satisfied}")
    if not (res_r.satisfied and res_m.satisfied):
        print("steering witnessed (inequality violated)")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="design-uncertainty",
        description="Entropic uncertainty bounds for design-assigned POVMs")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="verify the design property")
    p.add_argument("--design", required=True, help="builtin name or JSON path")
    p.add_argument("--t", type=int, default=None, help="strength to check")
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--method", choices=("frame", "operator"), default="frame")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("sweep", help="tabulate bounds over the beta interval")
    p.add_argument("--design", required=True)
    p.add_argument("--grouping", default="single",
                   help="'single', 'mub', or a JSON partition file")
    p.add_argument("-s", type=int, default=None, help="index order (default t)")
    p.add_argument("--points", type=int, default=200)
    p.add_argument("--alphas", default="", help="finite alphas for prop2 columns")
    p.add_argument("--output", default=None)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(fn=cmd_sweep)

    p = sub.add_parser("audit", help="audit random states against all bounds")
    p.add_argument("--design", required=True)
    p.add_argument("--grouping", default="single")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--alphas", default="inf")
    p.add_argument("-s", type=int, default=None)
    p.set_defaults(fn=cmd_audit)

    p = sub.add_parser("steering", help="evaluate steering inequalities")
    p.add_argument("--state", required=True, help="bipartite state JSON file")
    p.add_argument("--design", required=True)
    p.add_argument("--grouping", default="mub")
    p.add_argument("--alpha", default="inf")
    p.set_defaults(fn=cmd_steering)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (DesignLoadError, AssignmentError, ValueError, OSError,
            KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
