"""Command-line interface.

Exit codes: 0 when every checked property holds, 1 when a property is
violated, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction
from pathlib import Path

from . import density as D
from . import render as R
from .coincidence import coincide, make_pair
from .dynamics import DEFAULT_BUDGET, orbit_of_one
from .errors import ParryError
from .exactnum import FieldElement, isolate_roots_above_one, quadratic_family_field
from .harness import (
    SearchConfig,
    emit_figure1,
    family_sweep,
    mc_validate,
    search_coincident_pairs,
)
from .transfer import check_invariance, transfer_operator


class UsageError(Exception):
    pass


def parse_poly(text: str) -> list[int]:
    """'-1,-1,1' (constant term first, leading coefficient 1) -> [-1, -1, 1]."""
    try:
        coeffs = [int(c) for c in text.replace(" ", "").split(",") if c != ""]
    except ValueError as exc:
        raise UsageError(f"bad polynomial {text!r}: {exc}") from None
    if len(coeffs) < 2 or coeffs[-1] != 1:
        raise UsageError(f"polynomial {text!r} must have degree >= 1 and leading coefficient 1")
    return coeffs


def parse_pq(text: str) -> tuple[int, int]:
    try:
        p, q = (int(v) for v in text.split(","))
    except ValueError:
        raise UsageError(f"--pq expects P,Q, got {text!r}") from None
    return p, q


def _beta_from_poly(text: str, index: int) -> FieldElement:
    fields = isolate_roots_above_one(parse_poly(text))
    try:
        return fields[index].gen
    except IndexError:
        raise UsageError(f"root index {index} out of range ({len(fields)} roots above 1)") from None


def _beta_from_args(args) -> FieldElement:
    if args.pq is not None and args.poly is not None:
        raise UsageError("give either --pq or --poly, not both")
    if args.pq is not None:
        beta = quadratic_family_field(*parse_pq(args.pq)).gen
    elif args.poly is not None:
        beta = _beta_from_poly(args.poly, args.root_index)
    else:
        raise UsageError("one of --pq or --poly is required")
    if getattr(args, "plus_one", False):
        beta = beta + 1
    return beta


def _add_beta_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--pq", help="quadratic family base: root > 1 of x^2 - Qx - P")
    p.add_argument("--poly", help="monic integer polynomial, constant term first, e.g. --poly=-1,-1,1")
    p.add_argument("--root-index", type=int, default=-1,
                   help="which root above 1 to use, in increasing order (default: largest)")
    p.add_argument("--plus-one", action="store_true", help="use beta + 1 instead of beta")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="orbit iteration budget")


def _emit(args, payload) -> None:
    text = payload if isinstance(payload, str) else json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_orbit(args) -> int:
    beta = _beta_from_args(args)
    _emit(args, R.orbit_json(orbit_of_one(beta, args.budget), args.digits))
    return 0


def cmd_density(args) -> int:
    beta = _beta_from_args(args)
    h = D.build_density(orbit_of_one(beta, args.budget))
    if args.normalized:
        h = D.normalize(h)
    if args.format == "csv":
        _emit(args, R.step_csv(h, args.digits))
    elif args.format == "svg":
        _emit(args, R.step_svg(h, title="normalised density" if args.normalized else "density"))
    else:
        out = R.step_json(h, args.digits)
        out["normalized"] = args.normalized
        out["integral"] = R.element_json(D.integral(h), args.digits)
        _emit(args, out)
    return 0


def cmd_invariance(args) -> int:
    beta = _beta_from_args(args)
    h = D.build_density(orbit_of_one(beta, args.budget))
    if args.normalized:
        h = D.normalize(h)
    lh = transfer_operator(beta, h)
    ok = check_invariance(beta, h)
    _emit(args, {
        "beta": R.element_json(beta, args.digits),
        "fixed_point": ok,
        "lhs_breakpoints": [R.element_json(c, args.digits) for c in lh.cuts],
        "rhs_breakpoints": [R.element_json(c, args.digits) for c in h.cuts],
        "lhs_values": [R.element_json(v, args.digits) for v in lh.values],
        "rhs_values": [R.element_json(v, args.digits) for v in h.values],
    })
    return 0 if ok else 1


def cmd_coincide(args) -> int:
    if args.pq is not None:
        if args.poly1 or args.poly2:
            raise UsageError("give either --pq or --poly1/--poly2")
        b1, b2 = make_pair(*parse_pq(args.pq))
    elif args.poly1 and args.poly2:
        b1 = _beta_from_poly(args.poly1, args.root_index1)
        b2 = _beta_from_poly(args.poly2, args.root_index2)
    else:
        raise UsageError("need --pq or both --poly1 and --poly2")
    rep = coincide(b1, b2, args.budget)
    out = R.report_json(rep, args.digits)
    _emit(args, out)
    if rep.coincide is None:
        return 0
    violated = rep.coincide != rep.theorem_verdict
    if rep.coincide:
        violated |= not (rep.K_equal and rep.orbit_sets_equal_mod_zero
                         and rep.coefficient_sets is not None and rep.coefficient_sets.union_equal
                         and rep.zero_value_condition_holds)
    return 1 if violated else 0


def _config(args) -> SearchConfig:
    data = {}
    if args.config:
        data = json.loads(Path(args.config).read_text())
    for name, attr in (("max_degree", "degree"), ("coeff_bound", "coeff_bound"), ("root_max", "root_max"),
                       ("orbit_budget", "budget"), ("family_bound", "family_bound"),
                       ("mc_samples", "samples"), ("mc_bins", "bins"), ("seed", "seed")):
        v = getattr(args, attr, None)
        if v is not None:
            data[name] = v
    return SearchConfig.from_mapping(data)


def cmd_sweep(args) -> int:
    rep = family_sweep(args.bound, args.budget)
    _emit(args, rep)
    return 0 if rep["pass"] else 1


def cmd_search(args) -> int:
    cfg = _config(args)
    rep = search_coincident_pairs(cfg)
    _emit(args, rep)
    return 0 if rep["pass"] else 1


def cmd_figure1(args) -> int:
    _emit(args, emit_figure1(args.format))
    return 0


def cmd_mc(args) -> int:
    cfg = _config(args)
    beta = _beta_from_args(args)
    rep = mc_validate(beta, cfg.mc_samples, cfg.mc_bins, cfg.seed, args.budget)
    _emit(args, rep)
    return 0 if rep["pass"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="parry", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write the report to FILE instead of stdout")
    common.add_argument("--digits", type=int, default=15, help="decimal places in renderings")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("orbit", parents=[common], help="orbit of 1 under the beta-transformation")
    _add_beta_args(p)
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("density", parents=[common], help="Parry density as a step function")
    _add_beta_args(p)
    p.add_argument("--normalized", action="store_true")
    p.add_argument("--format", choices=["json", "csv", "svg"], default="json")
    p.set_defaults(func=cmd_density)

    p = sub.add_parser("invariance", parents=[common], help="check L h = h exactly")
    _add_beta_args(p)
    p.add_argument("--normalized", action="store_true")
    p.set_defaults(func=cmd_invariance)

    p = sub.add_parser("coincide", parents=[common], help="compare the measures of two bases")
    p.add_argument("--pq", help="pair the family base for P,Q with itself plus one")
    p.add_argument("--poly1")
    p.add_argument("--poly2")
    p.add_argument("--root-index1", type=int, default=-1)
    p.add_argument("--root-index2", type=int, default=-1)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_coincide)

    p = sub.add_parser("sweep", parents=[common], help="check every family pair with q <= N")
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("search", parents=[common], help="exhaustive coincidence search over a catalogue")
    p.add_argument("--config", help="JSON file with SearchConfig fields")
    p.add_argument("--degree", type=int)
    p.add_argument("--coeff-bound", type=int)
    p.add_argument("--root-max", type=Fraction)
    p.add_argument("--budget", type=int)
    p.add_argument("--family-bound", type=int)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("figure1", parents=[common], help="T_beta and its density for the golden ratio")
    p.add_argument("--format", choices=["csv", "svg", "json"], default="csv")
    p.set_defaults(func=cmd_figure1)

    p = sub.add_parser("mc-validate", parents=[common], help="Monte Carlo check of the exact density")
    _add_beta_args(p)
    p.add_argument("--config", help="JSON file with SearchConfig fields")
    p.add_argument("--samples", type=int)
    p.add_argument("--bins", type=int)
    p.add_argument("--seed", type=int)
    p.set_defaults(func=cmd_mc)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (UsageError, ValueError, ParryError) as exc:
        print(f"parry {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
