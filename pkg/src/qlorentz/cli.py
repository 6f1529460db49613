"""Command-line front end.

Subcommands: verify, normalize, commutator, propagator, scan.  All output
goes to standard output (diagnostics to standard error), reals are printed
with 12 significant digits, and identical invocations produce byte-identical
output.

Exit codes: 0 success, 1 verification failure, 2 input or parse error,
3 numeric non-convergence.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .algebra import commutator, normal_form
from .errors import (
    DomainError,
    ExprError,
    InvalidFrame,
    NonConvergence,
    NonpositiveMass,
    NotSpacelike,
    ParseError,
    SpeedDomain,
    UnderflowToZero,
    UnknownTheorem,
)
from .expr import parse
from .propagator import (
    C_SI,
    classify_interval,
    gamma_bessel,
    gamma_quadrature,
    interval,
    lambda_bar_from_mev,
    scan,
    spacelike_z,
    ThresholdCriterion,
)
from .theorems import STEPS, SUITE, run_all, run_theorem

_INPUT_ERRORS = (
    ParseError,
    ExprError,
    UnknownTheorem,
    DomainError,
    NotSpacelike,
    NonpositiveMass,
    UnderflowToZero,
    SpeedDomain,
    InvalidFrame,
)


def _real(v: float) -> str:
    return f"{v + 0.0:.12g}"  # + 0.0 folds -0.0 into 0.0


def _cplx(v: complex) -> str:
    re, im = v.real + 0.0, v.imag + 0.0
    if im < 0:
        return f"{_real(re)} - {_real(-im)}*i"
    return f"{_real(re)} + {_real(im)}*i"


# ---------------------------------------------------------------------------
# verify


def _record_row(rec) -> str:
    return f"{rec.id:<11} {rec.status:<9} residual = {rec.residual.to_text()}"


def _record_json(rec) -> dict:
    return {
        "id": rec.id,
        "status": rec.status,
        "residual": rec.residual.to_text(),
        "citation": rec.citation,
    }


def _cmd_verify(args) -> int:
    if args.theorem is not None:
        records = []
        if args.show_steps:
            records.extend(run_theorem(s) for s in STEPS.get(args.theorem, ()))
        records.append(run_theorem(args.theorem))
    else:
        records = run_all()

    ok = sum(1 for r in records if r.status == "verified")
    if args.format == "json":
        payload = {
            "command": "verify",
            "inputs": {"theorem": args.theorem, "show_steps": args.show_steps},
            "results": [_record_json(r) for r in records],
            "version": __version__,
            "status": 0 if ok == len(records) else 1,
        }
        print(json.dumps(payload, indent=2))
    else:
        for rec in records:
            print(_record_row(rec))
        print(f"{ok}/{len(records)} verified")
    return 0 if ok == len(records) else 1


# ---------------------------------------------------------------------------
# normalize / commutator


def _cmd_normalize(args) -> int:
    print(normal_form(parse(args.expr)).to_text())
    return 0


def _cmd_commutator(args) -> int:
    print(commutator(parse(args.expr_a), parse(args.expr_b)).to_text())
    return 0


# ---------------------------------------------------------------------------
# propagator


def _resolve_lambda_bar(args) -> float:
    if args.mass is not None and args.lambda_bar is not None:
        raise DomainError("give either --mass or --lambda-bar, not both")
    if args.units == "si":
        if args.mass is not None:
            return lambda_bar_from_mev(args.mass)
        if args.lambda_bar is not None:
            return args.lambda_bar
        raise DomainError("SI units need --mass or --lambda-bar")
    # natural units: t is a length (c*t) in the same units as x and lambda-bar
    if args.mass is not None:
        raise DomainError("--mass implies SI lengths; use --units si")
    return args.lambda_bar if args.lambda_bar is not None else 1.0


def _cmd_propagator(args) -> int:
    lb = _resolve_lambda_bar(args)
    if lb <= 0:
        raise DomainError(f"lambda-bar must be positive, got {lb!r}")
    if args.units == "si":
        tau = C_SI * args.t / lb
    else:
        tau = args.t / lb
    xi = args.x / lb

    z = spacelike_z(tau, xi)
    lines = [
        f"tau = {_real(tau)}",
        f"xi = {_real(xi)}",
        f"z = {_real(z)}",
        f"interval_over_lambdabar2 = {_real(interval(tau, xi))}",
    ]
    gb = gq = None
    if args.method in ("bessel", "both"):
        gb = gamma_bessel(tau, xi)
        lines.append(f"gamma_bessel = {_cplx(gb)}")
    if args.method in ("quadrature", "both"):
        gq = gamma_quadrature(tau, xi)
        lines.append(f"gamma_quadrature = {_cplx(gq)}")
    if args.method == "both":
        lines.append(f"rel_discrepancy = {_real(abs(gq - gb) / abs(gb))}")
    prob = abs(gb if gb is not None else gq) ** 2
    lines.append(f"prob = {_real(prob)}")
    lines.append(
        f"class_eq2 = {classify_interval(tau, xi, ThresholdCriterion.AMPLITUDE_EQ2).value}"
    )
    lines.append(
        f"class_eq13 = {classify_interval(tau, xi, ThresholdCriterion.PROBABILITY_EQ13).value}"
    )
    print("\n".join(lines))
    return 0


# ---------------------------------------------------------------------------
# scan

_CSV_HEADER = "z,interval_over_lambdabar2,gamma_re,gamma_im,prob,class_eq2,class_eq13"


def _point_fields(p) -> tuple:
    return (
        p.z,
        interval(p.tau, p.xi),
        p.gamma.real,
        p.gamma.imag,
        p.prob,
        p.class_eq2.value,
        p.class_eq13.value,
    )


def _cmd_scan(args) -> int:
    points = scan(args.z_min, args.z_max, args.steps)
    if args.format == "json":
        records = []
        for p in points:
            z, iv, gre, gim, prob, c2, c13 = _point_fields(p)
            records.append(
                {
                    "z": float(_real(z)),
                    "interval_over_lambdabar2": float(_real(iv)),
                    "gamma_re": float(_real(gre)),
                    "gamma_im": float(_real(gim)),
                    "prob": float(_real(prob)),
                    "class_eq2": c2,
                    "class_eq13": c13,
                }
            )
        print(json.dumps(records, indent=2))
    else:
        print(_CSV_HEADER)
        for p in points:
            z, iv, gre, gim, prob, c2, c13 = _point_fields(p)
            print(
                f"{_real(z)},{_real(iv)},{_real(gre)},{_real(gim)},"
                f"{_real(prob)},{c2},{c13}"
            )
    return 0


# ---------------------------------------------------------------------------
# dispatch


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="qlorentz",
        description="Operator-identity verification and spacelike amplitude tools.",
    )
    top.add_argument("--version", action="version", version=f"qlorentz {__version__}")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run the operator identity suite")
    p.add_argument("--theorem", help=f"single id from: {', '.join(SUITE)}")
    p.add_argument(
        "--show-steps",
        action="store_true",
        help="print intermediate identities the chosen one builds on",
    )
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("normalize", help="print the canonical form of an expression")
    p.add_argument("expr")
    p.set_defaults(func=_cmd_normalize)

    p = sub.add_parser("commutator", help="print the canonical form of [A, B]")
    p.add_argument("expr_a")
    p.add_argument("expr_b")
    p.set_defaults(func=_cmd_commutator)

    p = sub.add_parser("propagator", help="evaluate the amplitude at one point")
    p.add_argument("--t", type=float, required=True, help="time (c*t length in natural units; seconds in SI)")
    p.add_argument("--x", type=float, required=True, help="position (meters in SI)")
    p.add_argument("--lambda-bar", type=float, default=None, help="reduced Compton wavelength (meters in SI; default 1 in natural units)")
    p.add_argument("--mass", type=float, default=None, help="mass in MeV/c^2 (SI units only)")
    p.add_argument("--method", choices=("bessel", "quadrature", "both"), default="bessel")
    p.add_argument("--units", choices=("natural", "si"), default="natural")
    p.set_defaults(func=_cmd_propagator)

    p = sub.add_parser("scan", help="tabulate the tau = 0 slice over a z grid")
    p.add_argument("--z-min", type=float, required=True)
    p.add_argument("--z-max", type=float, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=_cmd_scan)

    return top


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NonConvergence as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
