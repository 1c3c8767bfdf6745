"""Command-line front end.

Every subcommand reads matrices from JSON files, prints one JSON document to
stdout and exits with 0 on success, 2 on malformed input and 3 when the
requested object does not exist mathematically (e.g. no positive metric).
"""
import argparse
import json
import math
import sys

import numpy as np

from .errors import (
    DimensionError,
    DomainError,
    ExceptionalPointError,
    InvertibilityError,
    NoPositiveMetricError,
    PreconditionError,
    TrivialityError,
)
from .linalg import Tolerance, eig_hermitian
from .metric import check_quasi_hermiticity, metric_from_weights, solve_metric_space
from .observables import constrain_metric
from .serialize import dumps, load_matrix, load_matrix_list
from .spectral import biorthogonal_system, classify_spectrum
from .symmetry import charge_factorization, charge_nonexistence_scan
from .toy import ToyParameters, toy_energies, toy_hamiltonian, toy_metric, xi_of_metric

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_INFEASIBLE = 3


def _tol(args):
    return Tolerance(abs_eps=args.tol_abs, rel_eps=args.tol_rel)


def _angle(value, args):
    return math.radians(value) if args.degrees else value


def _same_size(*mats):
    shapes = {m.shape for m in mats}
    if len(shapes) != 1:
        raise DimensionError(f"matrix sizes disagree: {sorted(shapes)}")


def cmd_spectrum(args):
    h = load_matrix(args.input)
    return classify_spectrum(h, _tol(args)).to_dict()


def cmd_metrics(args):
    tol = _tol(args)
    h = load_matrix(args.input)
    space = solve_metric_space(h, tol)
    out = space.to_dict()
    if args.weights is not None:
        sys_ = biorthogonal_system(h, tol)
        theta = metric_from_weights(sys_, args.weights, tol, normalize=True)
        w, _ = eig_hermitian(theta, tol)
        out["metric"] = theta
        out["positive"] = bool(w[0] > tol.abs_eps)
        out["min_eigenvalue"] = float(w[0])
    return out


def cmd_charge(args):
    tol = _tol(args)
    h = load_matrix(args.input)
    theta = load_matrix(args.metric)
    parity = load_matrix(args.parity)
    _same_size(h, theta, parity)
    out = charge_factorization(theta, parity, tol).to_dict()
    out["quasi_hermiticity_residual"] = check_quasi_hermiticity(h, theta, tol).residual
    return out


def cmd_fix(args):
    tol = _tol(args)
    h = load_matrix(args.input)
    observables = load_matrix_list(args.observables)
    result = constrain_metric(solve_metric_space(h, tol), observables, tol)
    out = result.to_dict()
    if result.unique_ray and h.shape == (2, 2):
        out["xi"] = xi_of_metric(result.reduced.basis[0])
    return out


def cmd_model2x2(args):
    alpha = _angle(args.alpha, args)
    if args.gamma is not None:
        p = ToyParameters.from_gamma(alpha, _angle(args.gamma, args), d_scale=args.d_scale)
    else:
        p = ToyParameters(alpha=alpha, xi=args.xi, d_scale=args.d_scale)
    out = {"alpha": p.alpha, "xi": p.xi, "d_scale": p.d_scale}
    if args.what == "hamiltonian":
        out["hamiltonian"] = toy_hamiltonian(p)
    elif args.what == "energies":
        out["e_minus"], out["e_plus"] = toy_energies(p)
    elif args.what == "metric":
        theta = toy_metric(p)
        w, _ = eig_hermitian(theta, _tol(args))
        out["metric"] = theta
        out["eigenvalues"] = [float(x) for x in w]
        out["positive"] = p.admissible
    else:
        scan = charge_nonexistence_scan(p.alpha, args.grid, _tol(args))
        out = {"alpha": p.alpha, "grid": args.grid,
               "min_residual": scan.min_residual, "witness_xi": scan.witness_xi}
    return out


def _weights(text):
    try:
        values = [float(x) for x in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid weight list {text!r}") from None
    if not values or not all(np.isfinite(values)) or min(values) <= 0:
        raise argparse.ArgumentTypeError("weights must be finite positive numbers")
    return values


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol-abs", type=float, default=1e-10, help="absolute tolerance")
    common.add_argument("--tol-rel", type=float, default=1e-10, help="relative tolerance")

    parser = argparse.ArgumentParser(prog="qhmetric", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", parents=[common], help="classify the spectrum of H")
    p.add_argument("input", help="Hamiltonian matrix JSON file")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("metrics", parents=[common], help="solution space of Θ H = H† Θ")
    p.add_argument("input", help="Hamiltonian matrix JSON file")
    p.add_argument("--weights", type=_weights, default=None,
                   help="comma-separated positive spectral weights")
    p.set_defaults(func=cmd_metrics)

    p = sub.add_parser("charge", parents=[common], help="factorize Θ = C P")
    p.add_argument("input", help="Hamiltonian matrix JSON file")
    p.add_argument("metric", help="metric matrix JSON file")
    p.add_argument("parity", help="parity matrix JSON file")
    p.set_defaults(func=cmd_charge)

    p = sub.add_parser("fix", parents=[common], help="fix the metric with extra observables")
    p.add_argument("input", help="Hamiltonian matrix JSON file")
    p.add_argument("observables", help="JSON file with a list of matrix objects")
    p.set_defaults(func=cmd_fix)

    p = sub.add_parser("model2x2", parents=[common], help="closed-form 2x2 model")
    p.add_argument("what", choices=["hamiltonian", "metric", "energies", "charge-scan"])
    p.add_argument("--alpha", type=float, required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--xi", type=float, default=0.0)
    group.add_argument("--gamma", type=float, default=None)
    p.add_argument("--d-scale", type=float, default=1.0)
    p.add_argument("--grid", type=int, default=101)
    p.add_argument("--degrees", action="store_true", help="angles are given in degrees")
    p.set_defaults(func=cmd_model2x2)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _tol(args)
        out = args.func(args)
    except (NoPositiveMetricError, ExceptionalPointError) as exc:
        print(f"qhmetric: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (OSError, json.JSONDecodeError, DimensionError, DomainError, PreconditionError,
            InvertibilityError, TrivialityError, ValueError) as exc:
        print(f"qhmetric: {exc}", file=sys.stderr)
        return EXIT_INPUT
    sys.stdout.write(dumps(out) + "\n")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
