"""Command line front end.

Exit codes: 0 success / verdict true, 1 I/O or malformed input, 2 failed
precondition, 3 numerical failure, 4 verdict false.
"""
import argparse
import json
import sys

import numpy as np

from . import io
from .analyze import (COMMUTE_RTOL, _pairwise, adjoint_is_m_isometric,
                      coefficients_commute, commutativity_equivalence_check, weights_commute)
from .completion import complete_weights
from .construct import BILATERAL_HORIZON, UNILATERAL_HORIZON, construct_bilateral, construct_unilateral
from .errors import InputError, NumericalError, PreconditionFailed, Singular
from .oppoly import fit_from_values, interpolated_inverse, inverse_residual, invert_in_degree
from .shiftcore import ISO_RTOL, gram, verify_m_isometry

EXIT_OK, EXIT_IO, EXIT_PRECONDITION, EXIT_NUMERICAL, EXIT_FALSE = 0, 1, 2, 3, 4


def _emit(args, payload, text):
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(io.dumps(payload))
    if args.format == "json":
        sys.stdout.write(io.dumps(payload))
    else:
        sys.stdout.write(text.rstrip() + "\n")


def _load_weights(doc):
    try:
        return io.weights_from_json(doc)
    except Singular as exc:
        raise PreconditionFailed("invertibility", str(exc)) from exc


def cmd_construct(args):
    p = io.polynomial_from_json(io.load(args.input))
    m = args.m if args.m is not None else p.degree() + 1
    rtol = ISO_RTOL * args.tol_scale
    if args.bilateral:
        res = construct_bilateral(p, m, args.horizon or BILATERAL_HORIZON,
                                  args.allow_divergence, rtol)
    else:
        res = construct_unilateral(p, m, args.horizon or UNILATERAL_HORIZON,
                                   args.allow_divergence, rtol)
    text = (f"constructed {res.weights!r}\n"
            f"preconditions: {res.preconditions.status}, capacity estimate "
            f"{res.capacity_estimate:.10g}\n{res.report.summary()}")
    _emit(args, io.construction_to_json(res), text)
    return EXIT_OK if res.report.verdict else EXIT_FALSE


def cmd_verify(args):
    w = _load_weights(io.load(args.input))
    if args.m is None:
        raise InputError("--m is required for verify")
    rep = verify_m_isometry(w, args.m, rtol=ISO_RTOL * args.tol_scale)
    _emit(args, io.isometry_report_to_json(rep), rep.summary())
    return EXIT_OK if rep.verdict else EXIT_FALSE


def cmd_complete(args):
    A = io.prefix_from_json(io.load(args.input))
    res = complete_weights(A, args.horizon or 32, rtol=ISO_RTOL * args.tol_scale)
    text = (f"completed {len(A)} prescribed weights to {res.weights!r}\n"
            f"alpha = {res.alpha:.10g} (bound {res.sup_bound:.10g})\n{res.report.summary()}")
    _emit(args, io.completion_to_json(res), text)
    return EXIT_OK if res.report.verdict else EXIT_FALSE


def _commutativity_json(c):
    return {"commute": c.commute, "max_commutator": c.max_commutator}


def cmd_analyze(args):
    doc = io.load(args.input)
    tol = COMMUTE_RTOL * args.tol_scale
    if "coeffs" in doc:
        p = io.polynomial_from_json(doc)
        m = args.m if args.m is not None else p.degree() + 1
        rep = commutativity_equivalence_check(p, m, args.horizon, args.bilateral, tol)
        triple = (rep.all_weights, rep.first_weights, rep.coefficients)
        status = rep.status
    else:
        w = _load_weights(doc)
        if args.m is None:
            raise InputError("--m is required when analysing weights")
        m = args.m
        p = fit_from_values([gram(w, 0, k) for k in range(m)])
        first = [w[j] for j in range(1, min(m - 1, w.last_index) + 1)]
        triple = (weights_commute(w, tol), _pairwise(first, tol), coefficients_commute(p, tol))
        status = "agree" if len({c.commute for c in triple}) == 1 else "disagree"
    adj = adjoint_is_m_isometric(p, m)
    payload = {
        "m": m,
        "commutativity": {
            "all_weights": _commutativity_json(triple[0]),
            "first_weights": _commutativity_json(triple[1]),
            "coefficients": _commutativity_json(triple[2]),
            "status": status,
        },
        "adjoint_m_isometric": adj.adjoint_m_isometric,
        "inverse_polynomial": io.polynomial_to_json(adj.inverse) if adj.inverse else None,
        "adjoint_polynomial": (io.polynomial_to_json(adj.adjoint_polynomial)
                               if adj.adjoint_polynomial else None),
    }
    verdicts = ", ".join(f"{name}={c.commute}" for name, c in
                         zip(("all weights", "first m-1 weights", "coefficients"), triple))
    text = (f"commutativity: {verdicts} -> {status}\n"
            f"adjoint m-isometric: {adj.adjoint_m_isometric}")
    _emit(args, payload, text)
    return EXIT_FALSE if status == "disagree" else EXIT_OK


def cmd_invert(args):
    p = io.polynomial_from_json(io.load(args.input))
    bound = args.m - 1 if args.m is not None else p.degree_bound
    q = invert_in_degree(p, bound)
    if q is not None:
        reason = "two-sided inverse found"
        residual = inverse_residual(p, q)
    else:
        try:
            cand = interpolated_inverse(p, bound)
            residual = inverse_residual(p, cand)
            reason = (f"degree {p.degree()} exceeds bound {bound}" if p.degree() > bound
                      else f"interpolated inverse fails the identity (residual {residual:.3e})")
        except Singular as exc:
            residual = float("inf")
            reason = str(exc)
    payload = {"degree_bound": bound, "invertible": q is not None, "reason": reason,
               "residual": residual if np.isfinite(residual) else None,
               "inverse": io.polynomial_to_json(q) if q is not None else None}
    _emit(args, payload, f"invertible in degree <= {bound}: {q is not None} ({reason})")
    return EXIT_OK if q is not None else EXIT_FALSE


COMMANDS = {
    "construct": cmd_construct,
    "verify": cmd_verify,
    "complete": cmd_complete,
    "analyze": cmd_analyze,
    "invert-poly": cmd_invert,
}


def build_parser():
    parser = argparse.ArgumentParser(prog="misoshift", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("--input", required=True, help="input JSON document")
        sp.add_argument("--output", help="write the JSON report here")
        sp.add_argument("--m", type=int, help="order of the isometry")
        sp.add_argument("--horizon", type=int, help="number of weights per side")
        sp.add_argument("--bilateral", action="store_true")
        sp.add_argument("--tol-scale", type=float, default=1.0,
                        help="multiplier applied to the default tolerances")
        sp.add_argument("--format", choices=("json", "text"), default="text")
        sp.add_argument("--allow-divergence", action="store_true",
                        help="construct even when the ratio sequence looks unbounded")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    if args.tol_scale <= 0:
        print("error: --tol-scale must be positive", file=sys.stderr)
        return EXIT_IO
    if args.horizon is not None and args.m is not None and args.horizon < args.m + 1:
        print("error: --horizon must be at least m + 1", file=sys.stderr)
        return EXIT_PRECONDITION
    try:
        return COMMANDS[args.command](args)
    except PreconditionFailed as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except InputError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except NumericalError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except (OSError, json.JSONDecodeError, KeyError, ValueError, TypeError) as exc:
        print(f"cannot read input: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
