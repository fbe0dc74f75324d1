"""Batch command-line front door: eval, verify, furstenberg.

Errors are mapped to exit codes (2 domain, 3 precision) with a one-line
JSON diagnostic on stderr; all randomness flows from --seed, so identical
invocations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .core import (
    JacobiParams,
    c_function,
    heckman_opdam_g,
    phi,
    phi_second_kind,
    weight_delta,
)
from .errors import DomainError, FourierJacobiError, PrecisionError
from .grid import EvenMeasure, GridFunction, gaussian_bump
from .furstenberg import iterate_and_report
from .resolvent import b_lambda
from .suites import RunConfig, run_suite

EXIT_OK = 0
EXIT_DOMAIN = 2
EXIT_PRECISION = 3


def _parse_lambda(text):
    parts = text.split(",")
    if len(parts) == 1:
        return complex(float(parts[0]), 0.0)
    if len(parts) == 2:
        return complex(float(parts[0]), float(parts[1]))
    raise DomainError(f"--lambda expects re or re,im, got {text!r}")


def _parse_t_list(text):
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise DomainError(f"--t expects a comma-separated list, got {text!r}") from None


def _add_common(parser):
    parser.add_argument("--alpha", type=float, default=0.5)
    parser.add_argument("--beta", type=float, default=-0.5)
    parser.add_argument("--tmax", type=float, default=8.0)
    parser.add_argument("--n", type=int, default=1025)
    parser.add_argument("--tol", type=float, default=1e-10)
    parser.add_argument("--quad", choices=("simpson", "gauss"), default="gauss")
    parser.add_argument("--lambda", dest="lam", type=str, default="2")
    parser.add_argument("--t", type=str, default="1")
    parser.add_argument("--out", choices=("csv", "json"), default="csv")
    parser.add_argument("--seed", type=int, default=0)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="fourierjacobi",
        description="Fourier-Jacobi harmonic analysis: evaluate, verify, iterate.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate a kernel/function on a t-list")
    p_eval.add_argument(
        "kind", choices=("phi", "Phi", "G", "c", "delta-weight", "b")
    )
    _add_common(p_eval)

    p_verify = sub.add_parser("verify", help="run a named verification suite")
    p_verify.add_argument(
        "suite",
        choices=(
            "lemma31",
            "wronskian",
            "product-formula",
            "strict-bound",
            "derivative-positivity",
            "tlambda",
            "resolvent-glue",
            "riemann-lebesgue",
        ),
    )
    _add_common(p_verify)

    p_furst = sub.add_parser(
        "furstenberg", help="iterate f -> f * mu and report flatness"
    )
    _add_common(p_furst)
    p_furst.add_argument("--measure", required=True, help="EvenMeasure JSON file")
    p_furst.add_argument("--steps", type=int, default=5)
    p_furst.add_argument("--f", default=None, help="initial GridFunction CSV")
    p_furst.add_argument(
        "--probes", type=str, default="2", help="comma-separated real lambdas"
    )
    return parser


def _eval_rows(args):
    params = JacobiParams(args.alpha, args.beta)
    lam = _parse_lambda(args.lam)
    ts = _parse_t_list(args.t)
    if args.kind == "c":
        v = c_function(params, lam)
        return ["re", "im"], [[v.real, v.imag]]
    rows = []

    def _chop(v):
        # values that are real up to roundoff print as exactly real
        if abs(v.imag) < 1e-9 * max(1.0, abs(v.real)):
            return complex(v.real, 0.0)
        return v

    for t in ts:
        if args.kind == "phi":
            v = complex(phi(params, lam, t, args.tol))
        elif args.kind == "Phi":
            v = complex(phi_second_kind(params, lam, t, args.tol))
        elif args.kind == "G":
            v = complex(heckman_opdam_g(params, lam, t, args.tol))
        elif args.kind == "delta-weight":
            v = complex(weight_delta(params, t))
        else:  # b
            v = complex(b_lambda(params, lam, t, args.tol))
        v = _chop(v)
        rows.append([t, v.real, v.imag])
    return ["t", "re", "im"], rows


def _emit_table(header, rows, out):
    if out == "json":
        print(json.dumps([dict(zip(header, r)) for r in rows], sort_keys=True))
    else:
        print(",".join(header))
        for r in rows:
            print(",".join(f"{x:.9g}" for x in r))


def _config_from(args):
    return RunConfig(
        alpha=args.alpha,
        beta=args.beta,
        tmax=args.tmax,
        n=args.n,
        tol=args.tol,
        quad=args.quad,
        out=args.out,
        seed=args.seed,
    )


def _cmd_eval(args):
    header, rows = _eval_rows(args)
    _emit_table(header, rows, args.out)
    return EXIT_OK


def _cmd_verify(args):
    report = run_suite(args.suite, _config_from(args))
    print(json.dumps(report, sort_keys=True))
    return EXIT_OK if report["pass"] else 1


def _cmd_furstenberg(args):
    params = JacobiParams(args.alpha, args.beta)
    mu = EvenMeasure.from_json(args.measure)
    if args.f is not None:
        f = GridFunction.from_csv(args.f)
    else:
        f = gaussian_bump(args.tmax, args.n, width=1.0, center=1.0)
    probes = _parse_t_list(args.probes)
    report = iterate_and_report(
        params, f, mu, args.steps, probes, _config_from(args).quad_spec()
    )
    print(report.to_json())
    return EXIT_OK


def main(argv=None):
    args = build_parser().parse_args(argv)
    np.random.seed(args.seed % 2**32)  # legacy consumers; suites use default_rng
    handlers = {
        "eval": _cmd_eval,
        "verify": _cmd_verify,
        "furstenberg": _cmd_furstenberg,
    }
    try:
        return handlers[args.command](args)
    except PrecisionError as exc:
        _emit_error(EXIT_PRECISION, exc, args)
        return EXIT_PRECISION
    except DomainError as exc:
        _emit_error(EXIT_DOMAIN, exc, args)
        return EXIT_DOMAIN
    except FourierJacobiError as exc:
        _emit_error(EXIT_DOMAIN, exc, args)
        return EXIT_DOMAIN


def _emit_error(code, exc, args):
    print(
        json.dumps(
            {
                "code": code,
                "message": str(exc),
                "context": {"command": args.command},
            },
            sort_keys=True,
        ),
        file=sys.stderr,
    )


if __name__ == "__main__":
    sys.exit(main())
