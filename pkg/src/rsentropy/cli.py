"""Command-line entry point.

Exit status: 0 on success, 1 when a ``check`` suite fails, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from . import classical as cl
from . import io, linalg
from . import quantum as qu
from .channels import apply_channel, validate_channel
from .errors import RSEntropyError
from .params import EntropyParams
from .properties.suites import SUITES, run_suite


def _fmt(x) -> str:
    if x is None:
        return "null"
    x = float(x)
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return f"{x:.12g}"


def _emit(args, payload: dict, human: str):
    if args.output == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(human)


def _params(args) -> EntropyParams:
    return EntropyParams(args.r, args.s)


def cmd_entropy(args):
    a = cl.validate_dist(io.load_dist(args.a), allow_zero=True, tol=args.tol)
    p = _params(args)
    value = cl.unified_entropy(a, p)
    _emit(args, {"value": io.encode_number(value), "branch": p.branch.value}, _fmt(value))


def cmd_rel_entropy(args):
    a = cl.validate_dist(io.load_dist(args.a), tol=args.tol)
    b = cl.validate_dist(io.load_dist(args.b), tol=args.tol)
    p = _params(args)
    value = cl.unified_rel_entropy(a, b, p)
    x = None if p.branch.value == "R1" else cl.relative_power_sum(a, b, p.r)
    payload = {"value": io.encode_number(value), "branch": p.branch.value, "overlap": io.encode_number(x)}
    _emit(args, payload, _fmt(value))


def _state(path, tol):
    return qu.validate_state(io.load_matrix(path), tol=tol)


def cmd_qentropy(args):
    rho = _state(args.rho, args.tol)
    p = _params(args)
    value = qu.quantum_unified_entropy(rho, p)
    payload = {"value": io.encode_number(value), "branch": p.branch.value}
    human = _fmt(value)
    if args.eigenvalues:
        payload["eigenvalues"] = [float(w) for w in rho.eigenvalues]
        human += "\neigenvalues: " + " ".join(_fmt(w) for w in rho.eigenvalues)
    _emit(args, payload, human)


def cmd_qrel_entropy(args):
    rho, sigma = _state(args.rho, args.tol), _state(args.sigma, args.tol)
    res = qu.quantum_unified_rel_entropy(rho, sigma, _params(args))
    payload = {
        "value": io.encode_number(res.value),
        "branch": res.branch.value,
        "overlap": io.encode_number(res.overlap),
    }
    _emit(args, payload, _fmt(res.value))


def _matrix_text(m: np.ndarray) -> str:
    rows = []
    for row in m:
        rows.append("  ".join(f"{_fmt(z.real)}{'+' if z.imag >= 0 else '-'}{_fmt(abs(z.imag))}j" for z in row))
    return "\n".join(rows)


def cmd_channel_apply(args):
    phi = validate_channel(io.load_channel_ops(args.channel))
    out = apply_channel(phi, _state(args.rho, args.tol))
    _emit(args, io.matrix_to_json(out.matrix), _matrix_text(out.matrix))


def cmd_partial_trace(args):
    m = linalg.hermitian(io.load_matrix(args.rho))
    d1, d2 = args.dims
    out = linalg.partial_trace(m, d1, d2, keep=args.keep)
    _emit(args, io.matrix_to_json(out), _matrix_text(out))


def cmd_check(args):
    names = list(SUITES) if "all" in args.suite else args.suite
    for name in names:
        if name not in SUITES:
            raise RSEntropyError(f"unknown suite {name!r}; known: all, {', '.join(SUITES)}")
    reports = [run_suite(n, trials=args.trials, seed=args.seed, tol=args.tol) for n in names]
    if args.output == "json":
        print(json.dumps([rep.to_json() for rep in reports], sort_keys=True))
    else:
        for rep in reports:
            status = "PASS" if rep.passed else "FAIL"
            print(
                f"{status} {rep.suite_name}: trials={rep.trials} checks={rep.checks} "
                f"max_violation={_fmt(rep.max_violation)} failures={rep.failure_count}"
            )
    return 0 if all(rep.passed for rep in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rsentropy", description="Unified (r,s)-entropies of distributions and quantum states."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, rs=True, tol=1e-8):
        if rs:
            p.add_argument("--r", type=float, required=True, help="order r")
            p.add_argument("--s", type=float, required=True, help="degree s")
        p.add_argument("--tol", type=float, default=tol, help="validation tolerance")
        p.add_argument("--output", choices=("human", "json"), default="human")

    p = sub.add_parser("entropy", help="unified (r,s)-entropy of a distribution")
    p.add_argument("--a", required=True, help="JSON array of probabilities")
    common(p)
    p.set_defaults(func=cmd_entropy)

    p = sub.add_parser("rel-entropy", help="unified (r,s)-relative entropy E(A||B)")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    common(p)
    p.set_defaults(func=cmd_rel_entropy)

    p = sub.add_parser("qentropy", help="quantum unified (r,s)-entropy of a state")
    p.add_argument("--rho", required=True, help="JSON matrix file")
    p.add_argument("--eigenvalues", action="store_true", help="also report the spectrum")
    common(p)
    p.set_defaults(func=cmd_qentropy)

    p = sub.add_parser("qrel-entropy", help="quantum unified (r,s)-relative entropy E(rho||sigma)")
    p.add_argument("--rho", required=True)
    p.add_argument("--sigma", required=True)
    common(p)
    p.set_defaults(func=cmd_qrel_entropy)

    p = sub.add_parser("channel-apply", help="apply a Kraus channel to a state")
    p.add_argument("--channel", required=True, help="JSON channel file")
    p.add_argument("--rho", required=True)
    common(p, rs=False)
    p.set_defaults(func=cmd_channel_apply)

    p = sub.add_parser("partial-trace", help="partial trace of a bipartite operator")
    p.add_argument("--rho", required=True)
    p.add_argument("--dims", type=int, nargs=2, required=True, metavar=("D1", "D2"))
    p.add_argument("--keep", type=int, choices=(1, 2), default=1)
    common(p, rs=False)
    p.set_defaults(func=cmd_partial_trace)

    p = sub.add_parser("check", help="run randomised property suites")
    p.add_argument("--suite", action="append", default=None, help="suite name or 'all' (repeatable)")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=None, help="override every suite's tolerance")
    p.add_argument("--output", choices=("human", "json"), default="json")
    p.set_defaults(func=cmd_check)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "check" and not args.suite:
        args.suite = ["all"]
    try:
        code = args.func(args)
    except (RSEntropyError, OSError, ValueError) as exc:
        print(f"rsentropy {args.command}: error: {exc}", file=sys.stderr)
        return 2
    return 0 if code is None else code


if __name__ == "__main__":
    sys.exit(main())
