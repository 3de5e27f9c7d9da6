"""Command-line interface.

Subcommands:

* ``eval {zeta,P,gamma-log}``  single evaluations (JSON by default)
* ``check {combinatorics,qpoly,quadrature,evaluators,all}``  invariant suites
* ``asym``  asymptotic-expansion experiment over a w grid (CSV by default)

Exit codes: 0 success, 1 check/experiment failure, 2 argument parse error,
3 domain error, 4 precision unreachable, 5 unstable fit.  Error paths emit a
single JSON object on stderr: {"code": ..., "message": ..., "parameter": ...}.
Output is deterministic for a fixed configuration and seed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from mpmath import mp, mpf

from . import asymptotics, checks, evaluators
from .errors import (
    ConvergenceTooSlow,
    DomainError,
    FitUnstable,
    InvalidParameter,
    NodeBudgetExceeded,
    PolesTooClose,
    PrecisionUnreachable,
    TooCloseToInteger,
)
from .hankel import HankelSpec, auto_spec
from .multibernoulli import OmegaVector
from .precision import DEFAULT_BITS, PrecisionPolicy

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_PARSE = 2
EXIT_DOMAIN = 3
EXIT_PRECISION = 4
EXIT_FIT = 5

_DOMAIN_ERRORS = (InvalidParameter, DomainError, TooCloseToInteger)
_PRECISION_ERRORS = (
    PrecisionUnreachable,
    NodeBudgetExceeded,
    PolesTooClose,
    ConvergenceTooSlow,
)


def _emit_error(code: int, message: str, parameter: str | None = None) -> int:
    record = {"code": code, "message": message}
    if parameter is not None:
        record["parameter"] = parameter
    print(json.dumps(record), file=sys.stderr)
    return code


class _Parser(argparse.ArgumentParser):
    """ArgumentParser whose failures are machine-readable on stderr."""

    def error(self, message):
        _emit_error(EXIT_PARSE, message)
        raise SystemExit(EXIT_PARSE)


def parse_complex(text: str):
    """Parse '1.5', '-2', '1+2j', '0.5-0.25j', '2j' into an mpc."""
    s = text.strip().replace(" ", "")
    if not s:
        raise ValueError("empty number")
    if s[-1] in "jJ":
        body = s[:-1]
        # split at the last sign that is not leading and not an exponent sign
        split = -1
        for i in range(len(body) - 1, 0, -1):
            if body[i] in "+-" and body[i - 1] not in "eE":
                split = i
                break
        if split == -1:
            re_part, im_part = "0", body or "1"
        else:
            re_part, im_part = body[:split], body[split:]
        if im_part in ("+", "-"):
            im_part += "1"
        return mp.mpc(mpf(re_part), mpf(im_part))
    return mp.mpc(mpf(s))


def parse_real_tuple(text: str):
    parts = [t for t in text.split(",") if t.strip()]
    return tuple(mpf(t.strip()) for t in parts)


def _digits(bits: int) -> int:
    return int(bits * 0.30103) + 1


def _fmt(x, digits: int) -> str:
    return mp.nstr(mpf(x), digits, strip_zeros=False)


def _fmt_complex(z, digits: int):
    z = mp.mpc(z)
    return {"re": _fmt(mp.re(z), digits), "im": _fmt(mp.im(z), digits)}


def _add_common(parser, suppress: bool):
    # registered on the top level with real defaults, and on each subcommand
    # with SUPPRESS so the flags are accepted in either position
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument(
        "--precision-bits",
        type=int,
        default=d(None),
        help="working precision in bits (default: HYPERZETA_PRECISION_BITS or 192)",
    )
    parser.add_argument(
        "--tol", type=float, default=d(1e-22), help="target absolute error"
    )
    parser.add_argument(
        "--lambda",
        dest="lam",
        type=float,
        default=d(None),
        help="Hankel circle radius override (must satisfy the pole bound)",
    )
    parser.add_argument(
        "--format", choices=("json", "csv", "plain"), default=d(None),
        help="output format (default: json for eval/check, csv for asym)",
    )
    parser.add_argument(
        "--seed", type=int, default=d(0), help="seed for randomized checks"
    )


def build_parser() -> _Parser:
    parser = _Parser(prog="hyperzeta", description=__doc__.splitlines()[0])
    _add_common(parser, suppress=False)

    sub = parser.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("eval", help="evaluate a single function value")
    _add_common(ev, suppress=True)
    ev.add_argument("target", choices=("zeta", "P", "gamma-log"))
    ev.add_argument("--s", type=str, default=None, help="zeta argument (complex)")
    ev.add_argument("--w", type=str, required=True, help="base point (complex, Re > 0)")
    ev.add_argument("--m", type=int, default=1, help="derivative order m")
    ev.add_argument("--k", type=int, default=0, help="integer shift k")
    ev.add_argument(
        "--omega", type=str, default="1", help="comma-separated periods, e.g. 1,0.7"
    )
    ev.add_argument(
        "--method",
        choices=("contour", "direct", "combination"),
        default="contour",
        help="evaluation route (zeta: contour/direct; P: contour/combination)",
    )

    ck = sub.add_parser("check", help="run an invariant suite")
    _add_common(ck, suppress=True)
    ck.add_argument("suite", choices=checks.SUITES + ("all",))

    asy = sub.add_parser("asym", help="asymptotic-expansion experiment")
    _add_common(asy, suppress=True)
    asy.add_argument("--m", type=int, default=1)
    asy.add_argument("--k", type=int, default=0)
    asy.add_argument("--omega", type=str, default="1")
    asy.add_argument("--alpha", type=str, default="1")
    asy.add_argument("--a", type=str, default="0.5", help="absorbed shift (complex)")
    asy.add_argument(
        "--w-grid",
        type=str,
        default=",".join(str(w) for w in asymptotics.DEFAULT_W_GRID),
        help="comma-separated increasing grid",
    )
    asy.add_argument(
        "--fit",
        action="store_true",
        help="append the fitted 1/w coefficient and its predicted value (m = 1)",
    )
    asy.add_argument(
        "--strict-statement",
        action="store_true",
        help="evaluate the left side at w instead of w + a",
    )
    return parser


def _resolve_policy(args) -> PrecisionPolicy:
    bits = args.precision_bits
    if bits is None:
        env = os.environ.get("HYPERZETA_PRECISION_BITS")
        bits = int(env) if env else DEFAULT_BITS
    if bits < 64:
        raise InvalidParameter("precision-bits must be at least 64")
    if args.tol <= 0:
        raise InvalidParameter("tol must be positive")
    return PrecisionPolicy(
        precision_bits=bits, target_abs_error=args.tol, target_rel_error=args.tol
    )


def _resolve_hspec(args, omega: OmegaVector, w, p: PrecisionPolicy):
    if args.lam is None:
        return None
    base = auto_spec(omega, w, p)
    lam = mpf(args.lam)
    spec = HankelSpec(
        lam=lam,
        ray_truncation=max(mpf(base.ray_truncation), 2 * lam),
        ray_nodes=base.ray_nodes,
        circle_nodes=base.circle_nodes,
        target_abs_error=base.target_abs_error,
    )
    spec.validate(omega)
    return spec


def _run_eval(args, p: PrecisionPolicy) -> int:
    fmt = args.format or "json"
    omega = OmegaVector.of(*parse_real_tuple(args.omega))
    w = parse_complex(args.w)
    with p.context():
        hspec = _resolve_hspec(args, omega, w, p)
        if args.target == "zeta":
            if args.s is None:
                raise InvalidParameter("eval zeta requires --s")
            s = parse_complex(args.s)
            if args.method == "direct":
                res = evaluators.zeta_direct(s, w, omega, args.tol, p)
            else:
                res = evaluators.zeta_contour(s, w, omega, p, hspec)
        elif args.target == "gamma-log":
            res = evaluators.log_hyper_gamma(args.m, args.k, w, omega, p, hspec)
        else:
            method = (
                evaluators.METHOD_COMBINATION
                if args.method == "combination"
                else evaluators.METHOD_CONTOUR
            )
            res = evaluators.balanced_P(args.m, args.k, w, omega, p, method, hspec)
        digits = _digits(p.precision_bits)
        record = {
            "target": args.target,
            "value": _fmt_complex(res.value, digits),
            "err_estimate": _fmt(res.err_estimate, 3),
            "method": res.method,
            "precision_bits": p.precision_bits,
        }
    if fmt == "json":
        print(json.dumps(record))
    elif fmt == "csv":
        print("value_re,value_im,err_estimate,method")
        print(
            f"{record['value']['re']},{record['value']['im']},"
            f"{record['err_estimate']},{record['method']}"
        )
    else:
        print(f"{args.target} = {record['value']['re']} + {record['value']['im']}j")
        print(f"err_estimate <= {record['err_estimate']}  ({record['method']})")
    return EXIT_OK


def _run_check(args, p: PrecisionPolicy) -> int:
    fmt = args.format or "json"
    results = checks.run_suite(args.suite, p, args.seed)
    failed = [r for r in results if not r.passed]
    if fmt == "json":
        print(
            json.dumps(
                [
                    {
                        "suite": r.suite,
                        "name": r.name,
                        "passed": r.passed,
                        "detail": r.detail,
                    }
                    for r in results
                ]
            )
        )
    elif fmt == "csv":
        print("suite,name,passed,detail")
        for r in results:
            print(f"{r.suite},{r.name},{int(r.passed)},{r.detail}")
    else:
        for r in results:
            tag = "PASS" if r.passed else "FAIL"
            detail = f"  {r.detail}" if r.detail else ""
            print(f"{tag}  {r.suite}/{r.name}{detail}")
        print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return EXIT_CHECK_FAILED if failed else EXIT_OK


def _run_asym(args, p: PrecisionPolicy) -> int:
    fmt = args.format or "csv"
    exp = asymptotics.AsymExperiment(
        omega=OmegaVector.of(*parse_real_tuple(args.omega)),
        alpha=OmegaVector.of(*parse_real_tuple(args.alpha)),
        a=parse_complex(args.a),
        m=args.m,
        k=args.k,
        w_grid=parse_real_tuple(args.w_grid),
        strict_statement=args.strict_statement,
        policy=p,
    )
    rows = asymptotics.run_experiment(exp)
    fit = None
    if args.fit:
        fitted, reference = asymptotics.fit_one_over_w(exp, rows)
        fit = (fitted, reference)
    digits = _digits(p.precision_bits)
    if fmt == "json":
        payload = {
            "rows": [
                {
                    "w": _fmt(row.w, digits),
                    "lhs": _fmt_complex(row.lhs, digits),
                    "rhs": _fmt_complex(row.rhs_sum, digits),
                    "err_abs": _fmt(abs(row.error), 3),
                    "err_norm": _fmt(row.normalized_error, 3),
                }
                for row in rows
            ]
        }
        if fit is not None:
            payload["fit"] = {
                "fitted": _fmt_complex(fit[0], digits),
                "reference": _fmt_complex(fit[1], digits),
            }
        print(json.dumps(payload))
    elif fmt == "csv":
        print("w,lhs_re,lhs_im,rhs_re,rhs_im,err_abs,err_norm")
        for row in rows:
            lhs, rhs = _fmt_complex(row.lhs, digits), _fmt_complex(row.rhs_sum, digits)
            print(
                f"{_fmt(row.w, digits)},{lhs['re']},{lhs['im']},"
                f"{rhs['re']},{rhs['im']},"
                f"{_fmt(abs(row.error), 3)},{_fmt(row.normalized_error, 3)}"
            )
        if fit is not None:
            ft, rf = _fmt_complex(fit[0], digits), _fmt_complex(fit[1], digits)
            print(f"# fit,{ft['re']},{ft['im']},{rf['re']},{rf['im']}")
    else:
        for row in rows:
            print(
                f"w={_fmt(row.w, 6)}  err_abs={_fmt(abs(row.error), 3)}"
                f"  err_norm={_fmt(row.normalized_error, 3)}"
            )
        if fit is not None:
            print(f"fit: {mp.nstr(fit[0], digits)}  reference: {mp.nstr(fit[1], digits)}")
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        p = _resolve_policy(args)
        with p.context():
            if args.command == "eval":
                return _run_eval(args, p)
            if args.command == "check":
                return _run_check(args, p)
            return _run_asym(args, p)
    except _DOMAIN_ERRORS as exc:
        return _emit_error(EXIT_DOMAIN, str(exc))
    except _PRECISION_ERRORS as exc:
        return _emit_error(EXIT_PRECISION, str(exc))
    except FitUnstable as exc:
        return _emit_error(EXIT_FIT, str(exc))
    except ValueError as exc:
        return _emit_error(EXIT_PARSE, str(exc))


if __name__ == "__main__":
    sys.exit(main())
