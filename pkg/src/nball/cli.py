"""Command-line front end.

Subcommands::

    nball volume --dim N [--radius R] [--method closed|dist|quad|mc|inf] ...
    nball ft --alpha A
    nball verify [--max-dim D] [--tolerance T] [--samples S]

Every invocation prints one record, either as ``key: value`` lines (``text``)
or as a single JSON object (``json``) with the keys ``schema_version``,
``command``, ``inputs``, ``exact``, ``value`` and ``diagnostics``.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 numerical
non-convergence.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction

from . import __version__
from .branch import appendix_identity
from .distributions import ft_powerlaw
from .errors import ConvergenceError, DomainError, NotExact
from .exact import ExactValue, as_fraction
from .special import double_factorial
from .verify import MonteCarloConfig, QuadratureConfig, volume_monte_carlo, volume_quadrature
from .volume import (
    closed_form_report,
    distributional_report,
    infinite_dim_report,
    volume_closed_form,
    volume_distributional,
    volume_infinite_dim,
)

SCHEMA_VERSION = "1.0"

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_NONCONVERGENCE = 3


class UsageError(Exception):
    pass


def _record(command, inputs, exact=None, value=None, diagnostics=None) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "exact": exact,
        "value": value,
        "diagnostics": diagnostics or {},
    }


def _number(text: str) -> Fraction:
    try:
        q = as_fraction(text.strip())
    except (ValueError, ZeroDivisionError, NotExact):
        raise argparse.ArgumentTypeError(f"not a finite real number: {text!r}") from None
    return q


def _eps_list(text: str) -> tuple:
    try:
        return tuple(float(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad epsilon list: {text!r}") from None


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, Fraction):
        return str(obj) if obj.denominator != 1 else int(obj)
    if isinstance(obj, float) and not math.isfinite(obj):
        return repr(obj)
    return obj


def _dim_value(q: Fraction):
    return int(q) if q.denominator == 1 else float(q)


# --------------------------------------------------------------------------
# commands


def cmd_volume(args) -> dict:
    method = args.method
    r = args.radius
    inputs = {"method": method, "radius": _dim_value(r)}
    if method == "inf":
        report = infinite_dim_report(r)
        inputs["dim"] = "infinity"
        return _record("volume", inputs, str(report.exact), report.value, report.diagnostics)

    if args.dim is None:
        raise UsageError("--dim is required for this method")
    n = args.dim
    inputs["dim"] = _dim_value(n)
    integral = n.denominator == 1
    if method == "closed":
        if n <= -2:
            raise UsageError("closed form needs --dim > -2")
        report = closed_form_report(n, r)
    elif method == "dist":
        if not integral or n < 1:
            raise UsageError("--method dist needs an integer --dim >= 1")
        report = distributional_report(int(n), r)
    elif method == "quad":
        if not integral or n < 1:
            raise UsageError("--method quad needs an integer --dim >= 1")
        eps = args.eps_list or QuadratureConfig().epsilons
        cfg = QuadratureConfig(epsilons=eps, abs_tol=args.abs_tol)
        inputs["eps_list"] = list(cfg.epsilons)
        rep = volume_quadrature(int(n), cfg, jobs=args.jobs)
        scale = float(r) ** int(n)
        diag = dict(rep.diagnostics)
        diag["unit_ball_value"] = rep.value
        return _record("volume", inputs, None, rep.value * scale, diag)
    elif method == "mc":
        if not integral or n < 1:
            raise UsageError("--method mc needs an integer --dim >= 1")
        cfg = MonteCarloConfig(samples=args.samples, seed=args.seed, shards=args.shards)
        inputs.update(samples=cfg.samples, seed=cfg.seed, shards=cfg.shards)
        report = volume_monte_carlo(int(n), float(r), cfg, jobs=args.jobs)
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown method {method}")
    exact = str(report.exact) if report.exact is not None else None
    return _record("volume", inputs, exact, report.value, report.diagnostics)


def cmd_ft(args) -> dict:
    expr = ft_powerlaw(args.alpha)
    inputs = {"alpha": _dim_value(args.alpha)}
    return _record("ft", inputs, str(expr), None, {"terms": len(expr), "exact_coefficients": expr.is_exact()})


def _check(name, fn):
    try:
        ok, detail = fn()
    except ConvergenceError as exc:
        ok, detail = False, f"non-convergence: {exc}"
    return {"name": name, "passed": bool(ok), "detail": detail}


def _verify_checks(max_dim: int, tolerance: float, samples: int, seed: int, jobs: int) -> list:
    checks = []
    for n in range(1, max_dim + 1):

        def dist(n=n):
            a, b = volume_distributional(n), volume_closed_form(n)
            return a == b, f"{a} == {b}"

        checks.append(_check(f"dist_equals_closed[n={n}]", dist))

    for n in range(1, min(max_dim, 6) + 1):

        def quad(n=n):
            rep = volume_quadrature(n, jobs=jobs)
            ref = float(volume_closed_form(n))
            rel = abs(rep.value - ref) / ref
            imag = max(abs(p["integral_imag"]) for p in rep.diagnostics["per_eps"])
            return rel <= tolerance and imag <= 1e-6, f"rel_err={rel!r} max_imag={imag!r}"

        checks.append(_check(f"quad_close[n={n}]", quad))

    for n in range(2, min(max_dim, 8) + 1):

        def mc(n=n):
            rep = volume_monte_carlo(n, 1.0, MonteCarloConfig(samples=samples, seed=seed), jobs=jobs)
            ref = float(volume_closed_form(n))
            err = abs(rep.value - ref)
            se = rep.diagnostics["stderr"]
            return err <= 3 * se, f"|est-ref|={err!r} stderr={se!r}"

        checks.append(_check(f"mc_3sigma[n={n}]", mc))

    def appendix():
        worst = max(abs(appendix_identity(Fraction(2 * j + 1, 2)) - 1) for j in range(16))
        return worst <= 1e-12, f"max |value-1|={worst!r} for m=1/2..31/2"

    def dfact():
        examples = [double_factorial(-1), double_factorial(-3), double_factorial(-5)]
        ok = examples == [1, -1, Fraction(1, 3)]
        ok &= all(
            double_factorial(-n) * double_factorial(n) == (-1) ** ((n - 1) // 2) * n for n in range(1, 20, 2)
        )
        return ok, "(-1)!!, (-3)!!, (-5)!! and reflection for odd n <= 19"

    def infinite():
        ok = True
        for r in (1, 2, 10):
            v = volume_infinite_dim(r)
            ok &= v == volume_closed_form(-1, r) == ExactValue(Fraction(1, r), -2)
        return ok, "1/(pi r) for r in 1, 2, 10"

    checks.append(_check("appendix_identity", appendix))
    checks.append(_check("double_factorial", dfact))
    checks.append(_check("infinite_dim_equals_closed[n=-1]", infinite))
    return checks


def cmd_verify(args) -> dict:
    if args.max_dim < 1:
        raise UsageError("--max-dim must be >= 1")
    checks = _verify_checks(args.max_dim, args.tolerance, args.samples, args.seed, args.jobs)
    passed = sum(c["passed"] for c in checks)
    inputs = {"max_dim": args.max_dim, "tolerance": args.tolerance, "samples": args.samples, "seed": args.seed}
    diag = {"checks": checks, "passed": passed, "failed": len(checks) - passed}
    return _record("verify", inputs, None, None, diag)


# --------------------------------------------------------------------------
# output


def _format_text(record: dict) -> str:
    if record["command"] == "ft":
        return record["exact"]
    lines = [f"command: {record['command']}"]
    if record["command"] == "verify":
        for c in record["diagnostics"]["checks"]:
            lines.append(f"{'PASS' if c['passed'] else 'FAIL'} {c['name']}: {c['detail']}")
        d = record["diagnostics"]
        lines.append(f"passed: {d['passed']}")
        lines.append(f"failed: {d['failed']}")
        return "\n".join(lines)
    if record["exact"] is not None:
        lines.append(f"exact: {record['exact']}")
    if record["value"] is not None:
        lines.append(f"value: {record['value']!r}")
    for key, val in record["diagnostics"].items():
        lines.append(f"{key}: {json.dumps(_jsonable(val))}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nball", description=__doc__.split("\n\n")[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--jobs", type=int, default=1, help="worker threads for eps values / MC shards")

    vol = sub.add_parser("volume", parents=[common], help="ball volume by one method")
    vol.add_argument("--dim", type=_number)
    vol.add_argument("--radius", type=_number, default=Fraction(1))
    vol.add_argument("--method", choices=("closed", "dist", "quad", "mc", "inf"), default="closed")
    vol.add_argument("--eps-list", type=_eps_list, default=None, help="comma separated, decreasing")
    vol.add_argument("--abs-tol", type=float, default=1e-8)
    vol.add_argument("--samples", type=int, default=1_000_000)
    vol.add_argument("--seed", type=int, default=MonteCarloConfig.seed)
    vol.add_argument("--shards", type=int, default=1)
    vol.set_defaults(func=cmd_volume)

    ft = sub.add_parser("ft", parents=[common], help="Fourier transform of Pf x^alpha")
    ft.add_argument("--alpha", type=_number, required=True)
    ft.set_defaults(func=cmd_ft)

    ver = sub.add_parser("verify", parents=[common], help="run the cross-check matrix")
    ver.add_argument("--max-dim", type=int, default=10)
    ver.add_argument("--tolerance", type=float, default=1e-3, help="relative tolerance of quadrature checks")
    ver.add_argument("--samples", type=int, default=1_000_000)
    ver.add_argument("--seed", type=int, default=MonteCarloConfig.seed)
    ver.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        record = args.func(args)
    except (UsageError, DomainError) as exc:
        parser.error(str(exc))  # exits with status 2
    except ConvergenceError as exc:
        record = _record(args.command, {}, None, exc.best, exc.diagnostics)
        record["error"] = str(exc)
        _emit(record, args.format)
        print(f"nball: {exc}", file=sys.stderr)
        return EXIT_NONCONVERGENCE
    _emit(record, args.format)
    if record["command"] == "verify" and record["diagnostics"]["failed"]:
        failing = [c["name"] for c in record["diagnostics"]["checks"] if not c["passed"]]
        print("nball: failed checks: " + ", ".join(failing), file=sys.stderr)
        return EXIT_FAILED
    return EXIT_OK


def _emit(record: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(_jsonable(record), sort_keys=False))
    else:
        print(_format_text(record))


if __name__ == "__main__":
    sys.exit(main())
