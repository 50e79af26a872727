"""``qknot``: command-line front end.

Exit status: 0 on success, 1 when a computation or check fails, 2 on a usage
error (bad flags, out-of-range parameters, unreadable files).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import warnings
from pathlib import Path

from . import verify as verify_mod
from .diagram import (
    BUILTINS,
    DiagramError,
    EnhancedGaussDiagram,
    RealizabilityWarning,
    builtin,
    convert_left_pointing,
    NonIntegralLinking,
    linking_coefficients,
    parse_egd,
)
from .jones import colored_jones, jones_h_series, kashaev
from .ohtsuki import IntegralityViolation, OracleMismatch, ohtsuki_series, wrt_direct_check
from .oracle import TangleError, builtin_tangle, evaluate_tangle, framing_factor, parse_tangle
from .qarith import LaurentPoly

VERBS = ("jones", "series", "kashaev", "ohtsuki", "wrt", "oracle", "verify", "check")


class UsageError(Exception):
    pass


def _framing(text: str) -> int:
    try:
        f = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"framing must be +1 or -1, got {text!r}") from None
    if f not in (1, -1):
        raise argparse.ArgumentTypeError(f"framing must be +1 or -1, got {text!r}")
    return f


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_mutually_exclusive_group()
    src.add_argument("--knot", help=f"built-in knot: {', '.join(sorted(BUILTINS))}")
    src.add_argument("--file", help="enhanced Gauss diagram file")
    common.add_argument("--color", type=int, help="color mu >= 1")
    common.add_argument("--order", type=int, help="truncation order N >= 0")
    common.add_argument("--level", type=int, help="root of unity order K")
    common.add_argument("--framing", type=_framing, help="surgery framing, +1 or -1")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--workers", type=int, default=1, help="processes for the state sum")
    common.add_argument("--cache", help="directory for memoised outputs")

    p = argparse.ArgumentParser(prog="qknot", description="Exact quantum invariants of knots and of +-1 surgeries.")
    sub = p.add_subparsers(dest="verb", metavar="verb")
    sub.required = True
    sub.add_parser("jones", parents=[common], help="colored Jones polynomial in color --color")
    sub.add_parser("series", parents=[common], help="h-expansion of the Jones function up to --order")
    sub.add_parser("kashaev", parents=[common], help="Kashaev invariant at --level")
    sub.add_parser("ohtsuki", parents=[common], help="Ohtsuki series of --framing surgery up to --order")
    sub.add_parser("wrt", parents=[common], help="WRT invariant of --framing surgery at odd --level, checked")
    o = sub.add_parser("oracle", parents=[common], help="evaluate a 1-tangle through the R-matrix")
    o.add_argument("--tangle", help="tangle word file (default: the built-in word for --knot)")
    v = sub.add_parser("verify", parents=[common], help="run self-check suites")
    v.add_argument("--suite", default="all", choices=verify_mod.SUITES + ("all",))
    v.add_argument("--corrupt-builtin", action="store_true", help="test hook: flip a blob sign in every built-in knot")
    c = sub.add_parser("check", parents=[common], help="parse and validate a diagram file")
    c.add_argument("path", nargs="?", help="diagram file (same as --file)")
    return p


def _load(args) -> EnhancedGaussDiagram:
    path = getattr(args, "path", None) or args.file
    if path:
        try:
            text = Path(path).read_text()
        except OSError as e:
            raise UsageError(f"cannot read {path}: {e.strerror}") from None
        D = parse_egd(text)
        return convert_left_pointing(D) if D.left else D
    name = args.knot or "trefoil"
    if name not in BUILTINS:
        raise UsageError(f"unknown knot {name!r}; known: {', '.join(sorted(BUILTINS))}")
    return builtin(name)


def _need(args, name, lo, what):
    val = getattr(args, name)
    if val is None:
        raise UsageError(f"--{name} is required for this verb")
    if val < lo:
        raise UsageError(f"{what} must be >= {lo}, got {val}")
    return val


def _poly_out(p: LaurentPoly, fmt: str) -> str:
    return p.dumps() if fmt == "json" else str(p)


def _cmd_jones(args, D):
    mu = _need(args, "color", 1, "color")
    return _poly_out(colored_jones(D, mu, workers=args.workers), args.format)


def _cmd_series(args, D):
    N = _need(args, "order", 0, "order")
    coeffs = jones_h_series(D, N)
    if args.format == "json":
        return json.dumps([[str(c) for c in m.coeffs] for m in coeffs])
    return "\n".join(f"h^{n}: {m}" for n, m in enumerate(coeffs))


def _cmd_kashaev(args, D):
    K = _need(args, "level", 1, "level")
    return _poly_out(kashaev(D, K), args.format)


def _cmd_ohtsuki(args, D):
    N = _need(args, "order", 0, "order")
    if args.framing is None:
        raise UsageError("--framing is required for this verb")
    lam = ohtsuki_series(D, args.framing, N, workers=args.workers).coefficients
    if args.format == "json":
        return json.dumps(lam)
    return "\n".join(f"lambda_{m} = {x}" for m, x in enumerate(lam))


def _cmd_wrt(args, D):
    K = _need(args, "level", 3, "level")
    if K % 2 == 0:
        raise UsageError(f"level must be odd, got {K}")
    if args.framing is None:
        raise UsageError("--framing is required for this verb")
    w = wrt_direct_check(D, args.framing, K)
    if args.format == "json":
        return json.dumps(w.to_json())
    return f"{w.value_q}  (K = {K}, mod Phi_K(q); direct check passed)"


def _cmd_oracle(args, D):
    mu = _need(args, "color", 1, "color")
    if args.tangle:
        try:
            T = parse_tangle(Path(args.tangle).read_text(), name=args.tangle)
        except OSError as e:
            raise UsageError(f"cannot read {args.tangle}: {e.strerror}") from None
        state_sum = None
    else:
        if args.file:
            raise UsageError("--file needs --tangle for the oracle verb")
        name = args.knot or "trefoil"
        T = builtin_tangle(name)
        state_sum = colored_jones(D, mu)
    framed = evaluate_tangle(T, mu)
    unframed = framed * framing_factor(mu, -T.writhe)
    if args.format == "json":
        out = {"color": mu, "writhe": T.writhe, "framed": framed.to_json(), "value": unframed.to_json()}
        if state_sum is not None:
            out["matches_state_sum"] = unframed == state_sum
        return json.dumps(out)
    lines = [f"framed: {framed}", f"writhe: {T.writhe}", f"value: {unframed}"]
    if state_sum is not None:
        lines.append("state sum: " + ("agrees" if unframed == state_sum else f"DISAGREES ({state_sum})"))
    return "\n".join(lines)


def _cmd_check(args, D):
    warns = D.parity_warnings()
    try:
        q = linking_coefficients(D)
    except NonIntegralLinking as e:
        q = None
        warns.append(str(e))
    if args.format == "json":
        return json.dumps({"valid": True, "crossings": D.c, "writhe": D.writhe, "q": q, "warnings": warns})
    shown = "not integral" if q is None else "[" + ", ".join(str(x) for x in q) + "]"
    lines = [f"valid; writhe {D.writhe}; q = {shown}"]
    lines += [f"warning: {w}" for w in warns]
    return "\n".join(lines)


_DISPATCH = {
    "jones": _cmd_jones,
    "series": _cmd_series,
    "kashaev": _cmd_kashaev,
    "ohtsuki": _cmd_ohtsuki,
    "wrt": _cmd_wrt,
    "oracle": _cmd_oracle,
    "check": _cmd_check,
}

_CACHED = ("jones", "series", "kashaev", "ohtsuki", "wrt")


def _cache_path(args, D) -> Path:
    key = json.dumps(
        [D.serialize(), args.verb, args.color, args.order, args.level, args.framing, args.format], sort_keys=True
    )
    return Path(args.cache) / (hashlib.sha256(key.encode()).hexdigest() + ".out")


def _verify(args) -> int:
    report = verify_mod.run(args.suite, corrupt=args.corrupt_builtin)
    if args.format == "json":
        print(json.dumps({"suite": args.suite, "pass": report.passed, "records": report.to_json()}))
    else:
        fails = report.failures()
        print(f"suite {args.suite}: {len(report.records) - len(fails)}/{len(report.records)} checks passed")
        for r in fails:
            print(f"FAIL {r.check} at {list(r.location)}: expected {r.bound}, got {r.observed}")
    return 0 if report.passed else 1


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    if args.workers < 1:
        print("qknot: error: --workers must be >= 1", file=sys.stderr)
        return 2
    try:
        if args.verb == "verify":
            return _verify(args)
        with warnings.catch_warnings(record=True):
            warnings.simplefilter("always", RealizabilityWarning)
            D = _load(args)
        if args.verb in _CACHED and args.cache:
            path = _cache_path(args, D)
            if path.exists():
                print(path.read_text(), end="")
                return 0
            out = _DISPATCH[args.verb](args, D)
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(out + "\n")
        else:
            out = _DISPATCH[args.verb](args, D)
        print(out)
        return 0
    except UsageError as e:
        parser.print_usage(sys.stderr)
        print(f"qknot: error: {e}", file=sys.stderr)
        return 2
    except (OracleMismatch, IntegralityViolation, DiagramError, TangleError, ArithmeticError) as e:
        print(f"qknot: {type(e).__name__}: {e}", file=sys.stderr)
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
