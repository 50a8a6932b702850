"""Command-line interface.

    cfkit eval "[2,3,7]"              exact value of a continued fraction
    cfkit expand 51/22                canonical expansion of a rational
    cfkit convergents "[2,3,7]"       full p/q table
    cfkit seq fib --from -5 --to 10   sequence values
    cfkit oracle board 10             brute-force tiling counts
    cfkit check ID117 --m 2           one identity case
    cfkit sweep THM2_FIB_FORM --m 0..100 --k -50..50
    cfkit fit 29 --n-max 10           uniform-base pattern fit
    cfkit surd 19                     periodic expansion of sqrt(d)

Every subcommand accepts --json for machine-readable output; sweeps emit
one JSON object per case followed by a summary object. Big integers are
serialized as decimal strings, never as JSON numbers.

Exit codes: 0 success (all PASS), 1 at least one FAIL, 2 usage error,
3 evaluation or domain error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import contfrac, identities, sequences, tiling
from .errors import CFKitError, EmptyCF, ExtraParam, MissingParam, ParseError
from .identities import CaseParams, CheckOutcome, IdentityId, Status
from .rational import Rational

_USAGE_ERRORS = (ParseError, EmptyCF, MissingParam, ExtraParam)


def _range_pair(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected LO..HI, got '{text}'")
    try:
        pair = (int(lo), int(hi))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected LO..HI, got '{text}'") from exc
    if pair[0] > pair[1]:
        raise argparse.ArgumentTypeError(f"empty range '{text}'")
    return pair


def _nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected an integer, got '{text}'") from exc
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got '{text}'")
    return value


def _identity(name: str) -> IdentityId:
    try:
        return IdentityId[name]
    except KeyError:
        known = ", ".join(i.name for i in IdentityId)
        raise ValueError(f"unknown identity '{name}'; choose one of: {known}") from None


def _parse_rational(text: str) -> Rational:
    num, sep, den = text.partition("/")
    try:
        if sep:
            return Rational(int(num), int(den))
        return Rational(int(num))
    except ValueError as exc:
        raise ParseError(f"expected NUM/DEN, got '{text}'", 0) from exc


def _decimal(r: Rational, digits: int) -> str:
    """Truncate toward zero to `digits` fractional digits; '…' marks inexactness."""
    sign = "-" if r.num < 0 else ""
    whole, rem = divmod(abs(r.num), r.den)
    out = f"{sign}{whole}"
    if digits > 0:
        frac = []
        for _ in range(digits):
            rem *= 10
            digit, rem = divmod(rem, r.den)
            frac.append(str(digit))
        out += "." + "".join(frac)
    return out + "…" if rem else out


def _rat_json(r: Rational) -> dict:
    return {"num": str(r.num), "den": str(r.den)}


def _case_json(ident: IdentityId, params: CaseParams, outcome: CheckOutcome) -> dict:
    obj: dict = {"identity": ident.name, "params": {"m": params.m}}
    if params.k is not None:
        obj["params"]["k"] = params.k
    if outcome.lhs is not None:
        obj["lhs"] = _rat_json(outcome.lhs)
    if outcome.rhs is not None:
        obj["rhs"] = _rat_json(outcome.rhs)
    obj["status"] = outcome.status.name
    obj["note"] = outcome.note
    return obj


def _case_text(params: CaseParams, outcome: CheckOutcome) -> str:
    bits = [outcome.status.name, f"m={params.m}"]
    if params.k is not None:
        bits.append(f"k={params.k}")
    if outcome.lhs is not None:
        bits.append(f"lhs={outcome.lhs}")
    if outcome.rhs is not None:
        bits.append(f"rhs={outcome.rhs}")
    if outcome.note:
        bits.append(f"({outcome.note})")
    return " ".join(bits)


def _cmd_eval(args) -> int:
    value = contfrac.evaluate(contfrac.parse_cf(args.cf))
    if args.json:
        print(json.dumps(_rat_json(value)))
    elif args.digits is not None:
        print(_decimal(value, args.digits))
    else:
        print(value)
    return 0


def _cmd_expand(args) -> int:
    terms = contfrac.expand_rational(_parse_rational(args.rational))
    if args.json:
        print(json.dumps({"terms": [str(t) for t in terms]}))
    else:
        print("[" + ",".join(str(t) for t in terms) + "]")
    return 0


def _cmd_convergents(args) -> int:
    table = contfrac.convergents(contfrac.parse_cf(args.cf))
    for i, (p, q) in enumerate(zip(table.p, table.q)):
        if args.json:
            print(json.dumps({"i": i, "p": str(p), "q": str(q)}))
        else:
            print(f"{i}: {p}/{q}")
    return 0


_SEQ_KINDS = ("fib", "fibc", "lucas", "lucas-swapped", "gib", "scaled")


def _seq_value(kind: str, n: int, k: int | None, t: int | None) -> int:
    if kind == "fib":
        return sequences.fib(n)
    if kind == "fibc":
        return sequences.fib_comb(n)
    if kind == "lucas":
        return sequences.lucas(n)
    if kind == "lucas-swapped":
        return sequences.lucas_swapped(n)
    if kind == "gib":
        return sequences.gibonacci(k, n)
    return sequences.scaled_fib(t, n)


def _cmd_seq(args) -> int:
    if args.kind == "gib" and args.k is None:
        raise MissingParam("seq gib needs --k")
    if args.kind == "scaled" and args.t is None:
        raise MissingParam("seq scaled needs --t")
    if args.kind not in ("gib",) and args.k is not None:
        raise ExtraParam(f"seq {args.kind} takes no --k")
    if args.kind not in ("scaled",) and args.t is not None:
        raise ExtraParam(f"seq {args.kind} takes no --t")
    if args.start > args.stop:
        raise MissingParam(f"empty index range {args.start}..{args.stop}")
    for n in range(args.start, args.stop + 1):
        value = _seq_value(args.kind, n, args.k, args.t)
        if args.json:
            obj = {"kind": args.kind, "n": n}
            if args.k is not None:
                obj["k"] = args.k
            if args.t is not None:
                obj["t"] = args.t
            obj["value"] = str(value)
            print(json.dumps(obj))
        else:
            print(f"{n}\t{value}")
    return 0


def _cmd_oracle(args) -> int:
    if args.kind in ("board", "bracelet"):
        try:
            n = int(args.arg)
        except ValueError:
            raise MissingParam(f"oracle {args.kind} needs an integer length") from None
        count = tiling.count_board(n) if args.kind == "board" else tiling.count_bracelet(n)
        payload = {"kind": args.kind, "n": n, "count": str(count)}
    else:
        try:
            heights = [int(part) for part in args.arg.split(",")]
        except ValueError:
            raise MissingParam("oracle stacked needs a,b,c,... integer heights") from None
        count = tiling.count_stacked(heights)
        payload = {"kind": "stacked", "heights": heights, "count": str(count)}
    print(json.dumps(payload) if args.json else count)
    return 0


def _cmd_check(args) -> int:
    ident = _identity(args.identity)
    if args.m is None:
        raise MissingParam(f"check {ident.name} needs --m")
    params = CaseParams(args.m, args.k)
    outcome = identities.run_case(ident, params)
    if args.json:
        print(json.dumps(_case_json(ident, params, outcome)))
    else:
        print(_case_text(params, outcome))
    return 1 if outcome.status is Status.FAIL else 0


def _cmd_sweep(args) -> int:
    ident = _identity(args.identity)
    report = identities.sweep(ident, args.m, args.k, jobs=args.jobs)
    if args.json:
        for params, outcome in report.cases:
            print(json.dumps(_case_json(ident, params, outcome)))
        print(
            json.dumps(
                {
                    "identity": ident.name,
                    "pass": report.passed,
                    "fail": report.failed,
                    "skip": report.skipped,
                }
            )
        )
    else:
        for params, outcome in report.cases:
            if outcome.status is not Status.PASS:
                print(_case_text(params, outcome))
        print(f"pass={report.passed} fail={report.failed} skip={report.skipped}")
    return 1 if report.failed else 0


def _cmd_fit(args) -> int:
    t = identities.fit_uniform(args.c, args.n_max)
    if args.json:
        print(json.dumps({"c": str(args.c), "t": t}))
    else:
        print("NONE" if t is None else t)
    return 0


def _cmd_surd(args) -> int:
    expansion = contfrac.surd_cf(args.d, args.max_terms)
    if args.json:
        print(
            json.dumps(
                {
                    "d": str(args.d),
                    "a0": str(expansion.a0),
                    "period": [str(a) for a in expansion.period],
                }
            )
        )
    else:
        period = ",".join(str(a) for a in expansion.period)
        print(f"a0={expansion.a0} period=[{period}]")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = argparse.ArgumentParser(
        prog="cfkit",
        description="Exact continued-fraction arithmetic and identity verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="exact value of a continued fraction")
    p.add_argument("cf", help='continued fraction text, e.g. "[2,3,7]" or "[4x10,3]"')
    p.add_argument("--digits", type=_nonneg_int, help="also render D decimal digits (text mode only)")
    p.set_defaults(handler=_cmd_eval)

    p = sub.add_parser("expand", parents=[common], help="canonical expansion of NUM/DEN")
    p.add_argument("rational", help="exact rational, e.g. 51/22")
    p.set_defaults(handler=_cmd_expand)

    p = sub.add_parser("convergents", parents=[common], help="full convergent table")
    p.add_argument("cf")
    p.set_defaults(handler=_cmd_convergents)

    p = sub.add_parser("seq", parents=[common], help="sequence values over an index range")
    p.add_argument("kind", choices=_SEQ_KINDS)
    p.add_argument("--from", dest="start", type=int, required=True)
    p.add_argument("--to", dest="stop", type=int, required=True)
    p.add_argument("--k", type=int, help="family parameter (gib)")
    p.add_argument("--t", type=int, help="odd order (scaled)")
    p.set_defaults(handler=_cmd_seq)

    p = sub.add_parser("oracle", parents=[common], help="brute-force tiling counts")
    p.add_argument("kind", choices=("board", "bracelet", "stacked"))
    p.add_argument("arg", help="length, or a,b,c,... heights for stacked")
    p.set_defaults(handler=_cmd_oracle)

    p = sub.add_parser("check", parents=[common], help="check a single identity case")
    p.add_argument("identity")
    p.add_argument("--m", type=int)
    p.add_argument("--k", type=int)
    p.set_defaults(handler=_cmd_check)

    p = sub.add_parser("sweep", parents=[common], help="check an identity over ranges")
    p.add_argument("identity")
    p.add_argument("--m", type=_range_pair, required=True, metavar="LO..HI")
    p.add_argument("--k", type=_range_pair, metavar="LO..HI")
    p.add_argument("--jobs", type=int, help="evaluate cases on N threads")
    p.set_defaults(handler=_cmd_sweep)

    p = sub.add_parser("fit", parents=[common], help="fit [c,c,...,c] to a scaled-Fibonacci family")
    p.add_argument("c", type=int)
    p.add_argument("--n-max", dest="n_max", type=int, default=10)
    p.set_defaults(handler=_cmd_fit)

    p = sub.add_parser("surd", parents=[common], help="periodic expansion of sqrt(d)")
    p.add_argument("d", type=int)
    p.add_argument("--max-terms", dest="max_terms", type=int, default=10_000)
    p.set_defaults(handler=_cmd_surd)

    return parser


_VALUE_OPTIONS = {"--m", "--k", "--from", "--to"}


def _glue_negative_values(argv: list[str]) -> list[str]:
    """Join option/value pairs whose value starts with '-' (e.g. --k -50..50).

    argparse would otherwise mistake such values for option names.
    """
    out: list[str] = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        nxt = argv[i + 1] if i + 1 < len(argv) else ""
        if tok in _VALUE_OPTIONS and nxt.startswith("-") and nxt[1:2].isdigit():
            out.append(f"{tok}={nxt}")
            i += 2
        elif tok == "expand" and nxt.startswith("-") and nxt[1:2].isdigit():
            out.extend([tok, "--", nxt])  # negative rationals like -13/3
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def run(argv: list[str]) -> int:
    """Parse argv, execute, and map errors onto the documented exit codes."""
    parser = _build_parser()
    try:
        args = parser.parse_args(_glue_negative_values(argv))
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.handler(args)
    except _USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CFKitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))
