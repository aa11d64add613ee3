"""Command-line front end.

Exit status: 0 on success, 1 when the answer is negative or could not be
reached (a violation, an unbounded enumeration, an exhausted budget, a
failed self-test), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from decimal import MAX_EMAX, Context, Decimal
from pathlib import Path
from typing import Any, List, Optional

from .ack_enum import FuelSchedule, build_ack_enumeration
from .ackermann import SparseNat, ack, cantor_pair, cantor_unpair
from .budget import Budget, BudgetExhausted
from .enumeration import (Enumeration, EnumTree, bme_bound, canonical, fmt_seq, unbounded_witness,
                          validate)
from .hierarchy import fgh_eval, fgh_trace
from .iteration import Inconclusive, build_approx, builtin
from .ordinals import OrdinalSyntaxError, parse_ordinal

if hasattr(sys, "set_int_max_str_digits"):
    sys.set_int_max_str_digits(0)

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2

# what the running command has got through; reported on interrupt
_progress: dict = {}


class UsageError(Exception):
    pass


def natural(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a natural number: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"not a natural number: {text!r}")
    return value


def positive(text: str) -> int:
    value = natural(text)
    if value == 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def leading_digits(value: int, keep: int) -> tuple:
    """First ``keep`` decimal digits and the digit count of a huge ``value``,
    worked out from its top bits rather than a full conversion."""
    shift = max(value.bit_length() - 4 * keep - 64, 0)
    ctx = Context(prec=keep + 30, Emax=MAX_EMAX)
    approx = ctx.multiply(Decimal(value >> shift), ctx.power(Decimal(2), shift))
    head = "".join(map(str, approx.as_tuple().digits[:keep]))
    return head, approx.adjusted() + 1


def show_int(value: int, max_digits: Optional[int]) -> str:
    if max_digits is None or value.bit_length() <= 3 * max_digits:
        text = str(value)
        if max_digits is None or len(text) <= max_digits:
            return text
        return f"{text[:max_digits]}... ({len(text)} digits)"
    head, count = leading_digits(value, max_digits)
    return f"{head}... ({count} digits)"


def show_sparse(value: SparseNat, max_digits: Optional[int]) -> str:
    """Decimal when it can be written out, else a sum of powers of two."""
    if value.bit_length() <= 1 << 16:
        return show_int(value.to_int(), max_digits)
    return str(value)


class Output:
    def __init__(self, args):
        self.json = getattr(args, "json", False) is True
        self.max_digits = getattr(args, "max_digits", None)

    def num(self, value: int) -> Any:
        if self.max_digits is None:
            return value
        text = show_int(value, self.max_digits)
        return value if text.isdigit() else text

    def emit(self, payload: dict, text: str) -> None:
        if self.json:
            print(json.dumps(payload, sort_keys=True))
        else:
            print(text)

    def exhausted(self, exc: BudgetExhausted, **extra) -> int:
        payload = dict(exc.payload(), **extra)
        ex = payload["exhausted"]
        self.emit(payload, f"exhausted: {ex['reason']} budget spent after {ex['steps_used']} steps "
                           f"at {ex['deepest_index']}")
        return EXIT_NEGATIVE


def load_enumeration(path: str) -> Enumeration:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}")
    try:
        return Enumeration.from_json(text)
    except ValueError as exc:
        raise UsageError(f"{path}: {exc}")


def cmd_fgh(args, out: Output) -> int:
    alpha = parse_ordinal(args.alpha)
    budget = Budget.unlimited() if args.unlimited else Budget(args.max_steps)
    _progress.update(alpha=str(alpha), n=args.n)
    if args.trace:
        try:
            trace, value = fgh_trace(alpha, args.n, budget)
        except BudgetExhausted as exc:
            steps = [[str(a), out.num(x)] for a, x in exc.trace]
            return out.exhausted(exc, trace=steps)
        steps = [[str(a), out.num(x)] for a, x in trace]
        lines = [f"f_{a}({x})" for a, x in steps] + [f"= {out.num(value)}"]
        out.emit({"alpha": str(alpha), "n": args.n, "value": out.num(value), "trace": steps},
                 "\n".join(lines))
        return EXIT_OK
    try:
        value = fgh_eval(alpha, args.n, budget)
    except BudgetExhausted as exc:
        return out.exhausted(exc)
    out.emit({"alpha": str(alpha), "n": args.n, "value": out.num(value)}, str(out.num(value)))
    return EXIT_OK


def cmd_ack(args, out: Output) -> int:
    try:
        value = ack(args.m, args.n, Budget(args.max_steps))
    except BudgetExhausted as exc:
        return out.exhausted(exc)
    out.emit({"m": args.m, "n": args.n, "value": out.num(value)}, str(out.num(value)))
    return EXIT_OK


def cmd_pair(args, out: Output) -> int:
    x = cantor_pair(args.m, args.n)
    out.emit({"m": args.m, "n": args.n, "pair": out.num(x)}, str(out.num(x)))
    return EXIT_OK


def cmd_unpair(args, out: Output) -> int:
    m, n = cantor_unpair(args.x)
    out.emit({"x": args.x, "m": out.num(m), "n": out.num(n)}, f"{out.num(m)} {out.num(n)}")
    return EXIT_OK


def _violation(out: Output, bad) -> int:
    out.emit({"valid": False, "violation": bad.to_json()}, str(bad))
    return EXIT_NEGATIVE


def cmd_enum_validate(args, out: Output) -> int:
    e = load_enumeration(args.file)
    bad = validate(e)
    if bad is not None:
        return _violation(out, bad)
    out.emit({"valid": True, "stages": len(e)}, "Valid")
    return EXIT_OK


def cmd_enum_tree(args, out: Output) -> int:
    e = load_enumeration(args.file)
    bad = validate(e)
    if bad is not None:
        return _violation(out, bad)
    tree = EnumTree(e.stage_of)
    if args.dot:
        sys.stdout.write(tree.to_dot(e))
        return EXIT_OK
    nodes = list(tree)
    out.emit({"nodes": [list(s) for s in nodes], "leaves": [list(s) for s in tree.leaves()],
              "depth": tree.depth()},
             "\n".join(fmt_seq(s) for s in nodes))
    return EXIT_OK


def cmd_enum_bound(args, out: Output) -> int:
    e = load_enumeration(args.file)
    bad = validate(e)
    if bad is not None:
        return _violation(out, bad)
    witness = unbounded_witness(e, args.b)
    if witness is not None:
        out.emit({"bounded": False, "b": args.b, "witness": list(witness)},
                 f"not bounded by {args.b}: {fmt_seq(witness)} has a longer stage-by-stage sequence")
        return EXIT_NEGATIVE
    bound = bme_bound(e, args.b)
    text = show_sparse(bound, out.max_digits)
    out.emit({"bounded": True, "b": args.b, "bound": text}, text)
    return EXIT_OK


def cmd_enum_ack_tree(args, out: Output) -> int:
    fuel = FuelSchedule(Budget(args.max_steps), args.max_realizations)
    _progress.update(m=args.m, n=args.n)
    ae = build_ack_enumeration(args.m, args.n, fuel)
    if args.json not in (None, "-"):
        Path(args.json).write_text(json.dumps(ae.enumeration.to_json()) + "\n", encoding="utf-8")
    status = EXIT_OK if ae.complete else EXIT_NEGATIVE
    if args.dot:
        sys.stdout.write(ae.to_dot())
        return status
    realized = {fmt_seq(t): v for t, v in sorted(ae.realized.items())}
    payload = dict(ae.enumeration.to_json(), m=args.m, n=args.n, complete=ae.complete,
                   realized=realized, unrealized=[list(t) for t in ae.unrealized])
    lines = [f"{st.index}: {{{', '.join(fmt_seq(s) for s in canonical(st.new))}}}"
             for st in ae.enumeration.stages]
    lines.append(f"{len(ae.realized)} realized, {len(ae.unrealized)} left unrealized")
    if args.json == "-":
        print(json.dumps(payload, sort_keys=True))
    else:
        print("\n".join(lines))
    return status


def cmd_approx_build(args, out: Output) -> int:
    try:
        f = builtin(args.fn)
    except (KeyError, ValueError) as exc:
        raise UsageError(str(exc.args[0]))
    built = build_approx(f, args.len, args.seed, Budget(args.max_steps))
    if isinstance(built, Inconclusive):
        return out.exhausted(built.exhausted, at={"i": built.i, "x": built.x})
    entries = [out.num(v) for v in built.entries]
    out.emit({"fn": f.name, "seed": args.seed, "entries": entries},
             " ".join(str(v) for v in entries))
    return EXIT_OK


def cmd_selftest(args, out: Output) -> int:
    from . import acceptance

    only = args.only or None
    results = []
    for i, check in enumerate(acceptance.CRITERIA, 1):
        if only and i not in only:
            continue
        result = check()
        results.append(result)
        _progress.setdefault("finished", []).append(result.number)
        if not out.json:
            print(result.line(), flush=True)
    passed = sum(r.passed for r in results)
    if out.json:
        print(json.dumps({"criteria": [r.to_json() for r in results], "passed": passed,
                          "total": len(results)}, sort_keys=True))
    else:
        print(f"{passed}/{len(results)} criteria passed")
    return EXIT_OK if passed == len(results) else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="structured output")
    common.add_argument("--max-digits", type=positive, default=None,
                        help="abbreviate longer numbers on display")

    parser = argparse.ArgumentParser(prog="bmestar", description=__doc__.splitlines()[0])
    verbs = parser.add_subparsers(dest="verb", metavar="VERB", required=True)

    p = verbs.add_parser("fgh", parents=[common], help="evaluate the fast-growing hierarchy")
    p.add_argument("--alpha", required=True, help='ordinal below epsilon_0, e.g. "w^2 + 1"')
    p.add_argument("--n", required=True, type=natural)
    p.add_argument("--max-steps", type=positive, default=10_000)
    p.add_argument("--unlimited", action="store_true",
                   help="no step limit (values still come out exact)")
    p.add_argument("--trace", action="store_true", help="list every expansion step")
    p.set_defaults(func=cmd_fgh)

    p = verbs.add_parser("ack", parents=[common], help="evaluate A(m, n)")
    p.add_argument("--m", required=True, type=natural)
    p.add_argument("--n", required=True, type=natural)
    p.add_argument("--max-steps", type=positive, default=10_000)
    p.set_defaults(func=cmd_ack)

    p = verbs.add_parser("pair", parents=[common], help="Cantor pairing <m, n>")
    p.add_argument("m", type=natural)
    p.add_argument("n", type=natural)
    p.set_defaults(func=cmd_pair)

    p = verbs.add_parser("unpair", parents=[common], help="inverse Cantor pairing")
    p.add_argument("x", type=natural)
    p.set_defaults(func=cmd_unpair)

    enum = verbs.add_parser("enum", help="monotone enumerations")
    sub = enum.add_subparsers(dest="action", metavar="ACTION", required=True)

    p = sub.add_parser("validate", parents=[common], help="check the monotonicity conditions")
    p.add_argument("file", help="enumeration JSON, or - for stdin")
    p.set_defaults(func=cmd_enum_validate)

    p = sub.add_parser("tree", parents=[common], help="the enumerated tree")
    p.add_argument("file")
    p.add_argument("--dot", action="store_true", help="Graphviz output with stage boxes")
    p.set_defaults(func=cmd_enum_tree)

    p = sub.add_parser("bound", parents=[common], help="bound on the codes of enumerated sequences")
    p.add_argument("file")
    p.add_argument("--b", required=True, type=natural, help="bound on stage-by-stage sequence length")
    p.set_defaults(func=cmd_enum_bound)

    p = sub.add_parser("ack-tree", help="the enumeration behind A(m, n)")
    p.add_argument("--m", required=True, type=positive)
    p.add_argument("--n", required=True, type=positive)
    p.add_argument("--max-realizations", type=natural, default=10_000)
    p.add_argument("--max-steps", type=positive, default=1_000_000, help="budget per A(i, j) query")
    p.add_argument("--dot", action="store_true")
    p.add_argument("--json", nargs="?", const="-", default=None, metavar="OUT",
                   help="write the enumeration JSON to OUT (no argument: stdout)")
    p.set_defaults(func=cmd_enum_ack_tree)

    approx = verbs.add_parser("approx", help="approximations to function iteration")
    sub = approx.add_subparsers(dest="action", metavar="ACTION", required=True)
    p = sub.add_parser("build", parents=[common], help="least approximation from a seed")
    p.add_argument("--fn", required=True,
                   help="successor, doubling, ackermann:M, ack-prime or fgh:ALPHA")
    p.add_argument("--len", required=True, type=positive)
    p.add_argument("--seed", type=natural, default=0)
    p.add_argument("--max-steps", type=positive, default=1_000_000)
    p.set_defaults(func=cmd_approx_build)

    p = verbs.add_parser("selftest", parents=[common], help="run the acceptance checks")
    p.add_argument("--only", type=natural, nargs="*", metavar="N", help="criterion numbers")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = Output(args)
    _progress.clear()
    _progress["verb"] = args.verb
    try:
        return args.func(args, out)
    except (UsageError, OrdinalSyntaxError) as exc:
        parser.error(str(exc))
    except KeyboardInterrupt:
        sys.stdout.flush()
        print(json.dumps({"interrupted": dict(_progress)}, sort_keys=True, default=str))
        return EXIT_NEGATIVE


if __name__ == "__main__":
    sys.exit(main())
