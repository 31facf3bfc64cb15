"""Command-line front end.

Exit status: 0 on success, 1 on unreadable or malformed input, 2 on domain
errors (the error's name is printed to stderr).
"""

from __future__ import annotations

import argparse
import sys

from . import serialize as ser
from .action import phi_apply
from .errors import ProjMonoidError
from .exterior import det_seq, lambda_, lambda_bar, wedge_seq
from .hinge import hinge_to_MH, varphi
from .limits import limit
from .monoid import mul, projectivize
from .worked_examples import REGISTRY, run_all


def _read(path: str):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as e:
        raise ser.ParseError(f"cannot read {path}: {e.strerror}") from None
    return ser.loads(text)


def _seq(path: str):
    return ser.sequence_from_json(_read(path), path)


def cmd_normalize(args):
    a = ser.as_mseq(_seq(args.input))
    if args.projective:
        a = projectivize(a)
    return ser.mseq_to_json(a)


def cmd_mul(args):
    out = ser.as_pmseq(_seq(args.inputs[0]))
    for path in args.inputs[1:]:
        out = mul(out, ser.as_pmseq(_seq(path)))
    return ser.mseq_to_json(out)


def cmd_act(args):
    a = ser.as_pmseq(_seq(args.sequence))
    pts = ser.points_from_json(_read(args.points), args.points)
    return {"format": ser.FORMAT, "type": "points",
            "points": [ser.point_to_json(phi_apply(a, x)) for x in pts]}


def cmd_limit(args):
    f = ser.family_from_json(_read(args.input), args.input)
    return ser.mseq_to_json(limit(f))


def cmd_hinge(args):
    return ser.hinge_to_json(varphi(ser.as_mseq(_seq(args.input))))


def cmd_hinge_inv(args):
    h = ser.hinge_from_json(_read(args.input), args.input)
    return ser.mseq_to_json(hinge_to_MH(h))


def cmd_wedge(args):
    return ser.wedge_to_json(wedge_seq(ser.as_mseq(_seq(args.input)), args.k))


def cmd_lambda(args):
    a = ser.as_mseq(_seq(args.input))
    return ser.lambda_to_json(lambda_bar(a) if args.projective else lambda_(a))


def cmd_det(args):
    return {"format": ser.FORMAT, "type": "scalar",
            "value": ser.scalar_to_json(det_seq(ser.as_mseq(_seq(args.input))))}


def cmd_verify(args):
    results = run_all(args.seed)
    passed = sum(ok for _, ok, _ in results)
    if args.json:
        print(ser.dumps({"format": ser.FORMAT, "type": "verification",
                         "passed": passed, "total": len(REGISTRY),
                         "results": [{"name": c.name, "passed": ok, "error": msg}
                                     for c, ok, msg in results]}, compact=True))
    else:
        for c, ok, msg in results:
            line = f"{'PASS' if ok else 'FAIL'}  {c.name:28s} {c.description}"
            print(line + (f"  [{msg}]" if msg else ""))
        print(f"{passed}/{len(REGISTRY)} examples passed")
    return 0 if passed == len(REGISTRY) else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="projmonoid",
                                description="Exact computations in the projective linear monoid.")
    p.add_argument("--json", action="store_true", help="compact machine-readable output")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    # the same flags are accepted after the verb as well
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    sub = p.add_subparsers(dest="verb", required=True)

    s = sub.add_parser("normalize", parents=[common], help="pi of a raw sequence (psi, then restrict)")
    s.add_argument("input")
    s.add_argument("--projective", action="store_true", help="canonical projective scaling")
    s.set_defaults(func=cmd_normalize)

    s = sub.add_parser("mul", parents=[common], help="product of two or more sequences")
    s.add_argument("inputs", nargs="+")
    s.set_defaults(func=cmd_mul)

    s = sub.add_parser("act", parents=[common], help="apply a sequence to projective points")
    s.add_argument("sequence")
    s.add_argument("points")
    s.set_defaults(func=cmd_act)

    s = sub.add_parser("limit", parents=[common], help="limit of a polynomial family as eps -> 0")
    s.add_argument("input")
    s.set_defaults(func=cmd_limit)

    s = sub.add_parser("hinge", parents=[common], help="hinge of an element of M_H")
    s.add_argument("input")
    s.set_defaults(func=cmd_hinge)

    s = sub.add_parser("hinge-inv", parents=[common], help="an element of M_H mapping to the given hinge")
    s.add_argument("input")
    s.set_defaults(func=cmd_hinge_inv)

    s = sub.add_parser("wedge", parents=[common], help="degree-k exterior map of a sequence")
    s.add_argument("input")
    s.add_argument("--k", type=int, required=True)
    s.set_defaults(func=cmd_wedge)

    s = sub.add_parser("lambda", parents=[common], help="all exterior maps of a sequence")
    s.add_argument("input")
    s.add_argument("--projective", action="store_true",
                   help="projectivized degrees 1..n-1 (requires M_H)")
    s.set_defaults(func=cmd_lambda)

    s = sub.add_parser("det", parents=[common], help="top-degree scalar of a sequence")
    s.add_argument("input")
    s.set_defaults(func=cmd_det)

    s = sub.add_parser("verify-examples", parents=[common], help="run the built-in worked examples")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.func(args)
    except ser.ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return 1
    except ProjMonoidError as e:
        print(f"{e.name}: {e}", file=sys.stderr)
        return 2
    if isinstance(result, int):
        return result
    print(ser.dumps(result, compact=args.json))
    return 0


if __name__ == "__main__":
    sys.exit(main())
