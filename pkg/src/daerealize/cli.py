"""Command line interface.

Subcommands:

* verify   -- does a given system realize a given equation?
* io       -- minimal input-output equation of a given system
* realize  -- decide realizability of an equation, construct a system
* lie      -- output derivative sequence of a given system

Exit codes: 0 for a positive answer (verified, realized, computed), 1 for
a certified negative, 2 for undecided, 3 for malformed input.  With
DAEREALIZE_BRANCH_LOG=1 the undecided branches are echoed on stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .dynsys import io_equation, lie_sequence, verify_realization
from .errors import ParseError, UnsupportedError
from .mpoly import poly_text
from .parser import parse_dae
from .realize import NO, REALIZED, UNSUPPORTED, realize
from .sysio import load_system, rat_text, system_text, system_to_dict


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(3, f"{self.prog}: error: {message}\n")


def _emit(payload: dict) -> None:
    print(json.dumps(payload, sort_keys=True, indent=2))


def _branch_log(diagnostics) -> None:
    if os.environ.get("DAEREALIZE_BRANCH_LOG"):
        for line in diagnostics:
            print(f"branch: {line}", file=sys.stderr)


def _load_dae(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_dae(fh.read())


def _cmd_verify(args) -> int:
    system = load_system(args.system)
    equation, _params = _load_dae(args.dae)
    ok = verify_realization(system, equation)
    if args.json:
        _emit({"status": "verified" if ok else "refuted"})
    else:
        print("verified" if ok else "not a realization")
    return 0 if ok else 1


def _cmd_io(args) -> int:
    system = load_system(args.system)
    try:
        equation = io_equation(system)
    except UnsupportedError as exc:
        _branch_log([exc.reason])
        if args.json:
            _emit({"status": "unsupported", "diagnostics": [exc.reason]})
        else:
            print(f"undecided: {exc.reason}")
        return 2
    if args.json:
        _emit({"status": "ok", "equation": poly_text(equation)})
    else:
        print(poly_text(equation))
    return 0


def _cmd_realize(args) -> int:
    equation, _params = _load_dae(args.dae)
    result = realize(equation, mode=args.mode,
                     point_height=args.point_height,
                     riccati_degree=args.riccati_degree)
    _branch_log(result.diagnostics)
    if args.json:
        payload = {"status": result.status.lower(),
                   "diagnostics": list(result.diagnostics)}
        if result.system is not None:
            payload["system"] = system_to_dict(result.system)
        _emit(payload)
    elif result.status == REALIZED:
        print(system_text(result.system))
    elif result.status == NO:
        print("no realization exists")
    else:
        print("undecided")
        for line in result.diagnostics:
            print(f"  {line}")
    return {REALIZED: 0, NO: 1, UNSUPPORTED: 2}[result.status]


def _cmd_lie(args) -> int:
    system = load_system(args.system)
    if args.order < 0:
        raise ValueError("order must be nonnegative")
    seq = lie_sequence(system, args.order)
    if args.json:
        _emit({"status": "ok", "lie": [rat_text(r) for r in seq]})
    else:
        for i, r in enumerate(seq):
            print(f"y^({i}) = {rat_text(r)}")
    return 0


def _build_parser() -> _ArgumentParser:
    parser = _ArgumentParser(
        prog="daerealize",
        description="Exact realizability of single-input single-output "
                    "differential equations by rational dynamical systems.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check a candidate realization")
    p.add_argument("--system", required=True, help="system JSON file")
    p.add_argument("--dae", required=True, help="equation file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("io", help="input-output equation of a system")
    p.add_argument("--system", required=True, help="system JSON file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_io)

    p = sub.add_parser("realize", help="decide realizability of an equation")
    p.add_argument("--dae", required=True, help="equation file")
    p.add_argument("--mode", default="auto",
                   choices=["auto", "order-zero", "first-order",
                            "input-affine"])
    p.add_argument("--point-height", type=int, default=10,
                   help="height bound for rational point searches")
    p.add_argument("--riccati-degree", type=int, default=6,
                   help="degree bound for polynomial particular solutions")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_realize)

    p = sub.add_parser("lie", help="output derivative sequence")
    p.add_argument("--system", required=True, help="system JSON file")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_lie)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except UnsupportedError as exc:
        print(f"undecided: {exc.reason}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
