"""Reading and writing state-space systems as JSON.

The on-disk shape, also produced by the CLI, is

    {
      "states": ["x1", "x2"],
      "input": "u",
      "params": ["k1"],
      "rates": {"x1": "k1*x2", "x2": "x1*u"},
      "output": "x2"
    }

Rate and output expressions use the same grammar as equations, over the
declared states and parameters plus the input; no derivatives may appear.
"""

from __future__ import annotations

import json

from .dynsys import DynSystem
from .errors import ParseError
from .mpoly import poly_text
from .parser import NAME_RE, parse_expr
from .ratfunc import RatFunc
from .variables import Var, input_jet, param, state

_KEYS = {"states", "input", "params", "rates", "output"}


def _check_name(name, what: str) -> str:
    if not isinstance(name, str) or not NAME_RE.match(name):
        raise ParseError(f"invalid {what} name {name!r}")
    return name


def system_from_dict(data: dict) -> DynSystem:
    if not isinstance(data, dict):
        raise ParseError("system description must be an object")
    if set(data) != _KEYS:
        missing = _KEYS - set(data)
        extra = set(data) - _KEYS
        parts = []
        if missing:
            parts.append("missing " + ", ".join(sorted(missing)))
        if extra:
            parts.append("unexpected " + ", ".join(sorted(extra)))
        raise ParseError("system description: " + "; ".join(parts))
    if data["input"] != "u":
        raise ParseError("the input must be named u")
    state_names = [_check_name(n, "state") for n in data["states"]]
    param_names = [_check_name(n, "parameter") for n in data["params"]]
    all_names = state_names + param_names + ["u"]
    if len(set(all_names)) != len(all_names):
        raise ParseError("state, parameter and input names must be distinct")
    if not state_names:
        raise ParseError("at least one state is required")

    symbols: dict[str, Var] = {"u": input_jet()}
    symbols.update({n: state(n) for n in state_names})
    symbols.update({n: param(n) for n in param_names})

    rates_in = data["rates"]
    if not isinstance(rates_in, dict) or set(rates_in) != set(state_names):
        raise ParseError("rates must give one expression per state")
    if not isinstance(data["output"], str):
        raise ParseError("output must be an expression string")
    rates = tuple(parse_expr(str(rates_in[n]), symbols) for n in state_names)
    output = parse_expr(data["output"], symbols)
    return DynSystem(states=tuple(state(n) for n in state_names),
                     rates=rates, output=output,
                     params=tuple(param(n) for n in sorted(param_names)))


def load_system(path: str) -> DynSystem:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(f"not valid JSON: {exc}") from exc
    return system_from_dict(data)


def rat_text(r: RatFunc) -> str:
    """Render a rational function so that parse_expr reads it back."""
    if r.den.is_const() and r.den.const_value() == 1:
        return poly_text(r.num)
    return f"({poly_text(r.num)})/({poly_text(r.den)})"


def system_to_dict(sys: DynSystem) -> dict:
    return {
        "states": [v.name for v in sys.states],
        "input": "u",
        "params": [v.name for v in sys.params],
        "rates": {v.name: rat_text(f)
                  for v, f in zip(sys.states, sys.rates)},
        "output": rat_text(sys.output),
    }


def system_text(sys: DynSystem) -> str:
    lines = [f"{v.name}' = {rat_text(f)}" for v, f in zip(sys.states,
                                                          sys.rates)]
    lines.append(f"y = {rat_text(sys.output)}")
    return "\n".join(lines)
