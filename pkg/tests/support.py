"""Shared test helpers: fixture loading and seeded random expressions.

Random builders take an explicit random.Random so every suite run sees the
same inputs; shrinking and exploration belong to the hypothesis tests.
"""

from __future__ import annotations

import json
import random
from fractions import Fraction
from pathlib import Path

from daerealize import DynSystem, load_system, parse_dae, system_from_dict
from daerealize.mpoly import MPoly, poly_sum
from daerealize.ratfunc import RatFunc
from daerealize.variables import Var

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def fixture_path(name: str, fname: str) -> Path:
    return FIXTURES / name / fname


def fixture_system(name: str) -> DynSystem:
    return load_system(str(fixture_path(name, "system.json")))


def fixture_dae(name: str):
    """Parsed (equation, params) pair from the fixture's dae.txt."""
    return parse_dae(fixture_path(name, "dae.txt").read_text())


def fixture_expected(name: str) -> dict:
    return json.loads(fixture_path(name, "expected.json").read_text())


def sys_1d(rate: str, output: str) -> DynSystem:
    """One-state system x' = rate, y = output, both in x and u."""
    return system_from_dict({
        "states": ["x"],
        "input": "u",
        "params": [],
        "rates": {"x": rate},
        "output": output,
    })


def rand_fraction(rng: random.Random, height: int) -> Fraction:
    num = rng.randint(-height, height)
    den = rng.randint(1, height)
    return Fraction(num, den)


def rand_poly(rng: random.Random, pool: list[Var], max_terms: int = 4,
              max_deg: int = 2, height: int = 5,
              nonzero: bool = False) -> MPoly:
    """Sparse random polynomial in the pool variables."""
    terms = []
    for _ in range(rng.randint(0 if not nonzero else 1, max_terms)):
        mono = MPoly.const(rand_fraction(rng, height))
        for v in pool:
            e = rng.randint(0, max_deg)
            if e:
                mono = mono * MPoly.var(v, e)
        terms.append(mono)
    p = poly_sum(terms)
    if nonzero and p.is_zero():
        return MPoly.const(Fraction(1))
    return p


def rand_ratfunc(rng: random.Random, pool: list[Var], **kw) -> RatFunc:
    num = rand_poly(rng, pool, **kw)
    den = rand_poly(rng, pool, **dict(kw, nonzero=True))
    return RatFunc(num, den)
