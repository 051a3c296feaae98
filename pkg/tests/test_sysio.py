"""System file format: schema validation and round-tripping."""

import json

import pytest

from daerealize import load_system, system_from_dict, system_text, system_to_dict
from daerealize.errors import ParseError
from daerealize.ratfunc import RatFunc
from daerealize.variables import input_jet, state

from support import fixture_path

GOOD = {
    "states": ["x1", "x2"],
    "input": "u",
    "params": ["k"],
    "rates": {"x1": "x2", "x2": "k*x1 + u"},
    "output": "x1",
}


def test_round_trip_through_dict():
    sys = system_from_dict(GOOD)
    again = system_from_dict(system_to_dict(sys))
    assert again == sys


def test_structure_of_loaded_system():
    sys = system_from_dict(GOOD)
    assert sys.states == (state("x1"), state("x2"))
    assert sys.rates[0] == RatFunc.var(state("x2"))
    assert sys.output == RatFunc.var(state("x1"))
    assert [p.name for p in sys.params] == ["k"]


def test_load_system_reads_fixture_files():
    sys = load_system(str(fixture_path("sontag_wang", "system.json")))
    assert len(sys.states) == 2
    assert sys.output == RatFunc.var(state("x2"))


def test_rational_rates_survive_the_round_trip():
    d = dict(GOOD, rates={"x1": "x2/(x1 + 1)", "x2": "u^2"})
    sys = system_from_dict(d)
    assert system_from_dict(system_to_dict(sys)) == sys


def test_system_text_layout():
    text = system_text(system_from_dict(GOOD))
    lines = text.splitlines()
    assert lines[0].startswith("x1' = ")
    assert lines[-1].startswith("y = ")


def missing(key):
    d = dict(GOOD)
    del d[key]
    return d


@pytest.mark.parametrize("key", sorted(GOOD))
def test_missing_keys_rejected(key):
    with pytest.raises(ParseError):
        system_from_dict(missing(key))


def test_extra_keys_rejected():
    with pytest.raises(ParseError):
        system_from_dict(dict(GOOD, comment="hi"))


def test_input_name_is_fixed():
    with pytest.raises(ParseError):
        system_from_dict(dict(GOOD, input="v"))


def test_rates_must_cover_exactly_the_states():
    with pytest.raises(ParseError):
        system_from_dict(dict(GOOD, rates={"x1": "x2"}))
    with pytest.raises(ParseError):
        system_from_dict(dict(GOOD,
                              rates=dict(GOOD["rates"], x3="0")))


def test_name_collisions_rejected():
    with pytest.raises(ParseError):
        system_from_dict(dict(GOOD, params=["x1"]))
    with pytest.raises(ParseError):
        system_from_dict(dict(GOOD, states=["x1", "x1"]))


def test_at_least_one_state():
    with pytest.raises(ParseError):
        system_from_dict(dict(GOOD, states=[], rates={}))


def test_undeclared_names_in_rates_rejected():
    with pytest.raises(ParseError):
        system_from_dict(dict(GOOD, rates={"x1": "x2", "x2": "w"}))


def test_input_derivatives_not_allowed_in_rates():
    with pytest.raises(ParseError):
        system_from_dict(dict(GOOD, rates={"x1": "x2", "x2": "u'"}))


def test_load_system_bad_json(tmp_path):
    p = tmp_path / "sys.json"
    p.write_text("{not json")
    with pytest.raises(ParseError):
        load_system(str(p))


def test_output_may_involve_the_input():
    d = dict(GOOD, output="x1*u")
    sys = system_from_dict(d)
    assert input_jet(0) in sys.output.variables()


def test_system_text_of_fixture_is_stable():
    sys = load_system(str(fixture_path("sontag_wang", "system.json")))
    expected = "x1' = x2^2\nx2' = u*x1\ny = x2"
    assert system_text(sys) == expected


def test_to_dict_serializes_back_to_json(tmp_path):
    sys = system_from_dict(GOOD)
    p = tmp_path / "sys.json"
    p.write_text(json.dumps(system_to_dict(sys)))
    assert load_system(str(p)) == sys
