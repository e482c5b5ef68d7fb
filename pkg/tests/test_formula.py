"""Formula AST, parser, printer and base-set tests."""

from __future__ import annotations

import pytest
from hypothesis import given, settings

from conftest import formulas
from tsc.formula import (
    TOP,
    Conj,
    Diamond,
    Formula,
    conjoin,
    diamond,
    n_mod,
    parse_formula,
    print_formula,
)
from tsc.ordinal import OMEGA, ONE, ZERO, ParseError, from_int, mul, omega_power

TWO = from_int(2)


def all_diamonds(f: Formula):
    if isinstance(f, Conj):
        yield from all_diamonds(f.left)
        yield from all_diamonds(f.right)
    elif isinstance(f, Diamond):
        yield f
        yield from all_diamonds(f.body)


# -- construction ------------------------------------------------------------


def test_diamond_collapses_zero_exponent():
    body = Diamond(1, TWO, TOP)
    assert diamond(0, ZERO, body) is body
    assert diamond(0, ONE, body) == Diamond(0, ONE, body)


def test_raw_diamond_rejects_zero_exponent_and_negative_base():
    with pytest.raises(ValueError):
        Diamond(0, ZERO, TOP)
    with pytest.raises(ValueError):
        Diamond(-1, ONE, TOP)


def test_conjoin():
    assert conjoin([]) == TOP
    assert conjoin([TOP]) == TOP
    assert conjoin([TOP, TOP, TOP]) == Conj(Conj(TOP, TOP), TOP)


# -- n_mod ---------------------------------------------------------------------


def test_n_mod_examples():
    assert n_mod(TOP) == frozenset()
    assert n_mod(Diamond(0, OMEGA, Diamond(2, ONE, TOP))) == frozenset({0, 2})
    assert n_mod(Conj(Diamond(1, ONE, TOP), Diamond(1, TWO, TOP))) == frozenset({1})


@given(formulas())
def test_n_mod_collects_every_base(f):
    assert n_mod(f) == frozenset(d.base for d in all_diamonds(f))


# -- parsing ----------------------------------------------------------------------


def test_parse_examples():
    assert parse_formula("T") == TOP
    assert parse_formula("<0^w> T & <1^1> T") == Conj(Diamond(0, OMEGA, TOP), Diamond(1, ONE, TOP))
    assert parse_formula("<0^0> <1^2> T") == Diamond(1, TWO, TOP)


def test_parse_precedence_and_grouping():
    assert parse_formula("<0^1>T & T") == Conj(Diamond(0, ONE, TOP), TOP)
    assert parse_formula("<0^1>(T & T)") == Diamond(0, ONE, Conj(TOP, TOP))
    assert parse_formula("T & T & T") == Conj(Conj(TOP, TOP), TOP)
    assert parse_formula("T & (T & T)") == Conj(TOP, Conj(TOP, TOP))


def test_parse_exponent_forms():
    assert parse_formula("<0^(w*2)>T") == Diamond(0, mul(OMEGA, TWO), TOP)
    assert parse_formula("<0^w*2>T") == Diamond(0, mul(OMEGA, TWO), TOP)
    assert parse_formula("<0^(w + 1)>T") == Diamond(0, OMEGA + ONE, TOP)
    assert parse_formula("<12^w^2>T") == Diamond(12, omega_power(TWO), TOP)


@pytest.mark.parametrize(
    "text, position",
    [
        ("", 0),
        ("<0>T", 2),
        ("<^1>T", 1),
        ("T &", 3),
        ("(T", 2),
        ("<0^1 T", 5),
        ("T T", 2),
        ("<0^>T", 3),
    ],
)
def test_parse_errors_carry_positions(text, position):
    with pytest.raises(ParseError) as excinfo:
        parse_formula(text)
    assert excinfo.value.position == position


# -- printing ----------------------------------------------------------------------


def test_print_examples():
    assert print_formula(TOP) == "T"
    assert print_formula(Conj(Diamond(0, OMEGA, TOP), Diamond(1, ONE, TOP))) == "<0^w>T & <1^1>T"
    assert print_formula(Diamond(0, mul(OMEGA, TWO), TOP)) == "<0^(w*2)>T"
    assert print_formula(Diamond(0, omega_power(TWO), TOP)) == "<0^w^2>T"
    assert print_formula(Diamond(0, from_int(5), TOP)) == "<0^5>T"
    assert print_formula(Diamond(0, OMEGA + ONE, TOP)) == "<0^(w + 1)>T"
    assert print_formula(Diamond(0, ONE, Conj(TOP, TOP))) == "<0^1>(T & T)"
    assert print_formula(Conj(TOP, Conj(TOP, TOP))) == "T & (T & T)"


@settings(max_examples=250)
@given(formulas(depth=6, max_base=5))
def test_print_parse_round_trip(f):
    assert parse_formula(print_formula(f)) == f


@settings(max_examples=100)
@given(formulas(depth=6))
def test_no_zero_exponent_diamonds_survive_parsing(f):
    reparsed = parse_formula(print_formula(f))
    assert all(not d.exponent.is_zero for d in all_diamonds(reparsed))
