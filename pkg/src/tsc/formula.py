"""Strictly positive modal formulas with transfinite modalities.

The signature has the constant T, binary conjunction, and a family of
diamonds <n^a> indexed by a natural number base n and an ordinal exponent
a >= 1.  A zero exponent never survives construction: <n^0>f is f, so the
smart constructor diamond() collapses it.
"""

from __future__ import annotations

from dataclasses import dataclass

from tsc.ordinal import (
    Ordinal,
    ParseError,
    _skip_ws,
    parse_ordinal_prefix,
    print_ordinal,
)


class Formula:
    """Base class; instances are Top, Conj or Diamond."""

    def __str__(self) -> str:
        return print_formula(self)


@dataclass(frozen=True)
class Top(Formula):
    pass


@dataclass(frozen=True)
class Conj(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Diamond(Formula):
    base: int
    exponent: Ordinal
    body: Formula

    def __post_init__(self) -> None:
        if self.base < 0:
            raise ValueError("modality base must be a natural number")
        if self.exponent.is_zero:
            raise ValueError("zero-exponent diamonds collapse; use diamond()")


TOP = Top()


def diamond(base: int, exponent: Ordinal, body: Formula) -> Formula:
    """<base^exponent>body, collapsing a zero exponent to body itself."""
    return body if exponent.is_zero else Diamond(base, exponent, body)


def conjoin(parts: list[Formula]) -> Formula:
    """Left-associated conjunction of parts; T when empty."""
    if not parts:
        return TOP
    result = parts[0]
    for part in parts[1:]:
        result = Conj(result, part)
    return result


def n_mod(f: Formula) -> frozenset[int]:
    """The set of modality bases occurring in f."""
    if isinstance(f, Top):
        return frozenset()
    if isinstance(f, Conj):
        return n_mod(f.left) | n_mod(f.right)
    assert isinstance(f, Diamond)
    return frozenset({f.base}) | n_mod(f.body)


# -- parsing and printing ----------------------------------------------------
#
# formula := atom ("&" atom)*
# atom    := "T" | "(" formula ")" | "<" nat "^" exponent ">" atom
# exponent := ordinal | "(" ordinal ")"
#
# Diamonds bind tighter than "&"; "&" associates to the left.


def _parse_nat(text: str, i: int) -> tuple[int, int]:
    start = i
    while i < len(text) and text[i].isdigit():
        i += 1
    if start == i:
        raise ParseError("expected a modality base", start)
    return int(text[start:i]), i


def _parse_exponent(text: str, i: int) -> tuple[Ordinal, int]:
    i = _skip_ws(text, i)
    if i < len(text) and text[i] == "(":
        value, i = parse_ordinal_prefix(text, i + 1)
        i = _skip_ws(text, i)
        if i >= len(text) or text[i] != ")":
            raise ParseError("expected ')' after modality exponent", i)
        return value, i + 1
    return parse_ordinal_prefix(text, i)


def _parse_atom(text: str, i: int) -> tuple[Formula, int]:
    i = _skip_ws(text, i)
    if i >= len(text):
        raise ParseError("expected a formula", i)
    if text[i] == "T":
        return TOP, i + 1
    if text[i] == "(":
        value, i = _parse_formula(text, i + 1)
        i = _skip_ws(text, i)
        if i >= len(text) or text[i] != ")":
            raise ParseError("expected ')'", i)
        return value, i + 1
    if text[i] == "<":
        base, i = _parse_nat(text, _skip_ws(text, i + 1))
        i = _skip_ws(text, i)
        if i >= len(text) or text[i] != "^":
            raise ParseError("expected '^' in modality", i)
        exponent, i = _parse_exponent(text, i + 1)
        i = _skip_ws(text, i)
        if i >= len(text) or text[i] != ">":
            raise ParseError("expected '>' closing the modality", i)
        body, i = _parse_atom(text, i + 1)
        return diamond(base, exponent, body), i
    raise ParseError("expected 'T', '(' or '<'", i)


def _parse_formula(text: str, i: int) -> tuple[Formula, int]:
    value, i = _parse_atom(text, i)
    while True:
        j = _skip_ws(text, i)
        if j < len(text) and text[j] == "&":
            right, i = _parse_atom(text, j + 1)
            value = Conj(value, right)
        else:
            return value, i


def parse_formula(text: str) -> Formula:
    value, i = _parse_formula(text, 0)
    i = _skip_ws(text, i)
    if i != len(text):
        raise ParseError("unexpected trailing input", i)
    return value


def _print_exponent(a: Ordinal) -> str:
    # bare when unambiguous to the eye: a natural or a plain omega power
    if len(a.terms) == 1 and (a.terms[0][0].is_zero or a.terms[0][1] == 1):
        return print_ordinal(a)
    return f"({print_ordinal(a)})"


def _print_atom(f: Formula) -> str:
    if isinstance(f, Conj):
        return f"({print_formula(f)})"
    return print_formula(f)


def print_formula(f: Formula) -> str:
    if isinstance(f, Top):
        return "T"
    if isinstance(f, Conj):
        # left children stay bare ("&" associates left); right Conj children
        # need parentheses to survive a round trip
        return f"{print_formula(f.left)} & {_print_atom(f.right)}"
    assert isinstance(f, Diamond)
    return f"<{f.base}^{_print_exponent(f.exponent)}>{_print_atom(f.body)}"
