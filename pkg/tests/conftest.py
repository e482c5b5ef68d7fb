"""Shared hypothesis strategies for randomized tests."""

from __future__ import annotations

from functools import cmp_to_key

from hypothesis import strategies as st

from tsc.formula import TOP, Conj, Diamond
from tsc.ordinal import Ordinal, compare, from_int


@st.composite
def ordinals(draw, depth: int = 2, max_terms: int = 3, max_coefficient: int = 3):
    """CNF ordinals whose exponent trees have height at most depth."""
    if depth == 0:
        return from_int(draw(st.integers(0, max_coefficient)))
    pairs = draw(
        st.lists(
            st.tuples(
                ordinals(depth=depth - 1, max_terms=max_terms, max_coefficient=max_coefficient),
                st.integers(1, max_coefficient),
            ),
            max_size=max_terms,
        )
    )
    by_exponent: dict[Ordinal, int] = {}
    for exponent, coefficient in pairs:
        by_exponent[exponent] = coefficient
    ordered = sorted(by_exponent.items(), key=cmp_to_key(lambda s, t: compare(s[0], t[0])), reverse=True)
    return Ordinal(tuple(ordered))


@st.composite
def formulas(draw, depth: int = 4, max_base: int = 5):
    """Random formula ASTs; exponents stay below w^w."""
    choice = draw(st.integers(0, 2)) if depth > 0 else 0
    if choice == 0:
        return TOP
    if choice == 1:
        return Conj(
            draw(formulas(depth=depth - 1, max_base=max_base)),
            draw(formulas(depth=depth - 1, max_base=max_base)),
        )
    exponent = draw(ordinals(depth=2).filter(lambda a: not a.is_zero))
    return Diamond(draw(st.integers(0, max_base)), exponent, draw(formulas(depth=depth - 1, max_base=max_base)))
