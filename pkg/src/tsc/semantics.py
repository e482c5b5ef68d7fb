"""Worlds and relations of the universal frame, forcing, and minimal points.

A world is a finite sequence of ordinals x = <x_0, ..., x_k> subject to
x_{i+1} <= ell(x_i); coordinates beyond the stored length are 0.  The
accessibility relations R_n and their transfinite iterates R_n^a are
implemented through the closed-form coordinatewise characterization

    x R_n^{1+a'} y  iff  x_n >= y_n + (1 + e(y_{n+1}))*(1+a')
                         and x_m > y_m for m < n and x_m >= y_m for m > n,

never by the recursive definition, which quantifies over all smaller
exponents and is not directly computable.

Every strictly positive formula denotes an upward-closed cone: the set of
points forcing it equals the cone above a unique minimal point, computed
here by structural recursion; forcing reduces to a coordinatewise bound.
"""

from __future__ import annotations

from dataclasses import dataclass

from tsc.formula import Conj, Diamond, Formula, Top
from tsc.ordinal import (
    ONE,
    ZERO,
    Ordinal,
    ParseError,
    _skip_ws,
    add,
    ceil_with_log_at_least,
    compare,
    ell,
    hyper_e,
    mul,
    parse_ordinal_prefix,
    print_ordinal,
    split_one_plus,
)


class InvalidLSequence(ValueError):
    """Raised when some coordinate exceeds the logarithm of its predecessor."""

    def __init__(self, index: int) -> None:
        super().__init__(f"coordinate {index + 1} exceeds ell(coordinate {index})")
        self.index = index


@dataclass(frozen=True)
class Point:
    """A world: trimmed tuple of coordinates, virtually extended by zeros."""

    coords: tuple[Ordinal, ...] = ()

    def __post_init__(self) -> None:
        if self.coords and self.coords[-1].is_zero:
            raise ValueError("points are stored trimmed; use make_point")
        for i in range(len(self.coords) - 1):
            if compare(self.coords[i + 1], ell(self.coords[i])) > 0:
                raise InvalidLSequence(i)

    def coord(self, i: int) -> Ordinal:
        return self.coords[i] if i < len(self.coords) else ZERO

    @property
    def support(self) -> int:
        return len(self.coords)

    def __str__(self) -> str:
        return print_point(self)

    def __repr__(self) -> str:
        return f"Point({print_point(self)!r})"


ORIGIN = Point(())


def make_point(coords) -> Point:
    """Trim trailing zeros and validate the logarithm chain."""
    coords = tuple(coords)
    k = len(coords)
    while k and coords[k - 1].is_zero:
        k -= 1
    return Point(coords[:k])


# -- relations ---------------------------------------------------------------


def r_n(x: Point, y: Point, n: int) -> bool:
    """Single step: strict drop at every coordinate up to n, weak above."""
    width = max(x.support, y.support, n + 1)
    for m in range(width):
        c = compare(x.coord(m), y.coord(m))
        if m <= n:
            if c <= 0:
                return False
        elif c < 0:
            return False
    return True


def r_minus_one(x: Point, y: Point) -> bool:
    """Degenerate base -1 relation: weak domination away from coordinate 0."""
    width = max(x.support, y.support)
    return all(compare(x.coord(i), y.coord(i)) >= 0 for i in range(1, width))


def r_n_alpha(x: Point, y: Point, n: int, a: Ordinal) -> bool:
    """Transfinite iterate x R_n^a y via the closed form."""
    if a.is_zero:
        return x == y
    split_one_plus(a)  # assert a is expressible as 1 + a'
    unit = add(ONE, hyper_e(1, y.coord(n + 1)))
    if compare(x.coord(n), add(y.coord(n), mul(unit, a))) < 0:
        return False
    width = max(x.support, y.support, n + 1)
    for m in range(width):
        if m == n:
            continue
        c = compare(x.coord(m), y.coord(m))
        if m < n:
            if c <= 0:
                return False
        elif c < 0:
            return False
    return True


def in_cone(x: Point, base: Point) -> bool:
    """Coordinatewise domination: x lies in the cone above base."""
    width = max(x.support, base.support)
    return all(compare(x.coord(i), base.coord(i)) >= 0 for i in range(width))


# -- minimal points and forcing ------------------------------------------------


def _repair_below(coords: list[Ordinal], n: int, *, strict: bool = False) -> None:
    """Right-to-left ceiling repair of coordinates below index n.

    Strict mode raises each coordinate above its current value, not merely to
    it: a point reaching the cone of a diamond's body must take a step whose
    drop is strict at every coordinate below the base, so equality there
    never suffices.
    """
    for i in range(n - 1, -1, -1):
        floor = add(coords[i], ONE) if strict else coords[i]
        coords[i] = ceil_with_log_at_least(floor, coords[i + 1])


def minimal_point(f: Formula) -> Point:
    """The coordinatewise-least point whose cone is the extension of f."""
    if isinstance(f, Top):
        return ORIGIN
    if isinstance(f, Conj):
        y = minimal_point(f.left)
        z = minimal_point(f.right)
        width = max(y.support, z.support)
        maxima = [max(y.coord(i), z.coord(i)) for i in range(width)]
        while maxima and maxima[-1].is_zero:
            maxima.pop()
        if not maxima:
            return ORIGIN
        _repair_below(maxima, len(maxima) - 1)
        return make_point(maxima)
    assert isinstance(f, Diamond)
    y = minimal_point(f.body)
    n = f.base
    unit = add(ONE, hyper_e(1, y.coord(n + 1)))
    coords = [y.coord(i) for i in range(max(y.support, n + 1))]
    coords[n] = add(y.coord(n), mul(unit, f.exponent))
    _repair_below(coords, n, strict=True)
    return make_point(coords)


def forces(x: Point, f: Formula) -> bool:
    """Truth at a world; extensions are cones, so this is a coordinate test."""
    return in_cone(x, minimal_point(f))


# -- parsing and printing ---------------------------------------------------------
#
# point := "[" "]" | "[" ordinal ("," ordinal)* "]"        trailing zeros optional


def parse_point_prefix(text: str, i: int = 0) -> tuple[Point, int]:
    i = _skip_ws(text, i)
    if i >= len(text) or text[i] != "[":
        raise ParseError("expected '['", i)
    i = _skip_ws(text, i + 1)
    coords: list[Ordinal] = []
    if i < len(text) and text[i] == "]":
        return ORIGIN, i + 1
    while True:
        value, i = parse_ordinal_prefix(text, i)
        coords.append(value)
        i = _skip_ws(text, i)
        if i < len(text) and text[i] == ",":
            i = _skip_ws(text, i + 1)
            continue
        if i < len(text) and text[i] == "]":
            return make_point(coords), i + 1
        raise ParseError("expected ',' or ']'", i)


def parse_point(text: str) -> Point:
    value, i = parse_point_prefix(text, 0)
    i = _skip_ws(text, i)
    if i != len(text):
        raise ParseError("unexpected trailing input", i)
    return value


def print_point(x: Point) -> str:
    return "[" + ", ".join(print_ordinal(c) for c in x.coords) + "]"
