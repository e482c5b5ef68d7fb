"""Independent brute-force semantics on finite frame fragments.

This module validates the closed-form relation test, forcing, minimal points
and the decision procedure from first principles: single steps are the raw
coordinatewise definition, finite iterates are exact-length chain existence
(computed as boolean matrix powers), and the two supported limit shapes are
reduced to chain facts.

A fragment of worlds P cannot certify a limit relation by chains alone: the
limit demands chains of every finite length, while any finite point set only
exhibits finitely many.  The reduction used here rests on two elementary
counting facts about Cantor normal forms, not on the closed-form relations
under test:

* supply bound: if x R_n^k y holds for k steps, repeated application of the
  single-step definition consumes, at coordinate n, k copies of a fixed
  positive amount; whether x_n has "omega-many or only c-many" copies to give
  is read off a single CNF coefficient of x_n, and c never exceeds the
  largest coefficient occurring in x_n.  Hence a point whose coefficients are
  all below t either admits chains of every length to y or stops short of
  length t.
* scaffolding: between any target y and any source far enough above it, the
  canonical ladder (advance coordinate n by s units, rebuild lower
  coordinates right to left as x_m = y_m + e(x_{m+1})) provides genuine
  intermediate worlds for chains of any requested finite length.

So with t = 2 + (largest CNF coefficient in the fragment), "every finite
length" and "length t" coincide for fragment sources, and the t-step table
over the ladder-enriched scaffold is exact at exponent omega.  Exponents
omega+j and omega*2 decompose through a midpoint (j steps then omega, or
omega twice); midpoints are restricted to scaffold worlds whose coefficients
stay below t, which keeps their omega-rows exact, while the canonical
omega-ladder midpoints needed for completeness always satisfy the cap.

Limit exponents beyond omega*2 are out of scope and raise
UnsupportedExponent, as do finite parts exceeding the chain horizon.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from tsc.formula import Conj, Diamond, Formula, Top
from tsc.ordinal import (
    OMEGA,
    ONE,
    ZERO,
    Ordinal,
    _sort_key,
    add,
    compare,
    ell,
    from_int,
    hyper_e,
    mul,
)
from tsc.semantics import Point, make_point


class UnsupportedExponent(ValueError):
    """Raised for exponents the fragment oracle cannot decide exactly."""


@dataclass(frozen=True)
class FragmentSpec:
    """A finite slice of the frame: coordinate values, support, exponents."""

    coordinate_universe: tuple[Ordinal, ...]
    max_support: int
    exponent_universe: tuple[Ordinal, ...]

    def __post_init__(self) -> None:
        if ZERO not in self.coordinate_universe:
            raise ValueError("coordinate universe must contain 0")
        if self.max_support < 0:
            raise ValueError("max_support must be >= 0")


def enumerate_points(spec: FragmentSpec) -> list[Point]:
    """All valid points with coordinates in the universe, support bounded."""
    nonzero = list(dict.fromkeys(v for v in spec.coordinate_universe if not v.is_zero))
    out = [make_point(())]
    frontier: list[tuple[Ordinal, ...]] = [()]
    for _ in range(spec.max_support):
        extended = []
        for prefix in frontier:
            for v in nonzero:
                if not prefix or compare(v, ell(prefix[-1])) <= 0:
                    extended.append(prefix + (v,))
        frontier = extended
        out.extend(make_point(t) for t in frontier)
    return out


def _point_key(x: Point):
    return (x.support, tuple(_sort_key(c) for c in x.coords))


def _digit_cap(x: Point) -> int:
    return max((c for v in x.coords for _, c in v.terms), default=0)


def _ladder(y: Point, n: int, stage: Ordinal) -> Point:
    """Canonical world `stage` steps of R_n above y (the chain scaffold)."""
    unit = add(ONE, hyper_e(1, y.coord(n + 1)))
    coords = [y.coord(i) for i in range(max(y.support, n + 1))]
    coords[n] = add(y.coord(n), mul(unit, stage))
    for m in range(n - 1, -1, -1):
        coords[m] = add(y.coord(m), hyper_e(1, coords[m + 1]))
    return make_point(coords)


def _single_step(x: Point, y: Point, n: int) -> bool:
    # Def-10 verbatim: strict drop at every m <= n, weak drop above.
    width = max(x.support, y.support, n + 1)
    for m in range(width):
        c = compare(x.coord(m), y.coord(m))
        if m <= n:
            if c <= 0:
                return False
        elif c < 0:
            return False
    return True


class _BaseTable:
    """Chain tables at one base over the ladder-enriched scaffold."""

    def __init__(self, points: list[Point], n: int, horizon: int, cap: int) -> None:
        self.n = n
        self.horizon = horizon
        self.cap = cap
        omega_rungs = [_ladder(y, n, OMEGA) for y in points]
        anchors = _dedupe(points + omega_rungs)
        scaffold = list(anchors)
        for y in anchors:
            for s in range(1, horizon + 1):
                scaffold.append(_ladder(y, n, from_int(s)))
        self.worlds = _dedupe(scaffold)
        self.index = {x: i for i, x in enumerate(self.worlds)}
        size = len(self.worlds)
        step = np.zeros((size, size), dtype=np.float32)
        for i, x in enumerate(self.worlds):
            for j, y in enumerate(self.worlds):
                if i != j and _single_step(x, y, n):
                    step[i, j] = 1.0
        self.powers = [np.eye(size, dtype=np.float32), step]
        for _ in range(horizon - 1):
            self.powers.append(((self.powers[-1] @ step) > 0.5).astype(np.float32))
        self.low_digit = np.array([_digit_cap(x) < cap for x in self.worlds])

    def chains(self, length: int) -> np.ndarray:
        if length >= len(self.powers):
            raise UnsupportedExponent(
                f"finite stage {length} exceeds the chain horizon {self.horizon}"
            )
        return self.powers[length]


def _dedupe(points: list[Point]) -> list[Point]:
    return sorted(set(points), key=_point_key)


def _classify(a: Ordinal) -> tuple[int, int]:
    """(limit multiplicity c, finite part k) for a = w*c + k with c <= 2."""
    c, k = 0, 0
    for exponent, coefficient in a.terms:
        if exponent == ONE:
            c = coefficient
        elif exponent == ZERO:
            k = coefficient
        else:
            raise UnsupportedExponent(f"exponent {a} is beyond the w*2 stages")
    if c > 2 or (c == 2 and k > 0):
        raise UnsupportedExponent(f"exponent {a} is beyond the w*2 stages")
    return c, k


class FragmentOracle:
    """Memoizing engine behind the oracle_* functions."""

    def __init__(self, spec: FragmentSpec) -> None:
        self.spec = spec
        self.points = enumerate_points(spec)
        finite_parts = [1]
        for a in spec.exponent_universe:
            c, k = _classify(a)
            finite_parts.append(k)
        self.tau = max(_digit_cap(x) for x in self.points) + 2
        self.horizon = max(self.tau, max(finite_parts))
        self._tables: dict[int, _BaseTable] = {}
        self._relations: dict[tuple[int, Ordinal], set[tuple[Point, Point]]] = {}
        self._forcing: dict[tuple[Point, Formula], bool] = {}

    def table(self, n: int) -> _BaseTable:
        if n not in self._tables:
            self._tables[n] = _BaseTable(self.points, n, self.horizon, self.tau)
        return self._tables[n]

    def relation(self, n: int, a: Ordinal) -> set[tuple[Point, Point]]:
        key = (n, a)
        if key not in self._relations:
            self._relations[key] = self._compute_relation(n, a)
        return self._relations[key]

    def _compute_relation(self, n: int, a: Ordinal) -> set[tuple[Point, Point]]:
        limit_count, finite_part = _classify(a)
        if limit_count == 0 and finite_part == 0:
            return {(x, x) for x in self.points}
        table = self.table(n)
        rows = np.array([table.index[x] for x in self.points])
        if limit_count == 0:
            grid = table.chains(finite_part)[np.ix_(rows, rows)]
        else:
            omega = table.chains(self.tau)
            mid = table.low_digit
            first = omega if limit_count == 2 else table.chains(finite_part)
            composed = (first[:, mid] @ omega[mid, :]) > 0.5
            grid = composed[np.ix_(rows, rows)]
        out = set()
        for i, x in enumerate(self.points):
            for j, y in enumerate(self.points):
                if grid[i, j]:
                    out.add((x, y))
        return out

    def forces(self, x: Point, f: Formula) -> bool:
        key = (x, f)
        if key not in self._forcing:
            self._forcing[key] = self._compute_forces(x, f)
        return self._forcing[key]

    def _compute_forces(self, x: Point, f: Formula) -> bool:
        if isinstance(f, Top):
            return True
        if isinstance(f, Conj):
            return self.forces(x, f.left) and self.forces(x, f.right)
        assert isinstance(f, Diamond)
        rel = self.relation(f.base, f.exponent)
        return any((x, y) in rel and self.forces(y, f.body) for y in self.points)

    def entails(self, f: Formula, g: Formula) -> bool:
        return all(self.forces(x, g) for x in self.points if self.forces(x, f))


_ORACLES: dict[FragmentSpec, FragmentOracle] = {}


def _oracle(spec: FragmentSpec) -> FragmentOracle:
    if spec not in _ORACLES:
        _ORACLES[spec] = FragmentOracle(spec)
    return _ORACLES[spec]


def oracle_r_alpha(spec: FragmentSpec, n: int, a: Ordinal) -> set[tuple[Point, Point]]:
    """The relation R_n^a over the fragment, from chains and definitions only."""
    return _oracle(spec).relation(n, a)


def oracle_forces(spec: FragmentSpec, x: Point, f: Formula) -> bool:
    """Forcing by the raw definition, witnesses searched over the fragment."""
    return _oracle(spec).forces(x, f)


def oracle_entails(spec: FragmentSpec, f: Formula, g: Formula) -> bool:
    """Fragment-relative semantic entailment."""
    return _oracle(spec).entails(f, g)
