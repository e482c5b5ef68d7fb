"""Monomial normal forms and the sequent decision procedure.

A monomial normal form (MNF) is a base-increasing conjunction of monomials
<n^a>T whose exponents satisfy the Schmerl condition: between consecutive
bases n < n0 with exponents a, a0, the lower exponent has the form
e^{n0-n}(a0)*(2+d).  Every formula is equivalent to a unique MNF, and MNFs
correspond exactly to the worlds of the frame through the projection map.

Derivability is decided semantically: f entails g iff the minimal point of
f lies in the cone of the minimal point of g; the calculus is sound and
complete for this semantics, and on failure the minimal point of the left
side is itself a countermodel.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from tsc.formula import (
    TOP,
    Conj,
    Diamond,
    Formula,
    Top,
    _parse_formula,
    conjoin,
    print_formula,
)
from tsc.ordinal import (
    ZERO,
    Ordinal,
    ParseError,
    _skip_ws,
    compare,
    ell,
    from_int,
    hyper_e,
    mul,
    omega_power,
)
from tsc.semantics import Point, forces, in_cone, minimal_point, print_point


class NotRepresentable(ValueError):
    """Raised when a point admits no monomial normal form (defensive only)."""


@dataclass(frozen=True)
class Monomial:
    """A conjunct <base^exponent>T of a normal form."""

    base: int
    exponent: Ordinal

    def __post_init__(self) -> None:
        if self.base < 0:
            raise ValueError("monomial base must be a natural number")
        if self.exponent.is_zero:
            raise ValueError("zero-exponent monomials are T and are never stored")


def _schmerl_ok(lower: Monomial, upper: Monomial) -> bool:
    """Exponent condition between consecutive monomials.

    With p = e^{gap-1}(upper exponent), the lower exponent must be a nonzero
    multiple of w^p (equivalently ell >= p) that is at least w^p * 2.
    """
    p = hyper_e(upper.base - lower.base - 1, upper.exponent)
    if compare(ell(lower.exponent), p) < 0:
        return False
    return compare(lower.exponent, mul(omega_power(p), from_int(2))) >= 0


@dataclass(frozen=True)
class MonomialNormalForm:
    """Conjunction of monomials with strictly increasing bases; empty is T."""

    monomials: tuple[Monomial, ...] = ()

    def __post_init__(self) -> None:
        for a, b in zip(self.monomials, self.monomials[1:]):
            if a.base >= b.base:
                raise ValueError("monomial bases must strictly increase")
            if not _schmerl_ok(a, b):
                raise ValueError(
                    f"Schmerl condition fails between bases {a.base} and {b.base}"
                )

    def __str__(self) -> str:
        return print_formula(embed(self))


TOP_MNF = MonomialNormalForm(())


def embed(psi: MonomialNormalForm) -> Formula:
    """The normal form as a plain formula."""
    return conjoin([Diamond(m.base, m.exponent, TOP) for m in psi.monomials])


def projection(psi: MonomialNormalForm, m: int) -> Ordinal:
    """Coordinate m of the world describing psi.

    Explicit exponents at the monomial bases, e-filled gaps below the top
    base, zero everywhere above it.
    """
    if not psi.monomials or m > psi.monomials[-1].base:
        return ZERO
    by_base = {mono.base: mono.exponent for mono in psi.monomials}
    i = psi.monomials[-1].base
    value = by_base[i]
    while i > m:
        i -= 1
        value = by_base[i] if i in by_base else hyper_e(1, value)
    return value


def point_of_mnf(psi: MonomialNormalForm) -> Point:
    """The world whose cone is the extension of psi."""
    if not psi.monomials:
        return Point(())
    top = psi.monomials[-1].base
    return Point(tuple(projection(psi, i) for i in range(top + 1)))


def mnf_of_point(x: Point) -> MonomialNormalForm:
    """The unique normal form describing a valid finite-support world.

    A coordinate carries a monomial iff it is nonzero and not already implied
    by the gap rule, i.e. it is the last nonzero coordinate or differs from
    e of its successor.
    """
    monomials = []
    k = x.support
    for n in range(k):
        value = x.coords[n]
        if n == k - 1 or compare(value, hyper_e(1, x.coord(n + 1))) != 0:
            monomials.append(Monomial(n, value))
    try:
        psi = MonomialNormalForm(tuple(monomials))
    except ValueError as exc:  # pragma: no cover - impossible for valid points
        raise NotRepresentable(f"no normal form for {print_point(x)}") from exc
    if point_of_mnf(psi) != x:  # pragma: no cover - defensive re-check
        raise NotRepresentable(f"projection mismatch for {print_point(x)}")
    return psi


def normalize(f: Formula) -> MonomialNormalForm:
    """The unique MNF equivalent to f."""
    return mnf_of_point(minimal_point(f))


def is_mnf(f: Formula) -> bool:
    """Syntactic normal-form check, flattening the conjunction tree in order."""
    if isinstance(f, Top):
        return True
    parts: list[Formula] = []
    stack = [f]
    while stack:
        g = stack.pop()
        if isinstance(g, Conj):
            stack.append(g.right)
            stack.append(g.left)
        else:
            parts.append(g)
    if not all(isinstance(g, Diamond) and isinstance(g.body, Top) for g in parts):
        return False
    try:
        MonomialNormalForm(tuple(Monomial(g.base, g.exponent) for g in parts))
    except ValueError:
        return False
    return True


# -- sequents -----------------------------------------------------------------


@dataclass(frozen=True)
class Sequent:
    lhs: Formula
    rhs: Formula

    def __str__(self) -> str:
        return print_sequent(self)


@dataclass(frozen=True)
class Verdict:
    derivable: bool
    countermodel: Optional[Point] = None

    def __post_init__(self) -> None:
        if self.derivable == (self.countermodel is not None):
            raise ValueError("countermodel present iff not derivable")

    def __str__(self) -> str:
        return format_verdict(self)


def derives(s: Sequent) -> Verdict:
    """Decide lhs |- rhs; on failure the lhs minimal point refutes it."""
    left = minimal_point(s.lhs)
    right = minimal_point(s.rhs)
    if in_cone(left, right):
        return Verdict(True)
    return Verdict(False, left)


def entails(f: Formula, g: Formula) -> bool:
    return derives(Sequent(f, g)).derivable


def equiv(f: Formula, g: Formula) -> bool:
    """Interderivability; holds exactly when the minimal points coincide."""
    return minimal_point(f) == minimal_point(g)


def parse_sequent(text: str) -> Sequent:
    lhs, i = _parse_formula(text, 0)
    i = _skip_ws(text, i)
    if not text.startswith("|-", i):
        raise ParseError("expected '|-'", i)
    rhs, i = _parse_formula(text, i + 2)
    i = _skip_ws(text, i)
    if i != len(text):
        raise ParseError("unexpected trailing input", i)
    return Sequent(lhs, rhs)


def print_sequent(s: Sequent) -> str:
    return f"{print_formula(s.lhs)} |- {print_formula(s.rhs)}"


def format_verdict(v: Verdict) -> str:
    """Single-line machine form."""
    if v.derivable:
        return "derivable=true"
    return f"derivable=false; countermodel={print_point(v.countermodel)}"


def check_countermodel(v: Verdict, s: Sequent) -> bool:
    """Contract of a failing verdict: the witness forces lhs but not rhs."""
    if v.derivable:
        return v.countermodel is None
    return forces(v.countermodel, s.lhs) and not forces(v.countermodel, s.rhs)
