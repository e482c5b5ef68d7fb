"""Ordinal arithmetic below epsilon_0 in Cantor normal form.

An ordinal is represented as a finite sum  w^e1*c1 + ... + w^ek*ck  with
strictly decreasing exponents (themselves ordinals) and positive integer
coefficients.  The representation is canonical and enforced at construction,
so structural equality coincides with ordinal equality.

The module also provides the two maps the frame semantics is built on:
the hyper-exponential e (iterated base-omega exponentiation shifted so that
e(0) = 0) and the end-logarithm ell (exponent of the last CNF term).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterator


class ParseError(ValueError):
    """Raised on malformed ordinal, formula, point or sequent text."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True)
class Ordinal:
    """A Cantor normal form ordinal below epsilon_0.

    terms is a tuple of (exponent, coefficient) pairs with the exponents
    strictly decreasing and every coefficient >= 1.  The empty tuple is 0.
    """

    terms: tuple[tuple["Ordinal", int], ...] = ()

    def __post_init__(self) -> None:
        for exponent, coefficient in self.terms:
            if not isinstance(exponent, Ordinal) or coefficient < 1:
                raise ValueError(f"malformed CNF term ({exponent}, {coefficient})")
        for (e1, _), (e2, _) in zip(self.terms, self.terms[1:]):
            if compare(e1, e2) <= 0:
                raise ValueError("CNF exponents must strictly decrease")

    # -- structure ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_finite(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.terms[0][0].is_zero)

    @property
    def finite_value(self) -> int:
        """The integer value of a finite ordinal."""
        if self.is_zero:
            return 0
        if not self.is_finite:
            raise ValueError(f"{self} is not finite")
        return self.terms[0][1]

    def __add__(self, other: "Ordinal") -> "Ordinal":
        return add(self, other)

    def __mul__(self, other: "Ordinal") -> "Ordinal":
        return mul(self, other)

    def __lt__(self, other: "Ordinal") -> bool:
        return compare(self, other) < 0

    def __le__(self, other: "Ordinal") -> bool:
        return compare(self, other) <= 0

    def __gt__(self, other: "Ordinal") -> bool:
        return compare(self, other) > 0

    def __ge__(self, other: "Ordinal") -> bool:
        return compare(self, other) >= 0

    def __str__(self) -> str:
        return print_ordinal(self)

    def __repr__(self) -> str:
        return f"Ordinal({print_ordinal(self)!r})"


ZERO = Ordinal()
ONE = Ordinal(((ZERO, 1),))
OMEGA = Ordinal(((ONE, 1),))


def from_int(n: int) -> Ordinal:
    if n < 0:
        raise ValueError("ordinals are non-negative")
    return ZERO if n == 0 else Ordinal(((ZERO, n),))


def omega_power(exponent: Ordinal) -> Ordinal:
    """w^exponent as a single-term CNF."""
    return Ordinal(((exponent, 1),))


def compare(a: Ordinal, b: Ordinal) -> int:
    """Total order on CNF ordinals: -1, 0 or 1."""
    for (ea, ca), (eb, cb) in zip(a.terms, b.terms):
        c = compare(ea, eb)
        if c != 0:
            return c
        if ca != cb:
            return -1 if ca < cb else 1
    if len(a.terms) == len(b.terms):
        return 0
    return -1 if len(a.terms) < len(b.terms) else 1


def add(a: Ordinal, b: Ordinal) -> Ordinal:
    """Ordinal addition; terms of a below the head of b are absorbed."""
    if b.is_zero:
        return a
    head = b.terms[0][0]
    kept = [t for t in a.terms if compare(t[0], head) > 0]
    rest = list(b.terms)
    boundary = next((t for t in a.terms if compare(t[0], head) == 0), None)
    if boundary is not None:
        rest[0] = (head, boundary[1] + rest[0][1])
    return Ordinal(tuple(kept + rest))


def mul(a: Ordinal, b: Ordinal) -> Ordinal:
    """Ordinal multiplication, distributing a over the CNF of b."""
    if a.is_zero or b.is_zero:
        return ZERO
    a_head_exp, a_head_coeff = a.terms[0]
    pieces: list[Ordinal] = []
    for exponent, coefficient in b.terms:
        if exponent.is_zero:
            # a * finite: scale the head coefficient, keep the tail of a.
            scaled = (a_head_exp, a_head_coeff * coefficient)
            pieces.append(Ordinal((scaled,) + a.terms[1:]))
        else:
            pieces.append(Ordinal(((add(a_head_exp, exponent), coefficient),)))
    return reduce(add, pieces)


def is_limit(a: Ordinal) -> bool:
    """Non-zero with no finite part."""
    return bool(a.terms) and not a.terms[-1][0].is_zero


def is_successor(a: Ordinal) -> bool:
    return bool(a.terms) and a.terms[-1][0].is_zero


def ell(a: Ordinal) -> Ordinal:
    """End-logarithm: the exponent of the last CNF term, with ell(0) = 0.

    Characterized by ell(beta + w^gamma) = gamma.
    """
    return a.terms[-1][0] if a.terms else ZERO


def hyper_e(steps: int, a: Ordinal) -> Ordinal:
    """Iterated hyper-exponential e^steps(a), where e(a) = -1 + w^a.

    Concretely e(0) = 0 and e(a) = w^a for a > 0; e^0 is the identity.
    """
    if steps < 0:
        raise ValueError("iteration count must be >= 0")
    for _ in range(steps):
        a = ZERO if a.is_zero else omega_power(a)
    return a


def split_one_plus(a: Ordinal) -> Ordinal:
    """The unique x with 1 + x = a; errors on a = 0.

    For finite a this is a - 1; infinite ordinals absorb the 1.
    """
    if a.is_zero:
        raise ValueError("0 cannot be written as 1 + x")
    if a.is_finite:
        return from_int(a.finite_value - 1)
    return a


def ceil_with_log_at_least(b: Ordinal, g: Ordinal) -> Ordinal:
    """The least d >= b with ell(d) >= g.

    When ell(b) already clears g this is b itself; otherwise the terms of b
    with exponents >= g survive and w^g is appended.
    """
    if compare(ell(b), g) >= 0:
        return b
    prefix = Ordinal(tuple(t for t in b.terms if compare(t[0], g) >= 0))
    return add(prefix, omega_power(g))


# -- parsing and printing --------------------------------------------------
#
# ordinal := term ("+" term)*  |  "0"
# term    := "w" ("^" atom)? ("*" nat)?  |  nat        (nat >= 1 in terms)
# atom    := nat  |  "w"  |  "(" ordinal ")"
#
# The printer emits the greatest term first and omits ^1, *1 and w^0.


def _skip_ws(text: str, i: int) -> int:
    while i < len(text) and text[i].isspace():
        i += 1
    return i


def _parse_nat(text: str, i: int) -> tuple[int, int]:
    start = i
    while i < len(text) and text[i].isdigit():
        i += 1
    if start == i:
        raise ParseError("expected a natural number", start)
    return int(text[start:i]), i


def _parse_atom(text: str, i: int) -> tuple[Ordinal, int]:
    i = _skip_ws(text, i)
    if i >= len(text):
        raise ParseError("expected an exponent", i)
    if text[i] == "(":
        value, i = parse_ordinal_prefix(text, i + 1)
        i = _skip_ws(text, i)
        if i >= len(text) or text[i] != ")":
            raise ParseError("expected ')'", i)
        return value, i + 1
    if text[i] == "w":
        return OMEGA, i + 1
    value, i = _parse_nat(text, i)
    return from_int(value), i


def _parse_term(text: str, i: int) -> tuple[Ordinal, int]:
    i = _skip_ws(text, i)
    if i < len(text) and text[i] == "w":
        i += 1
        exponent = ONE
        j = _skip_ws(text, i)
        if j < len(text) and text[j] == "^":
            exponent, i = _parse_atom(text, j + 1)
        coefficient = 1
        j = _skip_ws(text, i)
        if j < len(text) and text[j] == "*":
            coefficient, i = _parse_nat(text, _skip_ws(text, j + 1))
            if coefficient == 0:
                raise ParseError("coefficient must be >= 1", i - 1)
        return mul(omega_power(exponent), from_int(coefficient)), i
    value, i = _parse_nat(text, i)
    if value == 0:
        raise ParseError("0 is not a term; write the ordinal 0 on its own", i - 1)
    return from_int(value), i


def parse_ordinal_prefix(text: str, i: int = 0) -> tuple[Ordinal, int]:
    """Parse an ordinal starting at i, returning it and the next position."""
    i = _skip_ws(text, i)
    if i < len(text) and text[i] == "0":
        after = _skip_ws(text, i + 1)
        if after >= len(text) or text[after] != "+":
            return ZERO, i + 1
    value, i = _parse_term(text, i)
    while True:
        j = _skip_ws(text, i)
        if j < len(text) and text[j] == "+":
            term, i = _parse_term(text, j + 1)
            value = add(value, term)
        else:
            return value, i


def parse_ordinal(text: str) -> Ordinal:
    value, i = parse_ordinal_prefix(text, 0)
    i = _skip_ws(text, i)
    if i != len(text):
        raise ParseError("unexpected trailing input", i)
    return value


def _print_exponent_atom(e: Ordinal) -> str:
    if e.is_finite:
        return str(e.finite_value)
    if compare(e, OMEGA) == 0:
        return "w"
    return f"({print_ordinal(e)})"


def _print_term(exponent: Ordinal, coefficient: int) -> str:
    if exponent.is_zero:
        return str(coefficient)
    text = "w"
    if compare(exponent, ONE) != 0:
        text += f"^{_print_exponent_atom(exponent)}"
    if coefficient != 1:
        text += f"*{coefficient}"
    return text


def print_ordinal(a: Ordinal) -> str:
    if a.is_zero:
        return "0"
    return " + ".join(_print_term(e, c) for e, c in a.terms)


def iter_cnf_below(bound: Ordinal, coefficient_cap: int, *, inclusive: bool = False) -> Iterator[Ordinal]:
    """Enumerate the CNF ordinals below bound whose coefficients (recursively,
    exponents included) stay within coefficient_cap.

    Intended for building small fragment universes; exponential in the number
    of admissible exponents, so keep bounds modest.
    """
    if coefficient_cap < 1:
        raise ValueError("coefficient cap must be >= 1")

    def admissible(value: Ordinal) -> bool:
        return all(c <= coefficient_cap and admissible(e) for e, c in value.terms)

    if bound.is_zero:
        if inclusive:
            yield ZERO
        return
    head_exponent = bound.terms[0][0]
    exponents = [e for e in iter_cnf_below(head_exponent, coefficient_cap, inclusive=True) if admissible(e)]
    exponents.sort(key=_sort_key)

    def build(index: int, acc: Ordinal) -> Iterator[Ordinal]:
        if compare(acc, bound) > 0 or (not inclusive and compare(acc, bound) == 0):
            return
        yield acc
        for k in range(index, len(exponents)):
            for c in range(1, coefficient_cap + 1):
                piece = mul(omega_power(exponents[k]), from_int(c))
                yield from build(k + 1, add(acc, piece))

    # Exponents are consumed from largest to smallest to keep CNF order.
    exponents.reverse()
    seen: set[Ordinal] = set()
    for value in build(0, ZERO):
        if value not in seen:
            seen.add(value)
            yield value


def _sort_key(a: Ordinal):
    return tuple((_sort_key(e), c) for e, c in a.terms)
