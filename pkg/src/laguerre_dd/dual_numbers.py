"""The ring D(GF(q)) of dual numbers over a finite field.

A dual number is a pair (a, b) over GF(q), written a + b*eps with
eps^2 = 0.  Addition is componentwise and (a,b)*(a',b') = (aa', ab'+ba').
D is a commutative local ring: the units are exactly the pairs with
a != 0, and the non-units form the maximal ideal N = {b*eps}.

Canonical encoding of (a, b) is a.encoding * q + b.encoding; it orders
dual numbers everywhere downstream.
"""

from __future__ import annotations

from .finite_field import Field, FieldElement

__all__ = [
    "DualNumber",
    "dual",
    "dual_from_encoding",
    "epsilon",
    "dual_one",
    "dual_zero",
    "is_unit",
    "dual_inverse",
    "laguerre_algebra_check",
]


class DualNumber:
    """a + b*eps over GF(q); immutable."""

    __slots__ = ("a", "b")

    def __init__(self, a: FieldElement, b: FieldElement):
        if a.field != b.field:
            raise ValueError("component fields differ")
        self.a = a
        self.b = b

    @property
    def field(self) -> Field:
        return self.a.field

    @property
    def encoding(self) -> int:
        return self.a.encoding * self.field.q + self.b.encoding

    @property
    def is_unit(self) -> bool:
        return self.a.encoding != 0

    def _check(self, other: "DualNumber") -> None:
        if not isinstance(other, DualNumber):
            raise TypeError(f"expected DualNumber, got {type(other).__name__}")
        if other.field != self.field:
            raise ValueError(f"mixed-field operands: {self.field} vs {other.field}")

    def __add__(self, other: "DualNumber") -> "DualNumber":
        self._check(other)
        return DualNumber(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "DualNumber") -> "DualNumber":
        self._check(other)
        return DualNumber(self.a - other.a, self.b - other.b)

    def __mul__(self, other: "DualNumber") -> "DualNumber":
        self._check(other)
        return DualNumber(self.a * other.a, self.a * other.b + self.b * other.a)

    def __neg__(self) -> "DualNumber":
        return DualNumber(-self.a, -self.b)

    def inverse(self) -> "DualNumber":
        """(a + b*eps)^-1 = a^-1 - a^-2 b eps; requires a unit."""
        if not self.is_unit:
            raise ZeroDivisionError(f"{self!r} is not a unit of D({self.field!r})")
        ia = self.a.inverse()
        return DualNumber(ia, -(ia * ia * self.b))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, DualNumber)
            and self.field == other.field
            and self.a.encoding == other.a.encoding
            and self.b.encoding == other.b.encoding
        )

    def __hash__(self) -> int:
        return hash((self.field.p, self.field.n, self.encoding))

    def __repr__(self) -> str:
        return f"({self.a.encoding}+{self.b.encoding}e)"


def dual(field: Field, a: int, b: int) -> DualNumber:
    """Dual number from component encodings."""
    return DualNumber(field.element(a), field.element(b))


def dual_from_encoding(field: Field, e: int) -> DualNumber:
    q = field.q
    if not 0 <= e < q * q:
        raise ValueError(f"encoding {e} out of range for D(GF({q}))")
    return dual(field, e // q, e % q)


def epsilon(field: Field) -> DualNumber:
    return dual(field, 0, 1)


def dual_one(field: Field) -> DualNumber:
    return dual(field, 1, 0)


def dual_zero(field: Field) -> DualNumber:
    return dual(field, 0, 0)


def is_unit(u: DualNumber) -> bool:
    return u.is_unit


def dual_inverse(u: DualNumber) -> DualNumber:
    return u.inverse()


def all_duals(field: Field) -> list[DualNumber]:
    """All q^2 dual numbers in canonical encoding order."""
    return [dual(field, a, b) for a in range(field.q) for b in range(field.q)]


def laguerre_algebra_check(field: Field) -> bool:
    """Exhaustively confirm that D(GF(q)) is a Laguerre algebra.

    Checks, over all q^2 elements: (a) the elements with no multiplicative
    inverse are exactly the ideal N = {b*eps}; (b) N absorbs ring
    multiplication; (c) every element splits uniquely as an embedded field
    element plus an element of N.  Intended for desk-scale q.
    """
    elems = all_duals(field)
    one = dual_one(field)

    # (a) invertibility by exhaustive inverse search
    for u in elems:
        has_inverse = any(u * v == one for v in elems)
        if has_inverse != (u.a.encoding != 0):
            return False

    # (b) N is an ideal
    ideal = [u for u in elems if u.a.encoding == 0]
    for m in ideal:
        for u in elems:
            if (m * u).a.encoding != 0:
                return False

    # (c) unique decomposition: embedded K x N -> D is a bijection
    embedded = [dual(field, a, 0) for a in range(field.q)]
    seen = set()
    for k in embedded:
        for m in ideal:
            seen.add((k + m).encoding)
    return len(seen) == field.q * field.q
