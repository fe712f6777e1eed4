"""The projective line P(D) over the dual numbers, with parallelism.

Points are unit-scaling classes R(x1, x2) of admissible pairs (a pair is
admissible when at least one coordinate is a unit of D).  Because D is
local, every point has exactly one of two normal forms:

  proper    R(p, 1)        p in D          (q^2 points)
  improper  R(1, d*eps)    d in GF(q)      (q points)

Point IDs enumerate proper points by the canonical encoding of p, then
improper points by the encoding of d; IDs are the indices of
all_points().  Two points are parallel when the determinant of any pair
of representatives is a non-unit; parallelism is an equivalence relation
with q+1 classes of q points each (one class per K-part of proper
representatives, plus the improper class).
"""

from __future__ import annotations

from dataclasses import dataclass

from .dual_numbers import DualNumber, dual, dual_from_encoding
from .finite_field import Field, FieldElement, subfield_elements

__all__ = [
    "LaguerrePoint",
    "ParallelClass",
    "make_point",
    "is_parallel",
    "all_points",
    "point_from_id",
    "point_count",
    "class_index",
    "parallel_classes",
    "embedded_projective_subline",
]


class LaguerrePoint:
    """A point of P(D) held in canonical form."""

    __slots__ = ("field", "proper", "rep", "delta")

    def __init__(self, field: Field, proper: bool, rep: DualNumber | None, delta: FieldElement | None):
        self.field = field
        self.proper = proper
        self.rep = rep  # proper points: R(rep, 1)
        self.delta = delta  # improper points: R(1, delta*eps)

    @property
    def point_id(self) -> int:
        if self.proper:
            return self.rep.encoding
        return self.field.q**2 + self.delta.encoding

    def representative_pair(self) -> tuple[DualNumber, DualNumber]:
        f = self.field
        if self.proper:
            return self.rep, dual(f, 1, 0)
        return dual(f, 1, 0), dual(f, 0, self.delta.encoding)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LaguerrePoint)
            and self.field == other.field
            and self.point_id == other.point_id
        )

    def __hash__(self) -> int:
        return hash((self.field.p, self.field.n, self.point_id))

    def __repr__(self) -> str:
        if self.proper:
            return f"R({self.rep!r},1)"
        return f"R(1,{self.delta.encoding}e)"

    def to_document(self) -> dict:
        if self.proper:
            return {"kind": "proper", "rep": self.rep.encoding}
        return {"kind": "improper", "delta": self.delta.encoding}


def make_point(x1: DualNumber, x2: DualNumber) -> LaguerrePoint:
    """Canonical point of the admissible pair (x1, x2).

    Pairs that differ by a unit factor give the same point; a pair with
    neither coordinate a unit is rejected.
    """
    if x1.field != x2.field:
        raise ValueError("mixed-field pair")
    field = x1.field
    if x2.is_unit:
        return LaguerrePoint(field, True, x1 * x2.inverse(), None)
    if x1.is_unit:
        return LaguerrePoint(field, False, None, (x2 * x1.inverse()).b)
    raise ValueError(f"inadmissible pair ({x1!r}, {x2!r}): no unit coordinate")


def is_parallel(P: LaguerrePoint, Q: LaguerrePoint) -> bool:
    """True when the representative determinant p1*q2 - q1*p2 is a non-unit."""
    p1, p2 = P.representative_pair()
    q1, q2 = Q.representative_pair()
    return not (p1 * q2 - q1 * p2).is_unit


def point_count(field: Field) -> int:
    return field.q**2 + field.q


def point_from_id(field: Field, point_id: int) -> LaguerrePoint:
    qq = field.q**2
    if not 0 <= point_id < qq + field.q:
        raise ValueError(f"point id {point_id} out of range")
    if point_id < qq:
        return LaguerrePoint(field, True, dual_from_encoding(field, point_id), None)
    return LaguerrePoint(field, False, None, field.element(point_id - qq))


def all_points(field: Field) -> list[LaguerrePoint]:
    """All q^2 + q points; index in this list == point_id."""
    return [point_from_id(field, i) for i in range(point_count(field))]


def class_index(field: Field, point_id: int) -> int:
    """Parallel-class index of a point id: 0..q-1 proper classes, q improper."""
    qq = field.q**2
    if point_id < qq:
        return point_id // field.q
    return field.q


@dataclass(frozen=True)
class ParallelClass:
    """One parallelism class; label is the common K-part, None for improper."""

    label: FieldElement | None
    members: tuple[LaguerrePoint, ...]


def parallel_classes(field: Field) -> list[ParallelClass]:
    """The q+1 classes, proper classes by label encoding, improper last.

    Proper class x = {R(x + b*eps, 1) : b in K}; the improper class is the
    class of R(1,0).
    """
    q = field.q
    classes = []
    for x in range(q):
        members = tuple(
            LaguerrePoint(field, True, dual(field, x, b), None) for b in range(q)
        )
        classes.append(ParallelClass(field.element(x), members))
    improper = tuple(
        LaguerrePoint(field, False, None, field.element(d)) for d in range(q)
    )
    classes.append(ParallelClass(None, improper))
    return classes


def embedded_projective_subline(field: Field, i: int) -> tuple[LaguerrePoint, ...]:
    """The projective line over the subfield GF(p^i), embedded into P(D).

    Returns {R(x + 0*eps, 1) : x in GF(p^i)} plus R(1,0), ordered by point
    id; p^i + 1 pairwise non-parallel points, hence a transversal set.
    """
    pts = [
        LaguerrePoint(field, True, dual(field, x.encoding, 0), None)
        for x in subfield_elements(field, i)
    ]
    pts.append(LaguerrePoint(field, False, None, field.element(0)))
    return tuple(pts)
