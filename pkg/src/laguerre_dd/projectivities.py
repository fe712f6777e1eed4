"""The projective group of P(D): regular 2x2 matrices over D modulo scalars.

A group element is held as the canonically scaled matrix (a, b; c, d):
the first entry in scan order a, b, c, d whose K-part is nonzero is
scaled to 1.  Scaling by a unit never changes which entries are units,
so the canonical form is well defined, and two matrices represent the
same projectivity exactly when their canonical forms coincide.

Points transform as row vectors acting on the right:

    R(x1, x2) * (a, b; c, d) = R(x1*a + x2*c, x1*b + x2*d)

so apply(g*h, P) == apply(h, apply(g, P)).  The group acts sharply
transitively on ordered transversal (pairwise non-parallel) triples;
`map_standard_triple` realizes the unique element sending the standard
triple (R(1,0), R(0,1), R(1,1)) to a given one, and the full group is
enumerated bijectively from the q^4(q^2-1) ordered transversal triples.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from . import backends
from .dual_numbers import DualNumber, dual, dual_from_encoding
from .finite_field import Field, subfield_elements
from .laguerre_line import (
    LaguerrePoint,
    class_index,
    is_parallel,
    make_point,
    point_count,
    point_from_id,
)

__all__ = [
    "Projectivity",
    "ProjectivityGroup",
    "make_projectivity",
    "apply",
    "standard_triple",
    "map_standard_triple",
    "map_triple",
    "enumerate_group",
    "group_order",
    "subfield_group_membership",
]

# q^4(q^2-1) canonical rows are materialized; keep memory at desk scale.
MAX_GROUP_SIZE = 8_000_000


def group_order(q: int) -> int:
    return q**4 * (q**2 - 1)


class Projectivity:
    """A canonically scaled regular 2x2 matrix over D."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a: DualNumber, b: DualNumber, c: DualNumber, d: DualNumber):
        # assumes entries already canonical; use make_projectivity otherwise
        self.a, self.b, self.c, self.d = a, b, c, d

    @property
    def field(self) -> Field:
        return self.a.field

    def entries(self) -> tuple[DualNumber, DualNumber, DualNumber, DualNumber]:
        return self.a, self.b, self.c, self.d

    def row_encoding(self) -> tuple[int, int, int, int]:
        return (self.a.encoding, self.b.encoding, self.c.encoding, self.d.encoding)

    def det(self) -> DualNumber:
        return self.a * self.d - self.b * self.c

    def __mul__(self, other: "Projectivity") -> "Projectivity":
        """Matrix product; apply(self*other, P) == apply(other, apply(self, P))."""
        if not isinstance(other, Projectivity):
            return NotImplemented
        a, b, c, d = self.entries()
        e, f, g, h = other.entries()
        return make_projectivity(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def inverse(self) -> "Projectivity":
        """Adjugate matrix; the determinant factor is absorbed by scaling."""
        a, b, c, d = self.entries()
        return make_projectivity(d, -b, -c, a)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Projectivity)
            and self.field == other.field
            and self.row_encoding() == other.row_encoding()
        )

    def __hash__(self) -> int:
        return hash((self.field.p, self.field.n, self.row_encoding()))

    def __repr__(self) -> str:
        return f"[{self.a!r} {self.b!r}; {self.c!r} {self.d!r}]"


def make_projectivity(a: DualNumber, b: DualNumber, c: DualNumber, d: DualNumber) -> Projectivity:
    """Canonical projectivity of the matrix (a, b; c, d); det must be a unit."""
    det = a * d - b * c
    if not det.is_unit:
        raise ValueError("matrix determinant is not a unit")
    for u in (a, b, c, d):
        if u.is_unit:
            iu = u.inverse()
            return Projectivity(a * iu, b * iu, c * iu, d * iu)
    raise AssertionError("regular matrix with no unit entry")


def apply(g: Projectivity, P: LaguerrePoint) -> LaguerrePoint:
    """Image of P under g (row-vector right action)."""
    x1, x2 = P.representative_pair()
    return make_point(x1 * g.a + x2 * g.c, x1 * g.b + x2 * g.d)


def standard_triple(field: Field) -> tuple[LaguerrePoint, LaguerrePoint, LaguerrePoint]:
    """(R(1,0), R(0,1), R(1,1)) -- pairwise non-parallel."""
    one = dual(field, 1, 0)
    zero = dual(field, 0, 0)
    return (
        make_point(one, zero),
        make_point(zero, one),
        make_point(one, one),
    )


def _require_transversal(points: tuple[LaguerrePoint, ...]) -> None:
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            if is_parallel(points[i], points[j]):
                raise ValueError(
                    f"triple is not transversal: {points[i]!r} is parallel to {points[j]!r}"
                )


def map_standard_triple(P1: LaguerrePoint, P2: LaguerrePoint, P3: LaguerrePoint) -> Projectivity:
    """The unique g with standard_triple -> (P1, P2, P3).

    With representative pairs (p_i, q_i), the rows of g are l1*(p1, q1)
    and l2*(p2, q2) where l1, l2 solve l1*(p1,q1) + l2*(p2,q2) = (p3,q3);
    transversality makes the system invertible and the l_i units.
    """
    _require_transversal((P1, P2, P3))
    p1, q1 = P1.representative_pair()
    p2, q2 = P2.representative_pair()
    p3, q3 = P3.representative_pair()
    idelta = (p1 * q2 - p2 * q1).inverse()
    l1 = (p3 * q2 - p2 * q3) * idelta
    l2 = (p1 * q3 - p3 * q1) * idelta
    return make_projectivity(l1 * p1, l1 * q1, l2 * p2, l2 * q2)


def map_triple(
    src: tuple[LaguerrePoint, LaguerrePoint, LaguerrePoint],
    dst: tuple[LaguerrePoint, LaguerrePoint, LaguerrePoint],
) -> Projectivity:
    """The unique g with apply(g, src[i]) == dst[i] for i = 0, 1, 2."""
    g_src = map_standard_triple(*src)
    g_dst = map_standard_triple(*dst)
    return g_src.inverse() * g_dst


class ProjectivityGroup:
    """The fully enumerated group, backed by an (N, 4) array of encodings.

    Iteration yields Projectivity objects in enumeration order; bulk
    operations (orbits, stabilizers, permutation tables) stay on the
    integer arrays via the kernel backend.
    """

    def __init__(self, field: Field, rows: np.ndarray):
        self.field = field
        self.rows = rows
        self._row_set: frozenset | None = None

    def __len__(self) -> int:
        return len(self.rows)

    def __getitem__(self, i: int) -> Projectivity:
        a, b, c, d = (int(x) for x in self.rows[i])
        f = self.field
        return Projectivity(
            dual_from_encoding(f, a),
            dual_from_encoding(f, b),
            dual_from_encoding(f, c),
            dual_from_encoding(f, d),
        )

    def __iter__(self):
        return (self[i] for i in range(len(self.rows)))

    def row_set(self) -> frozenset:
        if self._row_set is None:
            self._row_set = frozenset(map(tuple, self.rows.tolist()))
        return self._row_set

    def __contains__(self, g: Projectivity) -> bool:
        return g.row_encoding() in self.row_set()

    def _tables(self):
        return self.field.kernel_tables()

    def point_image_table(self, point_ids) -> np.ndarray:
        """(N, m) image ids of the given point ids under every element."""
        fadd, fmul, finv, fneg = self._tables()
        ids = np.asarray(point_ids, dtype=np.int32)
        return backends.point_images(self.field.q, fadd, fmul, finv, fneg, self.rows, ids)

    def block_images(self, block) -> np.ndarray:
        """(N, k) sorted image blocks of a transversal block under every element."""
        imgs = self.point_image_table(np.asarray(sorted(block), dtype=np.int32))
        imgs.sort(axis=1)
        return imgs


def _assert_no_duplicate_rows(field: Field, rows: np.ndarray) -> None:
    qq = field.q * field.q
    keys = rows.astype(np.int64)
    packed = ((keys[:, 0] * qq + keys[:, 1]) * qq + keys[:, 2]) * qq + keys[:, 3]
    if len(np.unique(packed)) != len(rows):
        raise AssertionError(
            "group enumeration produced duplicate canonical matrices; "
            "triple -> element map is not injective"
        )


@lru_cache(maxsize=8)
def _enumerate_group_cached(field: Field) -> ProjectivityGroup:
    n = group_order(field.q)
    if n > MAX_GROUP_SIZE:
        raise ValueError(
            f"group order {n} for q={field.q} exceeds desk scale ({MAX_GROUP_SIZE})"
        )
    fadd, fmul, finv, fneg = field.kernel_tables()
    rows = backends.enumerate_group_rows(field.q, fadd, fmul, finv, fneg)
    if len(rows) != n:
        raise AssertionError(f"expected {n} elements, enumerated {len(rows)}")
    _assert_no_duplicate_rows(field, rows)
    return ProjectivityGroup(field, rows)


def enumerate_group(field: Field, dedup_by_permutation: bool = False) -> ProjectivityGroup:
    """Enumerate the whole group, one canonical matrix per transversal triple.

    The enumeration doubles as a structural check: it must produce exactly
    q^4(q^2-1) distinct canonical forms.  `dedup_by_permutation` collapses
    elements inducing the same point permutation; the action has been
    faithful on every tested field, so the flag is off by default.
    """
    group = _enumerate_group_cached(field)
    if dedup_by_permutation:
        table = group.point_image_table(np.arange(point_count(field), dtype=np.int32))
        _, idx = np.unique(table, axis=0, return_index=True)
        if len(idx) != len(group.rows):
            return ProjectivityGroup(field, group.rows[np.sort(idx)])
    return group


def subfield_group_membership(g: Projectivity, i: int) -> bool:
    """True when g is (a scalar multiple of) a matrix over the subfield GF(p^i).

    Because canonical scaling pins the first unit entry to 1, it is enough
    to test the canonical entries themselves.
    """
    field = g.field
    sub = {x.encoding for x in subfield_elements(field, i)}
    return all(u.b.encoding == 0 and u.a.encoding in sub for u in g.entries())


def transversal_triples(field: Field) -> list[tuple[int, int, int]]:
    """All ordered transversal point-id triples, in enumeration order."""
    v = point_count(field)
    cls = [class_index(field, pid) for pid in range(v)]
    out = []
    for i in range(v):
        for j in range(v):
            if cls[j] == cls[i]:
                continue
            for k in range(v):
                if cls[k] != cls[i] and cls[k] != cls[j]:
                    out.append((i, j, k))
    return out


def triple_points(field: Field, triple: tuple[int, int, int]):
    return tuple(point_from_id(field, pid) for pid in triple)
