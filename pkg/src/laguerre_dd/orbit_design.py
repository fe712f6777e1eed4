"""Divisible designs as group orbits of a base block.

Given a group acting on points with an invariant equivalence relation,
the orbit of a transversal base block B is the block set of a
t-(s, k, lambda_t)-divisible design, with

    b        = |G| / |G_B|
    lambda_t = |G| * C(k,t) / (|G_B| * C(v/s, t) * s^t)

where G_B is the setwise stabilizer of B.  The engine is generic over
the acting group: anything with __len__ and block_images(block) ->
per-element sorted image rows works, so toy permutation actions can
exercise it independently of the Laguerre geometry.  Stabilizer orders
are derived from orbit sizes (and cross-checked against direct fixing
counts in the tests, never trusted alone).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from math import comb

import numpy as np

from .finite_field import Field, make_field
from .laguerre_line import class_index, point_count, point_from_id
from .projectivities import ProjectivityGroup, enumerate_group

__all__ = [
    "DesignParameters",
    "DivisibleDesign",
    "PermutationAction",
    "orbit_of_block",
    "stabilizer_order",
    "direct_stabilizer_count",
    "design_parameters",
    "derive_lower_t",
    "build_design",
]


@dataclass(frozen=True)
class DesignParameters:
    t: int
    s: int
    k: int
    v: int
    lambda_t: int
    b: int
    group_order: int
    stabilizer_order: int


class PermutationAction:
    """Explicit point permutations as a group action (toy/testing adapter)."""

    def __init__(self, perms):
        self.perms = [tuple(p) for p in perms]

    def __len__(self) -> int:
        return len(self.perms)

    def block_images(self, block):
        block = tuple(block)
        return [tuple(sorted(p[x] for x in block)) for p in self.perms]


def orbit_of_block(group, block) -> np.ndarray:
    """Distinct image blocks, lexicographically sorted, one sorted row each."""
    field = getattr(group, "field", None)
    if field is not None:
        if len({class_index(field, int(pid)) for pid in block}) != len(tuple(block)):
            raise ValueError("base block is not transversal")
    imgs = group.block_images(block)
    if not isinstance(imgs, np.ndarray):
        imgs = np.asarray(list(imgs), dtype=np.int32)
    return np.unique(imgs, axis=0)


def stabilizer_order(group, block) -> int:
    """|G_B| via orbit size; |G| = |orbit| * |G_B| must hold exactly."""
    n_orbit = len(orbit_of_block(group, block))
    n_group = len(group)
    order, rem = divmod(n_group, n_orbit)
    if rem:
        raise AssertionError(
            f"orbit size {n_orbit} does not divide group order {n_group}"
        )
    return order


def direct_stabilizer_count(group, block) -> int:
    """|G_B| by counting elements fixing the block setwise (cross-check path)."""
    base = np.asarray(sorted(block), dtype=np.int32)
    imgs = group.block_images(block)
    if not isinstance(imgs, np.ndarray):
        imgs = np.asarray(list(imgs), dtype=np.int32)
    return int((imgs == base).all(axis=1).sum())


def design_parameters(
    v: int, s: int, k: int, t: int, group_order: int, stabilizer_order: int
) -> DesignParameters:
    """Exact parameters of the orbit design; rejects non-integral b or lambda."""
    if not t <= k < v:
        raise ValueError(f"need t <= k < v, got t={t}, k={k}, v={v}")
    if v % s:
        raise ValueError(f"class size {s} does not divide point count {v}")
    b, rem = divmod(group_order, stabilizer_order)
    if rem:
        raise ValueError(
            f"stabilizer order {stabilizer_order} does not divide group order {group_order}"
        )
    num = group_order * comb(k, t)
    den = stabilizer_order * comb(v // s, t) * s**t
    lam, rem = divmod(num, den)
    if rem:
        raise ValueError(f"non-integral lambda_{t} = {num}/{den}; modeling bug")
    return DesignParameters(
        t=t,
        s=s,
        k=k,
        v=v,
        lambda_t=lam,
        b=b,
        group_order=group_order,
        stabilizer_order=stabilizer_order,
    )


def derive_lower_t(params: DesignParameters) -> DesignParameters:
    """Reread the same design at strength t-1.

    lambda_{t-1} = lambda_t * (v - s*t + s) / (k - t + 1), which must be
    an integer.
    """
    if params.t < 2:
        raise ValueError("t must be at least 2 to derive a lower strength")
    num = params.lambda_t * (params.v - params.s * params.t + params.s)
    lam, rem = divmod(num, params.k - params.t + 1)
    if rem:
        raise ValueError(f"non-integral lambda_{params.t - 1} = {num}/{params.k - params.t + 1}")
    return replace(params, t=params.t - 1, lambda_t=lam)


@dataclass
class DivisibleDesign:
    """Points with class labels, orbit block set, exact parameters, provenance."""

    field: Field | None
    point_classes: np.ndarray  # (v,) class label per point id
    blocks: np.ndarray  # (b, k) sorted rows, lexicographically ordered
    params: DesignParameters
    case: str | None = None
    i: int | None = None
    variant: str | None = None
    block_choice: str | None = None
    x: int | None = None
    base_block: tuple[int, ...] | None = None

    def to_document(self) -> dict:
        if self.field is None:
            raise ValueError("only field-backed designs serialize")
        points = [
            {
                "id": pid,
                "class": int(self.point_classes[pid]),
                "repr": point_from_id(self.field, pid).to_document(),
            }
            for pid in range(self.params.v)
        ]
        return {
            "field": {"p": self.field.p, "n": self.field.n},
            "case": self.case,
            "i": self.i,
            "variant": self.variant,
            "block_choice": self.block_choice,
            "x": self.x,
            "params": {
                "t": self.params.t,
                "s": self.params.s,
                "k": self.params.k,
                "lambda": self.params.lambda_t,
                "v": self.params.v,
                "b": self.params.b,
            },
            "points": points,
            "blocks": self.blocks.tolist(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_document(), separators=(",", ":")) + "\n"

    @classmethod
    def from_document(cls, doc: dict) -> "DivisibleDesign":
        try:
            field = make_field(doc["field"]["p"], doc["field"]["n"])
            p = doc["params"]
            params = DesignParameters(
                t=p["t"],
                s=p["s"],
                k=p["k"],
                v=p["v"],
                lambda_t=p["lambda"],
                b=p["b"],
                group_order=0,
                stabilizer_order=0,
            )
            classes = np.full(len(doc["points"]), -1, dtype=np.int32)
            for pt in doc["points"]:
                classes[pt["id"]] = pt["class"]
            blocks = np.asarray(doc["blocks"], dtype=np.int32)
            if blocks.ndim != 2:
                raise ValueError("blocks must be a rectangular list of id lists")
        except (KeyError, TypeError, IndexError) as exc:
            raise ValueError(f"malformed design document: {exc}") from exc
        if (classes < 0).any():
            raise ValueError("malformed design document: missing point ids")
        return cls(
            field=field,
            point_classes=classes,
            blocks=blocks,
            params=params,
            case=doc.get("case"),
            i=doc.get("i"),
            variant=doc.get("variant"),
            block_choice=doc.get("block_choice"),
            x=doc.get("x"),
        )


def laguerre_point_classes(field: Field) -> np.ndarray:
    v = point_count(field)
    return np.asarray([class_index(field, pid) for pid in range(v)], dtype=np.int32)


def build_design(
    field: Field,
    base_block,
    t: int = 3,
    *,
    group: ProjectivityGroup | None = None,
    case: str | None = None,
    i: int | None = None,
    variant: str | None = None,
    block_choice: str | None = None,
    x: int | None = None,
) -> DivisibleDesign:
    """Assemble the full design for a transversal base block over P(D)."""
    base = tuple(sorted(int(pid) for pid in base_block))
    classes = laguerre_point_classes(field)
    if len({int(classes[pid]) for pid in base}) != len(base):
        raise ValueError("base block is not transversal")
    v = point_count(field)
    if not t <= len(base) < v:
        raise ValueError(f"need t <= k < v, got t={t}, k={len(base)}, v={v}")

    if group is None:
        group = enumerate_group(field)
    blocks = orbit_of_block(group, base)
    stab, rem = divmod(len(group), len(blocks))
    if rem:
        raise AssertionError("orbit size does not divide group order")
    params = design_parameters(v, field.q, len(base), t, len(group), stab)
    if params.b != len(blocks):
        raise AssertionError("block count disagrees with |G|/|G_B|")
    return DivisibleDesign(
        field=field,
        point_classes=classes,
        blocks=blocks,
        params=params,
        case=case,
        i=i,
        variant=variant,
        block_choice=block_choice,
        x=x,
        base_block=base,
    )
