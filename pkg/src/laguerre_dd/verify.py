"""Brute-force verification of the divisible-design axioms.

The verifier counts directly on the block list and never reuses the
orbit engine's parameter formulas, so it stays a valid oracle even if
the engine is wrong.  Membership counting enumerates transversal
t-subsets by choosing t point classes and one point per class (exactly
the transversal subsets, each once), reading counts accumulated from
the blocks' own t-subsets.

A configurable cap bounds the work (measured as block-side increments
plus enumerated subsets, i.e. (subset, block)-membership events); past
the cap the verifier refuses rather than grind.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field as dataclass_field
from itertools import combinations
from math import comb, prod

import numpy as np

from .orbit_design import DesignParameters, DivisibleDesign, derive_lower_t, orbit_of_block

__all__ = [
    "CapExceeded",
    "CheckResult",
    "VerificationReport",
    "DEFAULT_CAP",
    "expected_lambda_at",
    "coverage_histogram",
    "verify_design",
    "count_containing_blocks",
    "verify_group_transitivity",
]

DEFAULT_CAP = 10**8
# dense coverage arrays are indexed by v^t
_DENSE_LIMIT = 1 << 26


class CapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    measured: object
    expected: object


@dataclass
class VerificationReport:
    t: int
    checks: list[CheckResult] = dataclass_field(default_factory=list)
    lambda_histogram: dict[int, int] = dataclass_field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, measured, expected) -> None:
        self.checks.append(CheckResult(name, measured == expected, measured, expected))

    def to_document(self) -> dict:
        return {
            "t": self.t,
            "passed": self.passed,
            "checks": [
                {
                    "name": c.name,
                    "passed": c.passed,
                    "measured": _plain(c.measured),
                    "expected": _plain(c.expected),
                }
                for c in self.checks
            ],
            "lambda_histogram": {str(key): n for key, n in sorted(self.lambda_histogram.items())},
        }


def _plain(value):
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in sorted(value.items())}
    return value


def expected_lambda_at(params: DesignParameters, t: int) -> int:
    """The parameter record's lambda reread at strength t <= params.t."""
    if t > params.t:
        raise ValueError(f"cannot raise strength from {params.t} to {t}")
    cur = params
    while cur.t > t:
        cur = derive_lower_t(cur)
    return cur.lambda_t


def _class_ids(classes: np.ndarray) -> list[np.ndarray]:
    labels = sorted(set(int(c) for c in classes))
    return [np.nonzero(classes == lab)[0].astype(np.int64) for lab in labels]


def coverage_histogram(
    classes: np.ndarray, blocks: np.ndarray, t: int, cap: int = DEFAULT_CAP
) -> dict[int, int]:
    """#transversal t-subsets by how many blocks contain them (0 included)."""
    v = len(classes)
    b, k = blocks.shape
    if not 1 <= t <= k:
        raise ValueError(f"need 1 <= t <= k, got t={t}, k={k}")
    per_class = _class_ids(classes)
    sizes = [len(ids) for ids in per_class]
    n_subsets = sum(prod(c) for c in combinations(sizes, t))
    work = b * comb(k, t) + n_subsets
    if work > cap:
        raise CapExceeded(
            f"verification needs ~{work} membership tests, above the cap {cap}; "
            "rerun with a smaller q or a higher --cap"
        )
    if v**t > _DENSE_LIMIT:
        raise CapExceeded(f"coverage table of size {v}^{t} exceeds the dense limit")

    cov = np.zeros(v**t, dtype=np.int64)
    for cols in combinations(range(k), t):
        keys = blocks[:, cols[0]].astype(np.int64)
        for c in cols[1:]:
            keys = keys * v + blocks[:, c]
        np.add.at(cov, keys, 1)

    hist: Counter = Counter()
    for chosen in combinations(per_class, t):
        grids = np.meshgrid(*chosen, indexing="ij")
        ids = np.stack([g.ravel() for g in grids], axis=1)
        ids.sort(axis=1)
        keys = ids[:, 0]
        for col in range(1, t):
            keys = keys * v + ids[:, col]
        counts = np.bincount(cov[keys])
        for value, n in enumerate(counts):
            if n:
                hist[value] += int(n)
    return dict(sorted(hist.items()))


def verify_design(
    design: DivisibleDesign, t: int | None = None, cap: int = DEFAULT_CAP
) -> VerificationReport:
    """Check every design axiom by direct counting.

    Each check runs independently: block transversality and size, class
    sizes, simplicity (no repeated blocks), the parameter record's v and
    b, and the full membership histogram, which must be the single value
    lambda_t.
    """
    params = design.params
    if t is None:
        t = params.t
    classes = np.asarray(design.point_classes)
    blocks = np.asarray(design.blocks)
    report = VerificationReport(t=t)

    b, k = blocks.shape
    report.add("block_size", int(k), params.k)

    sorted_rows = np.sort(classes[blocks], axis=1)
    transversal = bool((np.diff(sorted_rows, axis=1) != 0).all())
    report.add("blocks_transversal", transversal, True)

    class_sizes = sorted(Counter(int(c) for c in classes).values())
    report.add("class_sizes", class_sizes, [params.s] * (len(classes) // params.s))

    n_unique = len(np.unique(blocks, axis=0))
    report.add("no_duplicate_blocks", int(n_unique), int(b))

    report.add("point_count", int(len(classes)), params.v)
    report.add("block_count", int(b), params.b)

    hist = coverage_histogram(classes, blocks, t, cap=cap)
    report.lambda_histogram = hist
    report.add("lambda_uniform", hist, {expected_lambda_at(params, t): sum(hist.values())})
    return report


def _incidence(design: DivisibleDesign) -> dict[int, set[int]]:
    cached = getattr(design, "_incidence", None)
    if cached is None:
        cached = {}
        for row_idx, row in enumerate(np.asarray(design.blocks).tolist()):
            for pid in row:
                cached.setdefault(pid, set()).add(row_idx)
        design._incidence = cached
    return cached


def count_containing_blocks(design: DivisibleDesign, point_ids) -> int:
    """Exact number of blocks containing all the given points."""
    pts = [int(p) for p in point_ids]
    classes = design.point_classes
    if len({int(classes[p]) for p in pts}) != len(pts):
        raise ValueError("point set is not transversal")
    inc = _incidence(design)
    rows = [inc.get(p, set()) for p in pts]
    if not rows:
        return len(design.blocks)
    return len(set.intersection(*rows))


def _rows_subset(blocks: np.ndarray, image_rows: np.ndarray) -> bool:
    """True when every row of image_rows occurs among the rows of blocks."""
    merged = np.vstack([blocks, image_rows])
    return len(np.unique(merged, axis=0)) == len(np.unique(blocks, axis=0))


def verify_group_transitivity(
    design: DivisibleDesign,
    group,
    *,
    exhaustive: bool | None = None,
    sample_size: int = 24,
) -> bool:
    """Check that the group is a point- and block-transitive automorphism group.

    (a) every (sampled or all) element maps blocks to blocks, (b) the point
    action has a single orbit, (c) the block action has a single orbit.
    Exhaustive by default for q <= 4; otherwise a fixed, deterministic,
    evenly spaced subsample of elements is used for (a).
    """
    from . import backends

    blocks = np.asarray(design.blocks)
    n = len(group)
    if exhaustive is None:
        exhaustive = design.field is not None and design.field.q <= 4

    v = len(design.point_classes)
    all_ids = np.arange(v, dtype=np.int32)
    if exhaustive:
        indices = np.arange(n)
    else:
        step = max(1, n // sample_size)
        indices = np.arange(0, n, step)

    fadd, fmul, finv, fneg = design.field.kernel_tables()
    q = design.field.q
    chunk = max(1, 50_000_000 // max(1, blocks.size))
    for start in range(0, len(indices), chunk):
        sel = indices[start : start + chunk]
        perms = backends.point_images(q, fadd, fmul, finv, fneg, group.rows[sel], all_ids)
        imgs = np.sort(perms[:, blocks].reshape(-1, blocks.shape[1]), axis=1)
        if not _rows_subset(blocks, imgs):
            return False

    point_orbit = np.unique(group.point_image_table(np.asarray([int(blocks[0, 0])], dtype=np.int32)))
    if len(point_orbit) != v:
        return False

    orbit = orbit_of_block(group, blocks[0])
    return orbit.shape == blocks.shape and bool((orbit == np.unique(blocks, axis=0)).all())
