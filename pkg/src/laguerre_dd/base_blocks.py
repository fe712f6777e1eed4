"""Base blocks for the five design cases over P(D).

All cases start from the embedded projective subline B over GF(p^i)
(p^i + 1 pairwise non-parallel points) and remove a set M:

  case i    M = {}                                    k = p^i + 1
  case ii   M = {R(1,0)}                              k = p^i
  case iii  M = {R(1,0), R(0,1)}                      k = p^i - 1
  case iv   M = {R(1,0), R(0,1), R(1,1)}              k = p^i - 2
  case v    M = {R(1,0), R(0,1), R(1,1), R(x,1)}      k = p^i - 3 (long)
            or the block is M itself                  k = 4       (short)

For case v the setwise stabilizer of the block depends only on how the
six cross-ratio values {x, 1/x, 1-x, 1/(1-x), (x-1)/x, x/(x-1)} of the
quadruple collapse: 6 distinct values -> order 4 (generic), values
{-1, 1/2, 2} -> order 8 (harmonic), roots of x^2-x+1 -> order 12
(equianharmonic), both at once -> order 24 (superharmonic, exactly in
characteristic 3).  Each case carries an arithmetic side condition on
p^i; violating it is reported by name.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .finite_field import Field, FieldElement, subfield_elements
from .laguerre_line import embedded_projective_subline

__all__ = [
    "CaseSpec",
    "QuadrupleClass",
    "ConditionError",
    "CASES",
    "VARIANTS",
    "STABILIZER_ORDERS",
    "check_case_conditions",
    "cross_ratio_orbit",
    "classify_quadruple",
    "select_variant_x",
    "base_block_for",
    "resolve_spec",
    "case_block_size",
    "case_stabilizer_order",
    "case_lambda3",
]

CASES = ("i", "ii", "iii", "iv", "v")
VARIANTS = ("generic", "superharmonic", "harmonic", "equianharmonic")

STABILIZER_ORDERS = {
    "generic": 4,
    "harmonic": 8,
    "equianharmonic": 12,
    "superharmonic": 24,
}


class ConditionError(ValueError):
    """A case side condition fails; .condition names it."""

    def __init__(self, message: str, condition: str):
        super().__init__(message)
        self.condition = condition


@dataclass(frozen=True)
class CaseSpec:
    """Which base block to build: case, subfield degree, case-v options."""

    case: str
    i: int
    variant: str | None = None
    block_choice: str = "long"
    x: FieldElement | None = None


@dataclass(frozen=True)
class QuadrupleClass:
    name: str
    stabilizer_order: int


def _condition(case: str, variant: str | None, p: int, m: int) -> str | None:
    """The failing side condition name, or None if all conditions hold."""
    if case == "ii" and not m > 2:
        return "p^i>2"
    if case == "iii" and not m > 3:
        return "p^i>3"
    if case == "iv" and not m > 4:
        return "p^i>4"
    if case == "v":
        if variant == "generic" and not m > 7:
            return "p^i>7"
        if variant == "superharmonic" and not (p == 3 and m > 5):
            return "p=3 and p^i>5"
        if variant == "harmonic" and not (p > 3 and m > 5):
            return "p>3 and p^i>5"
        if variant == "equianharmonic" and not (m % 3 == 1 and m > 5):
            return "p^i = 1 mod 3 and p^i>5"
    return None


def condition_label(case: str, variant: str | None) -> str:
    labels = {
        "i": "-",
        "ii": "p^i>2",
        "iii": "p^i>3",
        "iv": "p^i>4",
    }
    if case in labels:
        return labels[case]
    return {
        "generic": "p^i>7",
        "superharmonic": "p=3 and p^i>5",
        "harmonic": "p>3 and p^i>5",
        "equianharmonic": "p^i = 1 mod 3 and p^i>5",
    }[variant]


def check_case_conditions(field: Field, spec: CaseSpec) -> None:
    if spec.case not in CASES:
        raise ValueError(f"unknown case {spec.case!r}")
    if spec.i < 1 or field.n % spec.i != 0:
        raise ConditionError(
            f"subfield degree i={spec.i} does not divide n={field.n}", "i|n"
        )
    if spec.case == "v":
        if spec.variant not in VARIANTS:
            raise ValueError(f"case v needs a variant from {VARIANTS}, got {spec.variant!r}")
        if spec.block_choice not in ("long", "short"):
            raise ValueError(f"block choice must be long or short, got {spec.block_choice!r}")
    m = field.p**spec.i
    failed = _condition(spec.case, spec.variant, field.p, m)
    if failed is not None:
        raise ConditionError(
            f"case {spec.case}"
            + (f" ({spec.variant})" if spec.variant else "")
            + f" requires {failed}; got p={field.p}, p^i={m}",
            failed,
        )


def cross_ratio_orbit(x: FieldElement) -> set[FieldElement]:
    """Values of the six cross-ratio expressions at x (duplicates collapse)."""
    if x.encoding in (0, 1):
        raise ValueError("cross ratio is degenerate for x in {0, 1}")
    one = x.field.one
    return {
        x,
        x.inverse(),
        one - x,
        (one - x).inverse(),
        (x - one) / x,
        x / (x - one),
    }


def classify_quadruple(field: Field, i: int, x: FieldElement) -> QuadrupleClass:
    """Collapse class of the quadruple {R(1,0), R(0,1), R(1,1), R(x,1)}.

    x must lie in the degree-i subfield, away from 0 and 1.  In
    characteristic 2 no harmonic quadruple exists, so the harmonic test is
    skipped there.
    """
    if x.encoding in (0, 1):
        raise ValueError("x must avoid 0 and 1")
    if x not in set(subfield_elements(field, i)):
        raise ValueError(f"x={x!r} is not in the degree-{i} subfield")
    one = field.one
    is_eq_root = (x * x - x + one).encoding == 0
    if field.p == 3 and is_eq_root:
        name = "superharmonic"
    elif is_eq_root:
        name = "equianharmonic"
    elif field.p != 2:
        two = one + one
        harmonic_values = {-one, two.inverse(), two}
        name = "harmonic" if cross_ratio_orbit(x) <= harmonic_values else "generic"
    else:
        name = "generic"
    return QuadrupleClass(name, STABILIZER_ORDERS[name])


def select_variant_x(field: Field, i: int, variant: str) -> FieldElement:
    """Smallest x (by encoding) in the subfield whose quadruple has the variant."""
    check_case_conditions(field, CaseSpec("v", i, variant))
    for x in subfield_elements(field, i):
        if x.encoding in (0, 1):
            continue
        if classify_quadruple(field, i, x).name == variant:
            return x
    raise ValueError(f"no {variant} x exists in the degree-{i} subfield of {field!r}")


def resolve_spec(field: Field, spec: CaseSpec) -> CaseSpec:
    """Validate conditions and pin the case-v x (canonical smallest)."""
    check_case_conditions(field, spec)
    if spec.case != "v":
        return spec
    if spec.x is None:
        return replace(spec, x=select_variant_x(field, spec.i, spec.variant))
    got = classify_quadruple(field, spec.i, spec.x)
    if got.name != spec.variant:
        raise ValueError(f"x={spec.x!r} classifies as {got.name}, not {spec.variant}")
    return spec


def base_block_for(field: Field, spec: CaseSpec) -> tuple[int, ...]:
    """The base block of the given case, as sorted point ids."""
    spec = resolve_spec(field, spec)
    q = field.q
    line = [pt.point_id for pt in embedded_projective_subline(field, spec.i)]
    infinity = q * q  # R(1, 0)
    zero = 0  # R(0, 1)
    unit = q  # R(1, 1): proper representative (1, 0)
    removed: list[int]
    if spec.case == "i":
        removed = []
    elif spec.case == "ii":
        removed = [infinity]
    elif spec.case == "iii":
        removed = [infinity, zero]
    elif spec.case == "iv":
        removed = [infinity, zero, unit]
    else:
        removed = [infinity, zero, unit, spec.x.encoding * q]
    if spec.case == "v" and spec.block_choice == "short":
        block = sorted(removed)
    else:
        removed_set = set(removed)
        block = [pid for pid in line if pid not in removed_set]
    if len(block) < 3:
        raise ConditionError(
            f"base block for case {spec.case} has {len(block)} < 3 points", "k>=3"
        )
    return tuple(block)


def case_block_size(case: str, m: int, block_choice: str = "long") -> int:
    """Block size k as a function of m = p^i."""
    if case == "v" and block_choice == "short":
        return 4
    return {"i": m + 1, "ii": m, "iii": m - 1, "iv": m - 2, "v": m - 3}[case]


def case_stabilizer_order(case: str, m: int, variant: str | None = None) -> int:
    """Setwise stabilizer order of the base block (closed form)."""
    if case == "i":
        return m * (m * m - 1)
    if case == "ii":
        return m * (m - 1)
    if case == "iii":
        return 2 * (m - 1)
    if case == "iv":
        return 6
    return STABILIZER_ORDERS[variant]


def case_lambda3(case: str, m: int, variant: str | None = None, block_choice: str = "long") -> int:
    """Closed-form lambda_3 = k(k-1)(k-2) / |stabilizer|."""
    k = case_block_size(case, m, block_choice)
    stab = case_stabilizer_order(case, m, variant)
    num = k * (k - 1) * (k - 2)
    lam, rem = divmod(num, stab)
    if rem:
        raise AssertionError(f"non-integral lambda_3 for case {case}, m={m}")
    return lam
