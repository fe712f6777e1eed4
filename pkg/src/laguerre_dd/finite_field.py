"""Exact arithmetic in GF(p^n).

Elements are residues of GF(p)[x] modulo a fixed monic irreducible
polynomial of degree n.  An element with coefficient vector
(c0, ..., c_{n-1}) is encoded as the integer c0 + c1*p + ... +
c_{n-1}*p^{n-1}; the encoding is a bijection onto [0, p^n) and defines
every element ordering used downstream (sorting, dedup, serialization).

The modulus is the lexicographically smallest monic irreducible
polynomial of degree n, coefficients compared low-degree-first, so a
field is fully determined by (p, n).  Addition/multiplication tables are
built per field (desk scale only), which keeps all scalar arithmetic at
table-lookup cost and hands the kernels flat integer tables.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

import numpy as np

__all__ = [
    "Field",
    "FieldElement",
    "make_field",
    "subfield_elements",
]

# Tables are O(q^2); anything bigger than this is outside desk scale.
MAX_FIELD_ORDER = 512


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    f = 2
    while f * f <= m:
        if m % f == 0:
            return False
        f += 1
    return True


# ---------------------------------------------------------------------------
# polynomial helpers over GF(p); polynomials are coefficient lists,
# low degree first, no trailing-zero normalization requirement on input
# ---------------------------------------------------------------------------


def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(num: list[int], den: list[int], p: int) -> list[int]:
    """Remainder of num / den over GF(p); den must be monic."""
    r = [c % p for c in num]
    _poly_trim(r)
    d = len(den) - 1
    while len(r) - 1 >= d:
        lead = r[-1]
        shift = len(r) - 1 - d
        for j, c in enumerate(den):
            r[shift + j] = (r[shift + j] - lead * c) % p
        _poly_trim(r)
    return r


def _is_irreducible(poly: list[int], p: int) -> bool:
    """Exhaustive trial division by every monic polynomial of degree <= n/2."""
    n = len(poly) - 1
    if n == 1:
        return True
    if poly[0] == 0:  # divisible by x
        return False
    for d in range(1, n // 2 + 1):
        for coeffs in product(range(p), repeat=d):
            den = list(coeffs) + [1]
            if not _poly_mod(poly, den, p):
                return False
    return True


def _smallest_irreducible(p: int, n: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree n over GF(p)."""
    if n == 1:
        return (0, 1)
    for coeffs in product(range(p), repeat=n):
        poly = list(coeffs) + [1]
        if _is_irreducible(poly, p):
            return tuple(poly)
    raise AssertionError(f"no irreducible polynomial of degree {n} over GF({p})")


class Field:
    """GF(p^n) with table-backed arithmetic and canonical integer encodings.

    Construct via make_field(); instances for equal (p, n) are cached and
    interchangeable.
    """

    __slots__ = (
        "p",
        "n",
        "q",
        "modulus",
        "_add",
        "_mul",
        "_neg",
        "_inv",
        "_np_tables",
    )

    def __init__(self, p: int, n: int):
        if not is_prime(p):
            raise ValueError(f"p={p} is not prime")
        if n < 1:
            raise ValueError(f"extension degree must be >= 1, got {n}")
        q = p**n
        if q > MAX_FIELD_ORDER:
            raise ValueError(f"GF({q}) exceeds desk scale (max order {MAX_FIELD_ORDER})")
        self.p = p
        self.n = n
        self.q = q
        self.modulus = _smallest_irreducible(p, n)
        self._build_tables()
        self._np_tables = None

    # -- table construction -------------------------------------------------

    def _coeffs_of(self, e: int) -> list[int]:
        p, n = self.p, self.n
        out = []
        for _ in range(n):
            e, c = divmod(e, p)
            out.append(c)
        return out

    def _encode(self, coeffs: list[int]) -> int:
        e = 0
        for c in reversed(coeffs):
            e = e * self.p + c
        return e

    def _build_tables(self) -> None:
        p, n, q = self.p, self.n, self.q
        mod = list(self.modulus)

        def times_x(coeffs: list[int]) -> list[int]:
            out = [0] + coeffs[:-1] if n > 1 else [0]
            lead = coeffs[-1]
            if lead:
                # reduce x^n == -(mod[0] + ... + mod[n-1] x^{n-1})
                for j in range(n):
                    out[j] = (out[j] - lead * mod[j]) % p
            return out

        self._add = [
            [self._encode([(x + y) % p for x, y in zip(self._coeffs_of(a), self._coeffs_of(b))]) for b in range(q)]
            for a in range(q)
        ]
        self._neg = [self._encode([(-c) % p for c in self._coeffs_of(a)]) for a in range(q)]

        mul = [[0] * q for _ in range(q)]
        for a in range(q):
            # basis[j] = coefficients of a * x^j reduced mod the modulus
            basis = [self._coeffs_of(a)]
            for _ in range(1, n):
                basis.append(times_x(basis[-1]))
            row = mul[a]
            for b in range(q):
                bc = self._coeffs_of(b)
                acc = [0] * n
                for j, cj in enumerate(bc):
                    if cj:
                        bj = basis[j]
                        for t in range(n):
                            acc[t] += cj * bj[t]
                row[b] = self._encode([c % p for c in acc])
        self._mul = mul

        inv = [0] * q
        for a in range(1, q):
            inv[a] = mul[a].index(1)
        self._inv = inv

    # -- scalar arithmetic on encodings --------------------------------------

    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def sub(self, a: int, b: int) -> int:
        return self._add[a][self._neg[b]]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.q})")
        return self._inv[a]

    def div(self, a: int, b: int) -> int:
        return self._mul[a][self.inv(b)]

    def pow(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv(a), -k
        r = 1
        while k:
            if k & 1:
                r = self._mul[r][a]
            a = self._mul[a][a]
            k >>= 1
        return r

    # -- element layer --------------------------------------------------------

    def element(self, e: int) -> "FieldElement":
        if not 0 <= e < self.q:
            raise ValueError(f"encoding {e} out of range for GF({self.q})")
        return FieldElement(self, e)

    def from_coeffs(self, coeffs: list[int]) -> "FieldElement":
        if len(coeffs) > self.n:
            raise ValueError(f"too many coefficients for GF({self.q})")
        padded = [c % self.p for c in coeffs] + [0] * (self.n - len(coeffs))
        return FieldElement(self, self._encode(padded))

    def elements(self):
        return [FieldElement(self, e) for e in range(self.q)]

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    # -- kernel tables ---------------------------------------------------------

    def kernel_tables(self):
        """(add, mul, inv, neg) as C-contiguous int32 arrays for the kernels."""
        if self._np_tables is None:
            self._np_tables = (
                np.ascontiguousarray(self._add, dtype=np.int32),
                np.ascontiguousarray(self._mul, dtype=np.int32),
                np.ascontiguousarray(self._inv, dtype=np.int32),
                np.ascontiguousarray(self._neg, dtype=np.int32),
            )
        return self._np_tables

    # -- identity / serialization ----------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and (self.p, self.n) == (other.p, other.n)

    def __hash__(self) -> int:
        return hash((self.p, self.n))

    def __repr__(self) -> str:
        return f"GF({self.q})" if self.n == 1 else f"GF({self.q}={self.p}^{self.n})"

    def to_document(self) -> dict:
        return {"p": self.p, "n": self.n, "modulus": list(self.modulus)}


class FieldElement:
    """An element of GF(p^n), identified by its canonical integer encoding."""

    __slots__ = ("field", "encoding")

    def __init__(self, field: Field, encoding: int):
        self.field = field
        self.encoding = encoding

    @property
    def coeffs(self) -> tuple[int, ...]:
        return tuple(self.field._coeffs_of(self.encoding))

    def _check(self, other: "FieldElement") -> "FieldElement":
        if not isinstance(other, FieldElement):
            if isinstance(other, int):
                return self.field.element(other % self.field.p) if self.field.n == 1 else NotImplemented
            return NotImplemented
        if other.field != self.field:
            raise ValueError(f"mixed-field operands: {self.field} vs {other.field}")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.add(self.encoding, other.encoding))

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.sub(self.encoding, other.encoding))

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.mul(self.encoding, other.encoding))

    def __truediv__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.div(self.encoding, other.encoding))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.encoding))

    def __pow__(self, k: int):
        return FieldElement(self.field, self.field.pow(self.encoding, k))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.encoding))

    def __bool__(self) -> bool:
        return self.encoding != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            # int literals compare against the canonical encoding
            return self.encoding == other
        return (
            isinstance(other, FieldElement)
            and self.field == other.field
            and self.encoding == other.encoding
        )

    def __hash__(self) -> int:
        return hash((self.field.p, self.field.n, self.encoding))

    def __lt__(self, other: "FieldElement") -> bool:
        other = self._check(other)
        return self.encoding < other.encoding

    def __repr__(self) -> str:
        return f"{self.field!r}:{self.encoding}"


@lru_cache(maxsize=None)
def make_field(p: int, n: int) -> Field:
    """GF(p^n) with the canonical (lex-smallest) modulus; cached per (p, n)."""
    return Field(p, n)


def subfield_elements(field: Field, i: int) -> tuple[FieldElement, ...]:
    """The subfield GF(p^i) inside GF(p^n), as the fixed points of x -> x^(p^i).

    Returned in canonical encoding order; requires i | n.
    """
    if i < 1 or field.n % i != 0:
        raise ValueError(f"subfield degree {i} does not divide {field.n}")
    s = field.p**i
    fixed = [e for e in range(field.q) if field.pow(e, s) == e]
    if len(fixed) != s:
        raise AssertionError(f"expected {s} fixed points, found {len(fixed)}")
    return tuple(FieldElement(field, e) for e in fixed)
