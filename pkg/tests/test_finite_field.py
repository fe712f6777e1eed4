from itertools import product

import pytest

from laguerre_dd.finite_field import FieldElement, make_field, subfield_elements


def test_prime_field():
    f = make_field(3, 1)
    assert f.q == 3
    assert [e.encoding for e in f.elements()] == [0, 1, 2]


def test_gf4_modulus_is_forced():
    # x^2 + x + 1 is the only irreducible quadratic over GF(2)
    assert make_field(2, 2).modulus == (1, 1, 1)


def test_gf9_modulus_matches_enumeration_oracle():
    # scan all 9 monic quadratics over GF(3) in low-degree-first lex order
    # and take the first with no root; degree 2 means root-free == irreducible
    def has_root(c0, c1):
        return any((x * x + c1 * x + c0) % 3 == 0 for x in range(3))

    expected = next(
        (c0, c1, 1) for c0, c1 in product(range(3), repeat=2) if not has_root(c0, c1)
    )
    assert expected == (1, 0, 1)  # x^2 + 1
    assert make_field(3, 2).modulus == expected


def test_make_field_rejects_bad_args():
    with pytest.raises(ValueError):
        make_field(6, 1)
    with pytest.raises(ValueError):
        make_field(2, 0)


def test_determinism_and_caching():
    assert make_field(5, 1) is make_field(5, 1)
    assert make_field(2, 4).modulus == make_field(2, 4).modulus


def test_arithmetic_examples():
    f7 = make_field(7, 1)
    assert f7.mul(3, 5) == 1
    assert f7.inv(3) == 5
    f4 = make_field(2, 2)
    assert f4.mul(2, 2) == 3  # x * x = x + 1
    f9 = make_field(3, 2)
    assert f9.mul(3, 3) == 2  # x * x = -1


def test_division_by_zero():
    f = make_field(5, 1)
    with pytest.raises(ZeroDivisionError):
        f.inv(0)
    with pytest.raises(ZeroDivisionError):
        f.div(3, 0)


def test_mixed_field_operands_rejected():
    a = make_field(3, 1).element(1)
    b = make_field(5, 1).element(1)
    with pytest.raises(ValueError):
        a + b


@pytest.mark.parametrize("p,n", [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (3, 2)])
def test_field_axioms_exhaustive(p, n):
    f = make_field(p, n)
    elems = range(f.q)
    for a, b in product(elems, repeat=2):
        assert f.add(a, b) == f.add(b, a)
        assert f.mul(a, b) == f.mul(b, a)
        assert f.add(a, f.neg(a)) == 0
    for a, b, c in product(elems, repeat=3):
        assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
        assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
        assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
    for a in range(1, f.q):
        assert f.mul(a, f.inv(a)) == 1


@pytest.mark.parametrize("p,n", [(2, 2), (3, 2), (2, 3), (2, 4), (3, 1)])
def test_frobenius_fixes_everything(p, n):
    f = make_field(p, n)
    assert all(f.pow(a, f.q) == a for a in range(f.q))


def test_encoding_bijection():
    f = make_field(3, 2)
    seen = set()
    for e in range(f.q):
        coeffs = f.element(e).coeffs
        assert all(0 <= c < 3 for c in coeffs)
        assert f.from_coeffs(list(coeffs)).encoding == e
        seen.add(coeffs)
    assert len(seen) == f.q


def test_subfield_prime_inside_gf9():
    f = make_field(3, 2)
    assert [x.encoding for x in subfield_elements(f, 1)] == [0, 1, 2]


def test_subfield_full_field():
    f = make_field(2, 2)
    assert len(subfield_elements(f, 2)) == 4


def test_subfield_gf16_quartic_oracle():
    # independent oracle: x with x^4 == x, by raw table multiplication
    f = make_field(2, 4)
    fixed = [a for a in range(16) if f.mul(f.mul(a, a), f.mul(a, a)) == a]
    assert len(fixed) == 4
    assert 0 in fixed and 1 in fixed
    enc = set(fixed)
    for a, b in product(fixed, repeat=2):
        assert f.add(a, b) in enc
        assert f.mul(a, b) in enc
    assert [x.encoding for x in subfield_elements(f, 2)] == sorted(fixed)


def test_subfield_requires_divisor():
    with pytest.raises(ValueError):
        subfield_elements(make_field(2, 4), 3)


def test_subfield_closure_property():
    for p, n, i in [(2, 4, 2), (3, 2, 1), (2, 3, 1)]:
        f = make_field(p, n)
        enc = {x.encoding for x in subfield_elements(f, i)}
        assert len(enc) == p**i
        for a, b in product(enc, repeat=2):
            assert f.add(a, b) in enc
            assert f.mul(a, b) in enc


def test_element_operators():
    f = make_field(7, 1)
    x = f.element(3)
    y = f.element(5)
    assert (x * y).encoding == 1
    assert (x + y).encoding == 1
    assert (x - y).encoding == 5
    assert (-x).encoding == 4
    assert (x / y).encoding == f.div(3, 5)
    assert x.inverse().encoding == 5
    assert (x**2).encoding == 2
    assert isinstance(x, FieldElement)


def test_field_serialization():
    assert make_field(3, 2).to_document() == {"p": 3, "n": 2, "modulus": [1, 0, 1]}


def test_gf81_axioms_at_desk_scale():
    f = make_field(3, 4)
    assert f.q == 81
    for a, b in product(range(81), repeat=2):
        assert f.mul(a, b) == f.mul(b, a)
        assert f.add(a, f.neg(a)) == 0
    for a in range(1, 81):
        assert f.mul(a, f.inv(a)) == 1
    stride = range(0, 81, 7)
    for a, b, c in product(stride, repeat=3):
        assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
        assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))


def test_gf121_builds_and_frobenius_holds():
    f = make_field(11, 2)
    assert f.q == 121
    assert all(f.pow(a, 121) == a for a in range(121))


def test_field_order_cap():
    with pytest.raises(ValueError):
        make_field(2, 10)  # 1024 points is past desk scale
