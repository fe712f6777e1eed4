from itertools import product

import pytest

from laguerre_dd.dual_numbers import (
    all_duals,
    dual,
    dual_from_encoding,
    dual_inverse,
    dual_one,
    epsilon,
    is_unit,
    laguerre_algebra_check,
)
from laguerre_dd.finite_field import make_field


def test_epsilon_squares_to_zero():
    for p, n in [(2, 1), (3, 1), (2, 2), (3, 2)]:
        e = epsilon(make_field(p, n))
        assert (e * e).encoding == 0


def test_additive_identity():
    f = make_field(5, 1)
    z = dual(f, 0, 0)
    for u in all_duals(f):
        assert u + z == u


def test_multiplication_rule_gf3():
    f = make_field(3, 1)
    assert dual(f, 1, 2) * dual(f, 2, 1) == dual(f, 2, 2)


def test_unit_examples():
    f = make_field(7, 1)
    assert is_unit(dual(f, 1, 5))
    assert not is_unit(dual(f, 0, 3))


def test_unit_count_gf4_by_inverse_search():
    # oracle: an element is a unit iff some product with it gives 1
    f = make_field(2, 2)
    elems = all_duals(f)
    one = dual_one(f)
    units = [u for u in elems if any(u * v == one for v in elems)]
    assert len(units) == 12
    assert all(is_unit(u) for u in units)
    assert sum(1 for u in elems if is_unit(u)) == 12


def test_inverse_examples():
    f5 = make_field(5, 1)
    assert dual_inverse(dual(f5, 1, 0)) == dual(f5, 1, 0)
    assert dual_inverse(dual(f5, 2, 0)) == dual(f5, 3, 0)


def test_inverse_gf5_matches_exhaustive_search():
    # a^-1 = 3 and -a^-2 b = -9*3 = -27 = 3 (mod 5), so (2,3)^-1 = (3,3)
    f = make_field(5, 1)
    u = dual(f, 2, 3)
    one = dual_one(f)
    found = [v for v in all_duals(f) if u * v == one]
    assert found == [dual(f, 3, 3)]
    assert dual_inverse(u) == found[0]
    assert u * dual_inverse(u) == one


def test_inverse_requires_unit():
    f = make_field(3, 1)
    with pytest.raises(ZeroDivisionError):
        dual_inverse(dual(f, 0, 2))


def test_laguerre_algebra_examples():
    assert laguerre_algebra_check(make_field(2, 1))
    assert laguerre_algebra_check(make_field(3, 1))
    assert laguerre_algebra_check(make_field(3, 2))


@pytest.mark.parametrize("p,n", [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)])
def test_cardinalities(p, n):
    f = make_field(p, n)
    q = f.q
    elems = all_duals(f)
    assert len(elems) == q * q
    assert sum(1 for u in elems if is_unit(u)) == q * (q - 1)
    assert sum(1 for u in elems if not is_unit(u)) == q


@pytest.mark.parametrize("p,n", [(2, 1), (3, 1), (2, 2), (5, 1)])
def test_inverse_is_involution(p, n):
    f = make_field(p, n)
    for u in all_duals(f):
        if is_unit(u):
            assert dual_inverse(dual_inverse(u)) == u


@pytest.mark.parametrize("p,n", [(2, 1), (3, 1), (2, 2), (3, 2)])
def test_ideal_absorbs_multiplication(p, n):
    f = make_field(p, n)
    elems = all_duals(f)
    ideal = [u for u in elems if not is_unit(u)]
    for m, u in product(ideal, elems):
        assert not is_unit(m * u)


def test_ring_axioms_gf3():
    f = make_field(3, 1)
    elems = all_duals(f)
    for u, v in product(elems, repeat=2):
        assert u + v == v + u
        assert u * v == v * u
    for u, v, w in product(elems, repeat=3):
        assert (u + v) + w == u + (v + w)
        assert (u * v) * w == u * (v * w)
        assert u * (v + w) == u * v + u * w


def test_encoding_roundtrip():
    f = make_field(3, 2)
    for u in all_duals(f):
        assert dual_from_encoding(f, u.encoding) == u


def test_mixed_field_rejected():
    a = dual(make_field(3, 1), 1, 1)
    b = dual(make_field(5, 1), 1, 1)
    with pytest.raises(ValueError):
        a * b
