from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qzeta.errors import ConventionMismatch, NonIntegerExponent, NotAPolynomial
from qzeta.zeta import (
    DELTA_FORM,
    CyclotomicProduct,
    IntPolynomial,
    expand,
    format_rational,
    lefschetz,
    milnor,
    parse_rational,
    root_multiset,
    series_check,
    subst_power,
    to_delta,
    twist,
    z_degree,
    z_mul,
)


def Z(factors):
    return CyclotomicProduct(factors)


def D(factors):
    return CyclotomicProduct(factors, 1, DELTA_FORM)


def poly(*coeffs):
    return IntPolynomial(tuple(coeffs))


def test_z_mul():
    assert z_mul(D({2: 1}), D({2: -1})).is_one()
    assert z_mul(D({3: 1}), D({3: 1})) == D({3: 2})
    prod = z_mul(z_mul(Z({4: 1}), Z({6: 1})), Z({12: -2}))
    assert dict(prod.factors) == {4: 1, 6: 1, 12: -2}
    with pytest.raises(ConventionMismatch):
        z_mul(Z({2: 1}), D({2: 1}))


def test_z_degree():
    assert z_degree(Z({3: -1})) == -3
    assert z_degree(CyclotomicProduct.one()) == 0
    assert z_degree(Z({4: 1, 6: 1, 12: -2})) == -14


def test_to_delta_examples():
    assert expand(to_delta(Z({2: 0}), 1)) == poly(-1, 1)
    cusp = Z({6: -1, 2: 1, 3: 1})
    assert to_delta(cusp, 1) == D({1: 1, 6: 1, 2: -1, 3: -1})
    brieskorn_222 = Z({2: 4 - 6 + 3})  # every stratum of (2,2,2) has m/ell = 2
    assert expand(to_delta(brieskorn_222, 2)) == poly(1, 1)


def test_expand_examples():
    assert expand(D({1: 1, 6: 1, 2: -1, 3: -1})) == poly(1, -1, 1)
    assert expand(D({3: 1, 1: -1})) == poly(1, 1, 1)
    p = expand(D({1: 1, 12: 2, 4: -1, 6: -1}))
    assert p.degree == 15 and abs(p(0)) == 1
    with pytest.raises(NotAPolynomial):
        expand(D({2: -1}))
    with pytest.raises(NonIntegerExponent):
        expand(D({Fraction(1, 2): 1}))


def test_milnor():
    assert milnor(Z({11: -1}), 1) == 12
    assert milnor(Z({Fraction(11, 6): -1}), 1) == Fraction(17, 6)
    assert milnor(CyclotomicProduct.one(), 1) == 1


def test_lefschetz():
    assert all(lefschetz(Z({1: 1}), k) == 1 for k in range(1, 10))
    z = Z({12: -2, 4: 1, 6: 1})
    assert lefschetz(z, 4) == 4
    assert lefschetz(z, 12) == -14
    assert lefschetz(z, 0) == z_degree(z)
    with pytest.raises(NonIntegerExponent):
        lefschetz(Z({Fraction(1, 2): 1}), 1)


def test_series_check():
    assert series_check(Z({1: 1}), 20)
    assert series_check(Z({2: 3, 5: -1}), 50)
    assert not series_check(Z({2: 3, 5: -1}), 50, {2: 7})


def test_twist():
    cusp = D({1: 1, 6: 1, 2: -1, 3: -1})
    assert expand(twist(cusp, 2)) == poly(1, 1, 1)
    assert twist(cusp, 1) == cusp
    assert twist(D({6: 1}), 4) == D({3: 2})


def test_subst_power():
    assert subst_power(Z({6: -1}), Fraction(1, 2)) == Z({3: -1})
    assert subst_power(Z({3: -1}), 2) == Z({6: -1})
    assert subst_power(Z({Fraction(11, 6): -1}), 6) == Z({11: -1})


def test_rationals_and_json():
    assert parse_rational("11/6") == Fraction(11, 6)
    assert parse_rational(3) == 3
    assert format_rational(Fraction(4, 2)) == "2"
    z = Z({Fraction(11, 6): -1, 3: 2})
    assert CyclotomicProduct.from_json(z.to_json()) == z
    assert z.to_json()["factors"][0] == {"m": "11/6", "e": -1}


def test_root_multiset_cusp():
    roots = root_multiset(D({1: 1, 6: 1, 2: -1, 3: -1}))
    assert roots == {Fraction(1, 6): 1, Fraction(5, 6): 1}


products = st.dictionaries(st.integers(1, 30), st.integers(-4, 4), max_size=6)


@settings(max_examples=100, deadline=None)
@given(products)
def test_series_check_holds_for_any_product(factors):
    assert series_check(Z(factors), 60)


@settings(max_examples=100, deadline=None)
@given(products, products)
def test_degree_is_additive(a, b):
    assert z_degree(Z(a) * Z(b)) == z_degree(Z(a)) + z_degree(Z(b))


@settings(max_examples=100, deadline=None)
@given(products, st.integers(1, 5))
def test_twist_preserves_degree_and_subst_scales_it(factors, k):
    d = D(factors)
    assert z_degree(twist(d, k)) == z_degree(d)
    assert z_degree(subst_power(d, k)) == k * z_degree(d)
    assert subst_power(subst_power(d, k), Fraction(1, k)) == d


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(1, 12), min_size=1, max_size=4), st.lists(st.integers(1, 12), max_size=4))
def test_expand_of_genuine_products(num, den):
    # (t^a - 1) / (t^b - 1) is a polynomial when b | a
    factors = {}
    for a in num:
        factors[a] = factors.get(a, 0) + 1
    for a, b in zip(num, den):
        if a % b == 0:
            factors[b] = factors.get(b, 0) - 1
    p = expand(D(factors))
    assert p.degree == z_degree(D(factors))
    assert sum(root_multiset(D(factors)).values()) == p.degree
