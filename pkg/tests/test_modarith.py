from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, strategies as st

from numhilbert.errors import InvalidElement, NotInvertible, UnsupportedModulus
from numhilbert.modarith import (
    egcd,
    element_order,
    is_prime,
    lift_fraction,
    lift_rational,
    mod_inv,
    mod_sqrt,
)

from oracles import brute_is_prime, brute_order, brute_sqrt


@pytest.mark.parametrize("a, b, expected", [
    (9, 23, (1, 18, -7)),
    (4, 24, (4, 1, 0)),
    (0, 5, (5, 0, 1)),
])
def test_egcd_examples(a, b, expected):
    assert egcd(a, b) == expected


@given(st.integers(-10**12, 10**12), st.integers(-10**12, 10**12))
def test_egcd_bezout(a, b):
    g, x, y = egcd(a, b)
    assert g == gcd(a, b)
    assert a * x + b * y == g


@pytest.mark.parametrize("a, m, expected", [(9, 23, 18), (9, 31, 7), (6, 31, 26), (34, 47, 18)])
def test_mod_inv_examples(a, m, expected):
    assert mod_inv(a, m) == expected


def test_mod_inv_not_invertible():
    with pytest.raises(NotInvertible):
        mod_inv(4, 24)


@given(st.integers(-10**6, 10**6), st.integers(2, 10**6))
def test_mod_inv_matches_egcd(a, m):
    g, x, _ = egcd(a, m)
    if g != 1:
        with pytest.raises(NotInvertible):
            mod_inv(a, m)
    else:
        r = mod_inv(a, m)
        assert r == x % m
        assert a * r % m == 1


@pytest.mark.parametrize("c, m, expected", [
    (12, 23, (9, 14)),
    (19, 31, (9, 22)),
    (-12, 31, (9, 22)),
    (28, 47, (13, 34)),
    (2, 5, ()),
    (0, 7, (0,)),
    (1, 2, (1,)),
    (4, 24, (2, 10, 14, 22)),
])
def test_mod_sqrt_examples(c, m, expected):
    assert mod_sqrt(c, m) == expected


def test_mod_sqrt_exhaustive_small_moduli():
    for m in range(2, 1001):
        table = {}
        for r in range(m):
            table.setdefault(r * r % m, []).append(r)
        for c in range(m):
            got = mod_sqrt(c, m)
            assert got == tuple(table.get(c, ())), (c, m)
            if brute_is_prime(m) and m > 2 and c:
                assert len(got) in (0, 2)


@pytest.mark.parametrize("p", [998244353, 12289, 7681, 2**61 - 1])
def test_mod_sqrt_large_primes(p):
    # p = 1 mod 2^k with large k exercises the full Tonelli-Shanks loop
    hits = 0
    for c in range(2, 200):
        roots = mod_sqrt(c, p)
        assert len(roots) in (0, 2)
        assert all(r * r % p == c for r in roots)
        assert bool(roots) == (pow(c, (p - 1) // 2, p) == 1)
        hits += bool(roots)
    assert hits > 0


def test_mod_sqrt_composite_too_large():
    with pytest.raises(UnsupportedModulus):
        mod_sqrt(4, (1 << 20) + 2)


@pytest.mark.parametrize("g, p, expected", [(6, 31, 6), (30, 31, 2), (1, 31, 1)])
def test_element_order_examples(g, p, expected):
    assert element_order(g, p) == expected


def test_element_order_zero():
    with pytest.raises(InvalidElement):
        element_order(31, 31)


@pytest.mark.parametrize("p", [13, 31, 97, 101, 257])
def test_element_order_brute_force(p):
    for g in range(1, p):
        k = element_order(g, p)
        assert k == brute_order(g, p)
        assert (p - 1) % k == 0


def test_lift_rational():
    assert lift_rational(3, 2, 15) == 9
    assert lift_rational(5, 1, 15) == 5
    assert lift_fraction(Fraction(109, 4), 15) == 1
    with pytest.raises(NotInvertible):
        lift_rational(5, 3, 24)


@given(st.integers(-1000, 1000), st.integers(1, 50), st.sampled_from([7, 13, 23, 31, 47, 101]))
def test_lift_rational_periodic(num, den, m):
    if gcd(den, m) != 1:
        return
    r = lift_rational(num, den, m)
    assert r == lift_rational(num + den * m, den, m)
    assert den * r % m == num % m


@pytest.mark.parametrize("n, expected", [(23, True), (24, False), (1386, False), (1, False), (2, True)])
def test_is_prime_examples(n, expected):
    assert is_prime(n) is expected


def test_is_prime_matches_trial_division():
    assert all(is_prime(n) == brute_is_prime(n) for n in range(1, 20000))
    assert is_prime(2**61 - 1)
    assert not is_prime(3215031751)  # strong pseudoprime to bases 2, 3, 5, 7
