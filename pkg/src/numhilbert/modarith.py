"""Exact modular arithmetic: gcd, inverses, square roots, orders, primality.

Residues are plain ``int`` values canonicalized to ``[0, m)``.
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Tuple

from .errors import InvalidElement, NotInvertible, UnsupportedModulus

BRUTE_FORCE_LIMIT = 1 << 20

# Deterministic Miller-Rabin for n < 3.3e24 with these bases.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_LIMIT = 3317044064679887385961981


def egcd(a: int, b: int) -> Tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``a*x + b*y == g == gcd(|a|, |b|)``.

    ``x`` is reduced into ``[0, |b|/g)`` when ``b != 0``.
    """
    old_r, r = abs(a), abs(b)
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if a < 0:
        old_x = -old_x
    if b < 0:
        old_y = -old_y
    if b and old_r:
        old_x %= abs(b) // old_r
        old_y = (old_r - a * old_x) // b
    return old_r, old_x, old_y


def _check_modulus(m: int) -> None:
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")


def mod_inv(a: int, m: int) -> int:
    _check_modulus(m)
    try:
        return pow(a, -1, m)
    except ValueError:
        raise NotInvertible(f"{a} has no inverse mod {m} (gcd {gcd(a, m)})") from None


def lift_rational(num: int, den: int, m: int) -> int:
    """Map ``num/den`` into Z_m, i.e. ``num * den^-1 mod m``."""
    if den == 0:
        raise ZeroDivisionError("denominator is zero")
    return num * mod_inv(den, m) % m


def lift_fraction(q: Fraction, m: int) -> int:
    q = Fraction(q)
    return lift_rational(q.numerator, q.denominator, m)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    if n >= _MR_LIMIT:
        raise UnsupportedModulus(f"primality of {n} outside deterministic range")
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorize(n: int) -> dict:
    """Trial-division factorization; fine for the desk-scale moduli used here."""
    factors = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def _tonelli_shanks(c: int, p: int) -> int:
    # p odd prime, c a nonzero quadratic residue
    if p % 4 == 3:
        return pow(c, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    mm, cc, t, r = s, pow(z, q, p), pow(c, q, p), pow(c, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(cc, 1 << (mm - i - 1), p)
        mm, cc = i, b * b % p
        t, r = t * cc % p, r * b % p
    return r


def mod_sqrt(c: int, m: int) -> Tuple[int, ...]:
    """All ``r`` in ``[0, m)`` with ``r*r == c (mod m)``, ascending.

    Prime moduli use Tonelli-Shanks; composite moduli up to 2**20 are
    searched exhaustively.
    """
    _check_modulus(m)
    c %= m
    if is_prime(m):
        if c == 0:
            return (0,)
        if m == 2:
            return (1,)
        if pow(c, (m - 1) // 2, m) != 1:
            return ()
        r = _tonelli_shanks(c, m)
        return tuple(sorted({r, m - r}))
    if m > BRUTE_FORCE_LIMIT:
        raise UnsupportedModulus(f"square roots mod composite {m} > 2**20 not supported")
    return _square_table(m).get(c, ())


@lru_cache(maxsize=32)
def _square_table(m: int) -> dict:
    table = {}
    for r in range(m):
        table.setdefault(r * r % m, []).append(r)
    return {c: tuple(rs) for c, rs in table.items()}


def element_order(g: int, p: int) -> int:
    """Multiplicative order of ``g`` modulo the prime ``p``."""
    g %= p
    if g == 0:
        raise InvalidElement(f"0 has no multiplicative order mod {p}")
    order = p - 1
    for q in factorize(p - 1):
        while order % q == 0 and pow(g, order // q, p) == 1:
            order //= q
    return order

