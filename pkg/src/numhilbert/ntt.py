"""Dense number-theoretic Fourier transform over a prime field.

``L[i][j] = g^(i*j) mod p`` for an element ``g`` of multiplicative order
exactly ``n``; the inverse is ``n^-1 * [g^(-i*j)]``.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional

from .circulant import ResidueVector
from .errors import DimensionMismatch, InvalidElement, ModulusMismatch, NoSuchElement, NotInvertible
from .modarith import element_order, is_prime, mod_inv


@dataclass(frozen=True)
class NttTransform:
    p: int
    n: int
    g: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.n < 1 or (self.p - 1) % self.n:
            raise NoSuchElement(f"{self.n} does not divide {self.p - 1}")
        if element_order(self.g, self.p) != self.n:
            raise InvalidElement(f"{self.g} does not have order {self.n} mod {self.p}")

    @property
    def modulus(self) -> int:
        return self.p


def find_order_n_element(p: int, n: int) -> int:
    """Smallest ``g >= 2`` of multiplicative order ``n`` modulo ``p``."""
    if n < 1 or (p - 1) % n:
        raise NoSuchElement(f"{n} does not divide {p} - 1")
    if n == 1:
        return 1
    for g in range(2, p):
        if element_order(g, p) == n:
            return g
    raise NoSuchElement(f"no element of order {n} mod {p}")


def make(p: int, n: int, g: Optional[int] = None) -> NttTransform:
    return NttTransform(p, n, find_order_n_element(p, n) if g is None else g % p)


@lru_cache(maxsize=64)
def _powers(g: int, n: int, p: int):
    return tuple(tuple(pow(g, i * j, p) for j in range(n)) for i in range(n))


def build_matrix(t: NttTransform) -> List[List[int]]:
    return [list(row) for row in _powers(t.g, t.n, t.p)]


def inverse_matrix_unscaled(t: NttTransform) -> List[List[int]]:
    """``[g^(-i*j)]``; multiply by ``n^-1`` (see ``inverse_scale``) for the true inverse."""
    return [list(row) for row in _powers(mod_inv(t.g, t.p), t.n, t.p)]


def inverse_scale(t: NttTransform) -> int:
    try:
        return mod_inv(t.n, t.p)
    except NotInvertible:
        raise NotInvertible(f"block length {t.n} not invertible mod {t.p}") from None


def _matvec(rows, f, p):
    return tuple(sum(a * b for a, b in zip(row, f)) % p for row in rows)


def _check(t: NttTransform, f) -> ResidueVector:
    if not isinstance(f, ResidueVector):
        f = ResidueVector(tuple(f), t.p)
    if len(f) != t.n:
        raise DimensionMismatch(f"length {len(f)} != {t.n}")
    if f.modulus != t.p:
        raise ModulusMismatch(f"modulus {f.modulus} != {t.p}")
    return f


def forward(t: NttTransform, f) -> ResidueVector:
    f = _check(t, f)
    return ResidueVector(_matvec(_powers(t.g, t.n, t.p), f.values, t.p), t.p)


def inverse(t: NttTransform, h) -> ResidueVector:
    h = _check(t, h)
    s = inverse_scale(t)
    raw = _matvec(_powers(mod_inv(t.g, t.p), t.n, t.p), h.values, t.p)
    return ResidueVector(tuple(s * v for v in raw), t.p)
