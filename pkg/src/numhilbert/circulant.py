"""Circulant matrices over Z_m stored by their first row.

Row ``i``, column ``j`` of the matrix is ``first_row[(j - i) % n]``: each row
is the previous one shifted right by one place.
"""

from dataclasses import dataclass
from functools import cached_property
from operator import mul
from typing import Optional, Sequence, Tuple

from .errors import DimensionMismatch, ModulusMismatch


@dataclass(frozen=True)
class ResidueVector:
    values: Tuple[int, ...]
    modulus: int

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {self.modulus}")
        object.__setattr__(self, "values", tuple(int(v) % self.modulus for v in self.values))

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def rotate(self, i: int) -> "ResidueVector":
        """Cyclic right shift by ``i`` places: ``out[k] = values[k - i]``."""
        n = len(self.values)
        return ResidueVector(tuple(self.values[(k - i) % n] for k in range(n)), self.modulus)

    def scale(self, alpha: int) -> "ResidueVector":
        return ResidueVector(tuple(alpha * v for v in self.values), self.modulus)

    def __add__(self, other: "ResidueVector") -> "ResidueVector":
        _check_compatible(len(self), self.modulus, len(other), other.modulus)
        return ResidueVector(tuple(a + b for a, b in zip(self.values, other.values)), self.modulus)


def _check_compatible(n1, m1, n2, m2):
    if n1 != n2:
        raise DimensionMismatch(f"length {n1} != {n2}")
    if m1 != m2:
        raise ModulusMismatch(f"modulus {m1} != {m2}")


def cyclic_product(row_a: Sequence[int], row_b: Sequence[int]) -> Tuple[int, ...]:
    """First row of the product of two circulants, over the integers."""
    n = len(row_a)
    if len(row_b) != n:
        raise DimensionMismatch(f"length {n} != {len(row_b)}")
    out = [0] * n
    for k, a in enumerate(row_a):
        if a:
            for j in range(n):
                out[j] += a * row_b[(j - k) % n]
    return tuple(out)


def reverse_row(row: Sequence[int]) -> Tuple[int, ...]:
    """First row of the transpose: ``(c0, c[n-1], ..., c1)``."""
    return (row[0],) + tuple(reversed(row[1:]))


def gram_row(row: Sequence[int]) -> Tuple[int, ...]:
    """Integer first row of ``N @ N.T``."""
    return cyclic_product(row, reverse_row(row))


def square_row(row: Sequence[int]) -> Tuple[int, ...]:
    """Integer first row of ``N @ N``."""
    return cyclic_product(row, row)


@dataclass(frozen=True)
class CirculantMatrix:
    first_row: Tuple[int, ...]
    modulus: int

    def __post_init__(self):
        if not self.first_row:
            raise ValueError("first row must be non-empty")
        if self.modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {self.modulus}")
        object.__setattr__(self, "first_row", tuple(int(v) % self.modulus for v in self.first_row))

    @property
    def n(self) -> int:
        return len(self.first_row)

    def entry(self, i: int, j: int) -> int:
        return self.first_row[(j - i) % self.n]

    def rows(self):
        """Dense n x n list-of-lists view."""
        return [list(r) for r in self._dense]

    @cached_property
    def _dense(self):
        n, row = self.n, self.first_row
        return tuple(tuple(row[(j - i) % n] for j in range(n)) for i in range(n))

    def scale(self, alpha: int) -> "CirculantMatrix":
        return CirculantMatrix(tuple(alpha * v for v in self.first_row), self.modulus)


def from_first_row(row: Sequence[int], m: int) -> CirculantMatrix:
    return CirculantMatrix(tuple(row), m)


def identity(n: int, m: int) -> CirculantMatrix:
    return CirculantMatrix((1,) + (0,) * (n - 1), m)


def mul_vec(c: CirculantMatrix, f) -> ResidueVector:
    if not isinstance(f, ResidueVector):
        f = ResidueVector(tuple(f), c.modulus)
    _check_compatible(c.n, c.modulus, len(f), f.modulus)
    vals = f.values
    return ResidueVector(tuple(sum(map(mul, r, vals)) for r in c._dense), c.modulus)


def mul_mat(c: CirculantMatrix, d: CirculantMatrix) -> CirculantMatrix:
    _check_compatible(c.n, c.modulus, d.n, d.modulus)
    return CirculantMatrix(cyclic_product(c.first_row, d.first_row), c.modulus)


def transpose(c: CirculantMatrix) -> CirculantMatrix:
    return CirculantMatrix(reverse_row(c.first_row), c.modulus)


def scalar_identity_residue(c: CirculantMatrix) -> Optional[int]:
    """Return ``s`` when ``c == s*I (mod m)``, else ``None``."""
    if any(c.first_row[1:]):
        return None
    return c.first_row[0]


def is_hilbert_pattern(c: CirculantMatrix) -> bool:
    row = c.first_row
    if len(row) % 2:
        return False
    return all(v == 0 for v in row[0::2]) and all(v != 0 for v in row[1::2])
