"""Number-theoretic Hilbert transforms.

An NHT is a circulant matrix over Z_m whose first row has zeros at even
offsets and nonzero entries at odd offsets, chosen so that ``N @ N.T`` (or
``N @ N``) is a scalar matrix modulo ``m``.  The family constructors below
pick ``m`` from the integer Gram/square so that the off-diagonal terms vanish.
"""

import enum
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import cached_property, reduce
from math import gcd
from typing import Optional, Sequence, Tuple, Union

from . import circulant as circ
from .circulant import CirculantMatrix, ResidueVector
from .errors import (
    ConditionViolated,
    DegenerateModulus,
    NoSquareRoot,
    NotInvertible,
    NotReducible,
    NotScalar,
    PatternViolated,
)
from .modarith import lift_fraction, mod_inv, mod_sqrt

Number = Union[int, Fraction]


class Kind(enum.Enum):
    UNNORMALIZED = "none"
    TRANSPOSE_INVERSE = "transpose"
    INVOLUTION = "involution"


class Relation(enum.Enum):
    """Which product a transform's constant refers to."""

    GRAM = "NNt"
    SQUARE = "NN"


@dataclass(frozen=True)
class NhtParams:
    family: str
    args: Tuple[Tuple[str, Number], ...]

    def __getitem__(self, name):
        return dict(self.args)[name]

    def as_tuple(self):
        return tuple(v for _, v in self.args)

    def __str__(self):
        return f"{self.family}(" + ", ".join(f"{k}={v}" for k, v in self.args) + ")"


@dataclass(frozen=True)
class NhtTransform:
    """An NHT matrix with its modulus and defining identity.

    ``claim`` is the constant ``c`` of the family's defining identity (``N N^T = c I``
    or ``N N = c I``, per ``relation``), kept as an exact number; ``None``
    when the matrix satisfies no scalar identity.  ``exact_row`` is the
    pre-reduction first row, ``None`` after normalization.
    """

    matrix: CirculantMatrix
    relation: Relation = Relation.GRAM
    claim: Optional[Number] = None
    kind: Kind = Kind.UNNORMALIZED
    scale: Optional[int] = None
    params: Optional[NhtParams] = None
    exact_row: Optional[Tuple[Number, ...]] = field(default=None, compare=False)

    @property
    def n(self) -> int:
        return self.matrix.n

    @property
    def modulus(self) -> int:
        return self.matrix.modulus

    @property
    def diag_const(self) -> Optional[int]:
        if self.claim is None:
            return None
        return lift_fraction(self.claim, self.modulus)

    @cached_property
    def _inverse_matrix(self) -> CirculantMatrix:
        m = self.matrix
        if self.kind is Kind.TRANSPOSE_INVERSE:
            return circ.transpose(m)
        if self.kind is Kind.INVOLUTION:
            return m
        c = self.diag_const
        if c is None:
            raise NotInvertible("transform satisfies no scalar identity")
        if gcd(c, self.modulus) != 1:
            raise NotInvertible(f"non-invertible gcd({c},{self.modulus})={gcd(c, self.modulus)}")
        base = circ.transpose(m) if self.relation is Relation.GRAM else m
        return base.scale(mod_inv(c, self.modulus))


@dataclass(frozen=True)
class VerificationReport:
    structural_ok: bool
    gram_scalar: Optional[int]
    square_scalar: Optional[int]
    claim_ok: Optional[bool]
    invertible: bool
    gcd_c_m: Optional[int]
    notes: Tuple[str, ...] = ()


def _build(row, m, relation, claim, params) -> NhtTransform:
    if m < 2:
        raise DegenerateModulus(f"modulus {m} < 2")
    lifted = tuple(lift_fraction(v, m) for v in row)
    matrix = CirculantMatrix(lifted, m)
    if not circ.is_hilbert_pattern(matrix):
        raise PatternViolated(f"row {lifted} mod {m} is not an alternating zero/nonzero row")
    t = NhtTransform(matrix, relation, claim, params=params, exact_row=tuple(row))
    product = _product(matrix, relation)
    if claim is not None and circ.scalar_identity_residue(product) != t.diag_const:
        raise NotScalar(f"{relation.value} != {claim}I mod {m} for row {row}")
    return t


def _product(matrix: CirculantMatrix, relation: Relation) -> CirculantMatrix:
    if relation is Relation.GRAM:
        return circ.mul_mat(matrix, circ.transpose(matrix))
    return circ.mul_mat(matrix, matrix)


def _hilbert_row(entries: Sequence[Number]) -> Tuple[Number, ...]:
    row = []
    for e in entries:
        row += [0, e]
    return tuple(row)


def _cleared(q: Fraction) -> int:
    return abs(Fraction(q).numerator)


def four_point(a: Number, b: Number) -> Tuple[NhtTransform, NhtTransform]:
    """The two 4-point transforms for row ``(0, a, 0, b)``.

    The first works modulo ``2ab`` with ``N N^T = (a^2 + b^2) I``; the second
    modulo ``a^2 + b^2`` with ``N N = 2ab I``.  Rational ``a, b`` are lifted
    into Z_m; each modulus is the numerator of the reduced fraction.
    """
    a, b = Fraction(a), Fraction(b)
    if a == 0 or b == 0:
        raise ValueError("a and b must be nonzero")
    params = NhtParams("four", (("a", a), ("b", b)))
    row = _hilbert_row((a, b))
    first = _build(row, _cleared(2 * a * b), Relation.GRAM, a * a + b * b, params)
    second = _build(row, _cleared(a * a + b * b), Relation.SQUARE, 2 * a * b, params)
    return first, second


def six_point_ap(a: int) -> Tuple[NhtTransform, NhtTransform]:
    """Row ``(0, a, 0, a+2, 0, a+4)``: ``N N^T = 12 I`` mod ``3a^2+12a+8`` and
    ``N N = -12 I`` mod ``3a^2+12a+16``."""
    if a < 1:
        raise ValueError(f"a must be >= 1, got {a}")
    params = NhtParams("six_ap", (("a", a),))
    row = _hilbert_row((a, a + 2, a + 4))
    first = _build(row, 3 * a * a + 12 * a + 8, Relation.GRAM, 12, params)
    second = _build(row, 3 * a * a + 12 * a + 16, Relation.SQUARE, -12, params)
    return first, second


def six_point_general(a: int, k: int, l: int) -> NhtTransform:
    """Row ``(0, a, 0, a+k, 0, a+l)`` with ``N N^T = (k^2+l^2-kl) I``."""
    if k == 0 or l == 0 or k == l:
        raise ValueError(f"need k, l nonzero and distinct, got k={k}, l={l}")
    m = 3 * a * a + 2 * a * k + 2 * a * l + k * l
    params = NhtParams("six_gen", (("a", a), ("k", k), ("l", l)))
    return _build(_hilbert_row((a, a + k, a + l)), m, Relation.GRAM, k * k + l * l - k * l, params)


def eight_condition(a: int, b: int, c: int, d: int) -> Tuple[int, int]:
    """Both sides of the 8-point invertibility condition."""
    return a * b + b * c + c * d + d * a, 2 * a * c + 2 * b * d


def eight_point(a: int, b: int, c: int, d: int) -> NhtTransform:
    lhs, rhs = eight_condition(a, b, c, d)
    if lhs != rhs:
        raise ConditionViolated(f"ab+bc+cd+da={lhs} != 2ac+2bd={rhs}")
    if not any((a, b, c, d)):
        raise ValueError("entries must not all be zero")
    m = abs(lhs)
    if m < 2:
        raise DegenerateModulus(f"modulus {m} < 2")
    params = NhtParams("eight", (("a", a), ("b", b), ("c", c), ("d", d)))
    return _build(_hilbert_row((a, b, c, d)), m, Relation.GRAM, a * a + b * b + c * c + d * d, params)


def _check_integer_pattern(row: Sequence[int]) -> None:
    if len(row) < 4 or len(row) % 2:
        raise PatternViolated(f"row length must be even and >= 4, got {len(row)}")
    if any(row[0::2]) or not all(row[1::2]):
        raise PatternViolated(f"row {tuple(row)} is not an alternating zero/nonzero row")


def infer_moduli(first_row: Sequence[int]) -> Tuple[int, int]:
    """``(gcd of off-diagonal Gram entries, Gram diagonal)`` over the integers.

    Any divisor ``>= 2`` of the first value is a modulus for which the row's
    Gram matrix is scalar.
    """
    _check_integer_pattern(first_row)
    gram = circ.gram_row(first_row)
    return reduce(gcd, gram[2::2], 0), gram[0]


def general_row(row: Sequence[int], modulus: Optional[int] = None) -> NhtTransform:
    """Wrap an arbitrary alternating row.

    Without ``modulus`` the Gram gcd is used, which makes ``N N^T`` scalar.
    With an explicit modulus the matrix is accepted as-is and the identity it
    satisfies (Gram, square or none) is recorded; ``verify`` reports failures.
    """
    row = tuple(int(v) for v in row)
    gram_gcd, diag = infer_moduli(row)
    m = gram_gcd if modulus is None else modulus
    if m < 2:
        raise DegenerateModulus(f"modulus {m} < 2")
    params = NhtParams("row", (("row", row),))
    matrix = CirculantMatrix(row, m)
    if not circ.is_hilbert_pattern(matrix):
        raise PatternViolated(f"row {row} mod {m} has a zero at an odd position")
    gram = circ.scalar_identity_residue(_product(matrix, Relation.GRAM))
    if gram is not None:
        return NhtTransform(matrix, Relation.GRAM, diag if gram_gcd % m == 0 else gram, params=params, exact_row=row)
    square = circ.scalar_identity_residue(_product(matrix, Relation.SQUARE))
    if square is not None:
        return NhtTransform(matrix, Relation.SQUARE, square, params=params, exact_row=row)
    return NhtTransform(matrix, Relation.GRAM, None, params=params, exact_row=row)


def with_modulus(t: NhtTransform, m: int) -> NhtTransform:
    """Rebuild an unnormalized transform from its exact row modulo a divisor of its modulus."""
    if t.kind is not Kind.UNNORMALIZED or t.exact_row is None:
        raise ValueError("only unnormalized transforms can be re-reduced")
    if m < 2:
        raise DegenerateModulus(f"modulus {m} < 2")
    if t.modulus % m:
        raise NotReducible(f"{m} does not divide {t.modulus}")
    return _build(t.exact_row, m, t.relation, t.claim, t.params)


def reduce_by_gcd(t: NhtTransform) -> NhtTransform:
    """Divide the modulus by ``g^2`` where ``g`` is the gcd of the row entries."""
    row = t.exact_row
    if t.kind is not Kind.UNNORMALIZED or row is None or any(Fraction(v).denominator != 1 for v in row):
        raise NotReducible("reduction needs an unnormalized transform with an integer row")
    g = reduce(gcd, (int(v) for v in row if v), 0)
    if g < 2 or t.modulus % (g * g):
        raise NotReducible(f"row gcd {g}: g^2 does not reduce modulus {t.modulus}")
    return with_modulus(t, t.modulus // (g * g))


def normalize(t: NhtTransform, target: Kind, root: Optional[int] = None) -> NhtTransform:
    """Divide the matrix by a square root of its scalar Gram (TRANSPOSE_INVERSE)
    or scalar square (INVOLUTION) so that the identity becomes ``I``.

    The smallest admissible root is used unless ``root`` is given.
    """
    if t.kind is not Kind.UNNORMALIZED:
        raise ValueError(f"transform is already {t.kind.value}")
    if target is Kind.UNNORMALIZED:
        return t
    m = t.modulus
    relation = Relation.GRAM if target is Kind.TRANSPOSE_INVERSE else Relation.SQUARE
    q = circ.scalar_identity_residue(_product(t.matrix, relation))
    if q is None:
        raise NotScalar(f"{relation.value} is not a scalar matrix mod {m}")
    if gcd(q, m) != 1:
        raise NotInvertible(f"non-invertible gcd({q},{m})={gcd(q, m)}")
    if root is not None:
        s = root % m
        if s * s % m != q:
            raise NoSquareRoot(f"{root}^2 != {q} mod {m}")
    else:
        roots = [r for r in mod_sqrt(q, m) if gcd(r, m) == 1]
        if not roots:
            raise NoSquareRoot(f"{q} is not a square mod {m}")
        s = roots[0]
    matrix = t.matrix.scale(mod_inv(s, m))
    return replace(t, matrix=matrix, relation=relation, claim=1, kind=target, scale=s, exact_row=None)


def _as_vector(t: NhtTransform, f) -> ResidueVector:
    return f if isinstance(f, ResidueVector) else ResidueVector(tuple(f), t.modulus)


def forward(t: NhtTransform, f) -> ResidueVector:
    return circ.mul_vec(t.matrix, _as_vector(t, f))


def inverse(t: NhtTransform, g) -> ResidueVector:
    return circ.mul_vec(t._inverse_matrix, _as_vector(t, g))


def verify(t: NhtTransform) -> VerificationReport:
    """Recompute the Gram and square of ``t`` from scratch and judge invertibility."""
    m = t.modulus
    notes = []
    structural = circ.is_hilbert_pattern(t.matrix)
    if not structural:
        notes.append("first row is not an alternating zero/nonzero pattern")
    gram = circ.scalar_identity_residue(_product(t.matrix, Relation.GRAM))
    square = circ.scalar_identity_residue(_product(t.matrix, Relation.SQUARE))
    if t.kind is Kind.TRANSPOSE_INVERSE:
        c, expected = gram, 1
    elif t.kind is Kind.INVOLUTION:
        c, expected = square, 1
    else:
        c = gram if t.relation is Relation.GRAM else square
        expected = t.diag_const
    claim_ok = None if expected is None else c == expected
    if claim_ok is False:
        notes.append(f"{t.relation.value} is not {expected}I mod {m}")
    if c is None:
        notes.append(f"{t.relation.value} is not a scalar matrix mod {m}")
        return VerificationReport(structural, gram, square, claim_ok, False, None, tuple(notes))
    g = gcd(c, m)
    if t.kind is Kind.UNNORMALIZED:
        invertible = g == 1
    else:
        invertible = c == 1
    if g != 1:
        notes.append(f"non-invertible gcd({c},{m})={g}")
    return VerificationReport(structural, gram, square, claim_ok, invertible, g, tuple(notes))


def _eight_ok(a, b, c, d, require_invertible):
    m = abs(a * b + b * c + c * d + d * a)
    if m < 2 or any(v % m == 0 for v in (a, b, c, d)):
        return False
    return not require_invertible or gcd(a * a + b * b + c * c + d * d, m) == 1


def search_eight_point(bound: int, require_invertible: bool = False):
    """All nonzero ``(a, b, c, d)`` with entries in ``[-bound, bound]`` that
    satisfy the 8-point condition, in lexicographic order.

    The condition is linear in ``d``, so ``d`` is solved for rather than
    enumerated.
    """
    if bound < 1:
        raise ValueError(f"bound must be >= 1, got {bound}")
    values = [v for v in range(-bound, bound + 1) if v]
    found = []
    for a in values:
        for b in values:
            for c in values:
                den = a + c - 2 * b
                num = 2 * a * c - a * b - b * c
                if den:
                    if num % den:
                        continue
                    ds = [num // den]
                    if not ds[0] or abs(ds[0]) > bound:
                        continue
                elif num:
                    continue
                else:
                    ds = values
                for d in ds:
                    if _eight_ok(a, b, c, d, require_invertible):
                        found.append(NhtParams("eight", (("a", a), ("b", b), ("c", c), ("d", d))))
    return found
