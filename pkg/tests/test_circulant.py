import pytest
from hypothesis import given, settings, strategies as st

from numhilbert import circulant as circ
from numhilbert.circulant import CirculantMatrix, ResidueVector
from numhilbert.errors import DimensionMismatch, ModulusMismatch

from oracles import dense_circulant, dense_matmul, dense_matvec, dense_transpose

INV13 = CirculantMatrix((0, 2, 0, 4, 0, 6), 13)
EIGHT_ROW = (0, 3, 0, -3, 0, 9, 0, 5)


def test_from_first_row_reduces():
    assert circ.from_first_row(EIGHT_ROW, 24).first_row == (0, 3, 0, 21, 0, 9, 0, 5)
    assert circ.from_first_row([1, 0, 0, 0], 7) == circ.identity(4, 7)
    assert circ.from_first_row([0, 2, 0, 4, 0, 6], 13).first_row == (0, 2, 0, 4, 0, 6)


def test_row_layout_matches_printed_matrix():
    assert INV13.rows() == [
        [0, 2, 0, 4, 0, 6],
        [6, 0, 2, 0, 4, 0],
        [0, 6, 0, 2, 0, 4],
        [4, 0, 6, 0, 2, 0],
        [0, 4, 0, 6, 0, 2],
        [2, 0, 4, 0, 6, 0],
    ]


@pytest.mark.parametrize("f, g", [
    ((1, 1, 1, 0, 0, 0), (2, 8, 6, 10, 4, 6)),
    ((1, 2, 3, 4, 5, 6), (4, 6, 5, 6, 5, 5)),
])
def test_mul_vec_examples(f, g):
    assert circ.mul_vec(INV13, ResidueVector(f, 13)).values == g


def test_mul_vec_identity_and_errors():
    f = ResidueVector((3, 1, 4, 1), 7)
    assert circ.mul_vec(circ.identity(4, 7), f) == f
    with pytest.raises(DimensionMismatch):
        circ.mul_vec(INV13, ResidueVector((1, 2, 3), 13))
    with pytest.raises(ModulusMismatch):
        circ.mul_vec(INV13, ResidueVector((1,) * 6, 11))


def test_mul_mat_examples():
    assert circ.mul_mat(INV13, INV13) == circ.identity(6, 13)
    assert circ.mul_mat(INV13, circ.identity(6, 13)) == INV13
    m = circ.from_first_row(EIGHT_ROW, 24)
    assert circ.scalar_identity_residue(circ.mul_mat(m, circ.transpose(m))) == 4
    with pytest.raises(ModulusMismatch):
        circ.mul_mat(INV13, circ.identity(6, 11))


def test_transpose_examples():
    assert circ.transpose(INV13).first_row == (0, 6, 0, 4, 0, 2)
    assert circ.transpose(circ.identity(5, 7)) == circ.identity(5, 7)
    assert circ.transpose(CirculantMatrix((0, 3, 0, 5), 11)).first_row == (0, 5, 0, 3)


def test_scalar_identity_residue():
    assert circ.scalar_identity_residue(circ.identity(6, 24).scale(4)) == 4
    assert circ.scalar_identity_residue(circ.identity(6, 13)) == 1
    assert circ.scalar_identity_residue(INV13) is None


def test_is_hilbert_pattern():
    assert circ.is_hilbert_pattern(circ.from_first_row(EIGHT_ROW, 24))
    assert not circ.is_hilbert_pattern(CirculantMatrix((1, 0, 0, 0), 7))
    assert not circ.is_hilbert_pattern(CirculantMatrix((0, 2, 0, 4, 0, 0), 13))
    assert not circ.is_hilbert_pattern(CirculantMatrix((0, 1, 0), 5))


rows_and_mod = st.integers(2, 60).flatmap(
    lambda m: st.integers(1, 10).flatmap(
        lambda n: st.tuples(st.lists(st.integers(-100, 100), min_size=n, max_size=n), st.just(m))
    )
)


@settings(max_examples=200)
@given(rows_and_mod, st.data())
def test_against_dense_oracle(rm, data):
    row, m = rm
    n = len(row)
    other = data.draw(st.lists(st.integers(0, m - 1), min_size=n, max_size=n))
    f = data.draw(st.lists(st.integers(0, m - 1), min_size=n, max_size=n))
    c, d = CirculantMatrix(tuple(row), m), CirculantMatrix(tuple(other), m)
    dc, dd = dense_circulant([v % m for v in row]), dense_circulant(other)
    assert c.rows() == dc
    assert circ.mul_vec(c, f).values == tuple(dense_matvec(dc, f, m))
    assert circ.mul_mat(c, d).rows() == dense_matmul(dc, dd, m)
    assert circ.transpose(c).rows() == dense_transpose(dc)
    assert circ.transpose(circ.transpose(c)) == c


@settings(max_examples=200)
@given(rows_and_mod, st.data())
def test_shift_commutation(rm, data):
    row, m = rm
    n = len(row)
    c = CirculantMatrix(tuple(row), m)
    f = ResidueVector(tuple(data.draw(st.lists(st.integers(0, m - 1), min_size=n, max_size=n))), m)
    i = data.draw(st.integers(-n, n))
    assert circ.mul_vec(c, f.rotate(i)) == circ.mul_vec(c, f).rotate(i)


def test_shift_reproduces_table_rows():
    # rows 2 -> 3 -> 4 of the 6-point table are successive right shifts
    f = ResidueVector((1, 1, 1, 0, 0, 0), 13)
    assert circ.mul_vec(INV13, f.rotate(1)).values == (6, 2, 8, 6, 10, 4)
    assert circ.mul_vec(INV13, f.rotate(2)).values == (4, 6, 2, 8, 6, 10)


@settings(max_examples=200)
@given(rows_and_mod, st.data())
def test_linearity(rm, data):
    row, m = rm
    n = len(row)
    c = CirculantMatrix(tuple(row), m)
    vec = st.lists(st.integers(0, m - 1), min_size=n, max_size=n)
    f, g = ResidueVector(tuple(data.draw(vec)), m), ResidueVector(tuple(data.draw(vec)), m)
    alpha, beta = data.draw(st.integers(-50, 50)), data.draw(st.integers(-50, 50))
    lhs = circ.mul_vec(c, f.scale(alpha) + g.scale(beta))
    assert lhs == circ.mul_vec(c, f).scale(alpha) + circ.mul_vec(c, g).scale(beta)


@given(st.lists(st.integers(-30, 30).filter(bool), min_size=2, max_size=8))
def test_gram_structural_zeros_and_symmetry(odd_entries):
    row = []
    for e in odd_entries:
        row += [0, e]
    gram = circ.gram_row(row)
    assert all(v == 0 for v in gram[1::2])
    assert gram[1:] == tuple(reversed(gram[1:]))
