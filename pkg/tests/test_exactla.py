from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from coringlab.exactla import (
    GF,
    QQ,
    Echelon,
    Matrix,
    field_from_name,
    kernel_basis,
    rank,
    rref,
    solve,
)
from coringlab.reports import InputError


def mat(field, rows):
    return Matrix.from_rows(field, rows)


class TestRref:
    def test_identity(self):
        m = Matrix.identity(QQ, 3)
        r, piv = rref(m)
        assert r == m
        assert piv == (0, 1, 2)

    def test_zero(self):
        m = Matrix.zeros(QQ, 2, 4)
        r, piv = rref(m)
        assert r == m
        assert piv == ()

    def test_rank_one(self):
        r, piv = rref(mat(QQ, [[1, 2], [2, 4]]))
        assert r.to_rows() == [[Fraction(1), Fraction(2)],
                               [Fraction(0), Fraction(0)]]
        assert piv == (0,)

    def test_idempotent(self):
        m = mat(QQ, [[2, 4, 1], [1, 3, 0], [3, 7, 1]])
        r, piv = rref(m)
        r2, piv2 = rref(r)
        assert r2 == r and piv2 == piv

    def test_pivots_increasing(self):
        m = mat(QQ, [[0, 1, 1], [1, 1, 0], [1, 2, 1]])
        _, piv = rref(m)
        assert list(piv) == sorted(piv)


class TestKernel:
    def test_identity_has_trivial_kernel(self):
        assert kernel_basis(Matrix.identity(QQ, 4)).cols == 0

    def test_zero_matrix(self):
        assert kernel_basis(Matrix.zeros(QQ, 2, 3)) == Matrix.identity(QQ, 3)

    def test_gf2_line(self):
        # the only nonzero solution of x + y = 0 over GF(2), by enumeration
        m = mat(GF(2), [[1, 1]])
        solutions = [
            (x, y)
            for x in range(2)
            for y in range(2)
            if (x + y) % 2 == 0 and (x, y) != (0, 0)
        ]
        assert solutions == [(1, 1)]
        assert kernel_basis(m).to_rows() == [[1], [1]]


class TestSolve:
    def test_identity(self):
        rhs = mat(QQ, [[3], [5]])
        assert solve(Matrix.identity(QQ, 2), rhs) == rhs

    def test_scalar(self):
        s = solve(mat(QQ, [[2]]), mat(QQ, [[1]]))
        assert s.to_rows() == [[Fraction(1, 2)]]

    def test_inconsistent(self):
        assert solve(mat(QQ, [[1], [1]]), mat(QQ, [[1], [2]])) is None

    def test_shape_mismatch(self):
        with pytest.raises(InputError):
            solve(mat(QQ, [[1]]), mat(QQ, [[1], [2]]))


class TestFields:
    def test_gf_requires_prime(self):
        with pytest.raises(InputError):
            GF(6)

    def test_parse(self):
        assert QQ.parse("3/4") == Fraction(3, 4)
        assert GF(5).parse("7") == 2
        assert GF(5).parse("1/2") == 3  # 2 * 3 = 6 = 1 mod 5

    def test_field_from_name(self):
        assert field_from_name("QQ") is QQ
        assert field_from_name("GF(7)").p == 7
        with pytest.raises(InputError):
            field_from_name("R")


small_entries = st.integers(min_value=-4, max_value=4)


@st.composite
def random_matrix(draw, field):
    rows = draw(st.integers(min_value=1, max_value=5))
    cols = draw(st.integers(min_value=1, max_value=5))
    data = draw(st.lists(
        st.lists(small_entries, min_size=cols, max_size=cols),
        min_size=rows, max_size=rows))
    return Matrix.from_rows(field, data)


@settings(max_examples=40, deadline=None)
@given(random_matrix(QQ))
def test_rank_nullity_rational(m):
    assert rank(m) + kernel_basis(m).cols == m.cols


@settings(max_examples=40, deadline=None)
@given(random_matrix(GF(5)))
def test_rank_nullity_gf5(m):
    k = kernel_basis(m)
    assert rank(m) + k.cols == m.cols
    assert (m @ k).is_zero()


@settings(max_examples=40, deadline=None)
@given(random_matrix(QQ), st.lists(small_entries, min_size=5, max_size=5))
def test_solve_exact(m, xs):
    x = Matrix.from_rows(QQ, [[v] for v in xs[:m.cols]])
    b = m @ x
    s = solve(m, b)
    assert s is not None
    assert m @ s == b


@settings(max_examples=40, deadline=None)
@given(random_matrix(QQ))
def test_rref_unique_under_row_shuffle(m):
    rows = m.to_rows()
    shuffled = Matrix.from_rows(QQ, list(reversed(rows)))
    r1, p1 = rref(m)
    r2, p2 = rref(shuffled)
    assert p1 == p2
    assert r1.data == r2.data


def test_echelon_reduce_consistency():
    ech = Echelon(QQ, 4)
    vecs = [{0: QQ.one(), 2: QQ.from_int(2)}, {1: QQ.one(), 2: QQ.one()},
            {0: QQ.one(), 1: QQ.from_int(2)}]
    for v in vecs:
        ech.add(v)
    for v in vecs:
        assert ech.reduce(v) == {}


def test_kron_indexing():
    a = mat(QQ, [[1, 2], [3, 4]])
    b = mat(QQ, [[0, 1], [1, 0]])
    k = a.kron(b)
    # (i1,i2),(j1,j2) entry is a[i1,j1] b[i2,j2]
    assert k.entry(0 * 2 + 0, 0 * 2 + 1) == Fraction(1)
    assert k.entry(1 * 2 + 0, 0 * 2 + 1) == Fraction(3)


def _dense_rref(rows):
    """Textbook dense reduction, written independently of the library."""
    rows = [list(map(Fraction, r)) for r in rows]
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col] != 0),
                     None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][col]
        rows[r] = [v / pv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                c = rows[i][col]
                rows[i] = [v - c * w for v, w in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    return rows, pivots


@settings(max_examples=40, deadline=None)
@given(random_matrix(QQ))
def test_rref_matches_dense_oracle(m):
    dense_rows, dense_pivots = _dense_rref(m.to_rows())
    r, piv = rref(m)
    assert list(piv) == dense_pivots
    assert r.to_rows() == dense_rows
