from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from relnorms.errors import InputError
from relnorms.exact import (RationalMatrix, independent_columns, kernel_basis, q_str, rank, rref,
                            solve_linear, to_q)

small = st.fractions(min_value=-6, max_value=6, max_denominator=4)


@st.composite
def matrices(draw, max_rows=5, max_cols=5):
    r = draw(st.integers(0, max_rows))
    c = draw(st.integers(1, max_cols))
    rows = draw(st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r))
    return RationalMatrix(rows, c)


def M(rows):
    return RationalMatrix(rows, len(rows[0]) if rows else 0)


def test_rref_examples():
    I = RationalMatrix.identity(2)
    assert rref(I) == (I, (0, 1), 2)
    Z = RationalMatrix.zeros(3, 3)
    assert rref(Z) == (Z, (), 0)
    red, piv, r = rref(M([[1, 2], [2, 4]]))
    assert red == M([[1, 2], [0, 0]]) and piv == (0,) and r == 1


def test_kernel_examples():
    assert kernel_basis(RationalMatrix.identity(3)) == []
    assert len(kernel_basis(RationalMatrix.zeros(2, 3))) == 3
    (v,) = kernel_basis(M([[1, 1]]))
    assert v[0] == -v[1] != 0


def test_solve_examples():
    assert solve_linear(RationalMatrix.identity(2), [3, Fraction(1, 2)]) == (3, Fraction(1, 2))
    assert solve_linear(RationalMatrix.zeros(2, 2), [1, 0]) is None
    assert solve_linear(M([[2]]), [1]) == (Fraction(1, 2),)
    with pytest.raises(InputError):
        solve_linear(M([[2]]), [1, 2])


def test_rational_strings():
    assert q_str(Fraction(6, 4)) == "3/2" and q_str(Fraction(-4, 2)) == "-2"
    assert to_q("3/6") == Fraction(1, 2)
    for bad in (0.5, True):
        with pytest.raises(InputError):
            to_q(bad)


def test_matrix_shape_is_checked():
    with pytest.raises(InputError):
        RationalMatrix([[1, 2], [3]], 2)


@given(matrices())
def test_rank_nullity(m):
    basis = kernel_basis(m)
    assert rank(m) + len(basis) == m.cols
    for v in basis:
        assert not any(m.apply(v))


@given(matrices())
def test_rref_is_reduced(m):
    red, piv, r = rref(m)
    assert r == len(piv)
    for i, j in enumerate(piv):
        assert red[i, j] == 1
        assert all(red[k, j] == 0 for k in range(red.rows) if k != i)
    assert all(not any(red.row(i)) for i in range(r, red.rows))


@given(matrices(), st.lists(small, min_size=5, max_size=5))
def test_solve_is_exact_or_inconsistent(m, b):
    b = b[:m.rows]
    x = solve_linear(m, b)
    if x is None:
        aug = m.hstack(RationalMatrix([[v] for v in b], 1)) if m.rows else m
        assert rank(aug) > rank(m)
    else:
        assert list(m.apply(x)) == list(b)


@given(matrices())
def test_independent_columns(m):
    cols = [m.column(j) for j in range(m.cols)]
    keep = independent_columns(cols)
    assert len(keep) == rank(m)
    assert rank(RationalMatrix([list(r) for r in zip(*[cols[k] for k in keep])], len(keep))
                if keep and m.rows else RationalMatrix.zeros(m.rows, 0)) == len(keep)
