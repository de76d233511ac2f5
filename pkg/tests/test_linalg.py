from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from liedual.linalg import (
    CompositionMismatch, NonzeroComposition, SparseMatrix, complex_cohomology_dims,
    format_scalar, kernel_basis, rank, scalar,
)


def M(rows):
    return SparseMatrix.from_dense(rows)


def test_rank_examples():
    assert rank(SparseMatrix.identity(2)) == 2
    assert rank(SparseMatrix.zero(3, 5)) == 0
    assert rank(SparseMatrix.zero(0, 4)) == 0
    assert rank(M([[1, 2], [2, 4]])) == 1


def test_kernel_examples():
    assert kernel_basis(SparseMatrix.identity(3)) == []
    assert len(kernel_basis(SparseMatrix.zero(2, 3))) == 3
    (v,) = kernel_basis(M([[1, 1]]))
    assert v[0] == -v[1] != 0


def test_cohomology_examples():
    assert complex_cohomology_dims([M([[0]])]).cohomology == (1, 1)
    assert complex_cohomology_dims([M([[1]])]).cohomology == (0, 0)
    d0 = M([[1], [0]])
    d1 = M([[0, 1]])
    assert complex_cohomology_dims([d0, d1]).cohomology == (0, 0, 0)


def test_cohomology_errors():
    with pytest.raises(CompositionMismatch):
        complex_cohomology_dims([M([[1, 0]]), M([[1, 0]])])
    with pytest.raises(NonzeroComposition):
        complex_cohomology_dims([M([[1]]), M([[1]])])


def test_empty_complex():
    assert complex_cohomology_dims([], dims=[3]).cohomology == (3,)


def test_scalar_parsing():
    assert scalar("3/6") == Fraction(1, 2)
    assert scalar("-4") == -4
    assert format_scalar(Fraction(-2, 4)) == "-1/2"
    with pytest.raises(TypeError):
        scalar(0.5)
    with pytest.raises(ValueError):
        scalar("0.5")


def test_immutable():
    m = SparseMatrix.identity(2)
    with pytest.raises(AttributeError):
        m.nrows = 3
    assert m.entries.get((0, 0)) == 1
    with pytest.raises(TypeError):
        m.entries[(0, 1)] = 5


def test_zero_entries_dropped():
    m = SparseMatrix(2, 2, {(0, 0): 0, (1, 1): 3})
    assert m.nnz() == 1
    with pytest.raises(IndexError):
        SparseMatrix(2, 2, {(2, 0): 1})


small = st.fractions(min_value=-4, max_value=4, max_denominator=3)


@st.composite
def sparse_matrices(draw, max_dim=7):
    r = draw(st.integers(0, max_dim))
    c = draw(st.integers(0, max_dim))
    cells = draw(st.lists(st.tuples(st.integers(0, max(r - 1, 0)), st.integers(0, max(c - 1, 0)), small),
                          max_size=r * c))
    if r == 0 or c == 0:
        return SparseMatrix(r, c)
    return SparseMatrix(r, c, {(i, j): v for i, j, v in cells})


def sympy_rank(m):
    if m.nrows == 0 or m.ncols == 0:
        return 0
    return sympy.Matrix([[sympy.Rational(v.numerator, v.denominator) for v in row]
                         for row in m.to_dense()]).rank()


@settings(max_examples=150, deadline=None)
@given(sparse_matrices())
def test_rank_matches_sympy_and_transpose(m):
    r = rank(m)
    assert r == sympy_rank(m)
    assert r == rank(m.transpose())


@settings(max_examples=100, deadline=None)
@given(sparse_matrices(), st.randoms(use_true_random=False), st.lists(small.filter(bool), min_size=8, max_size=8))
def test_rank_invariant_under_permutation_and_scaling(m, rnd, scales):
    rows = list(range(m.nrows))
    cols = list(range(m.ncols))
    rnd.shuffle(rows)
    rnd.shuffle(cols)
    ent = {(rows[i], cols[j]): v * scales[i % 8] for (i, j), v in m.entries.items()}
    assert rank(SparseMatrix(m.nrows, m.ncols, ent)) == rank(m)


@settings(max_examples=100, deadline=None)
@given(sparse_matrices())
def test_kernel_vectors_annihilated(m):
    basis = kernel_basis(m)
    assert len(basis) == m.ncols - rank(m)
    for v in basis:
        assert all(x == 0 for x in m.apply(v))


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3)), min_size=2, max_size=5),
       st.randoms(use_true_random=False))
def test_euler_characteristic(blocks, rnd):
    # C^q = A_q + B_q; d sends A_q into B_{q+1} and kills B_q, so d o d = 0
    mats = []
    for q in range(len(blocks) - 1):
        a, _ = blocks[q]
        a2, b2 = blocks[q + 1]
        ent = {(a2 + i, j): rnd.randint(-2, 2) for i in range(b2) for j in range(a)}
        mats.append(SparseMatrix(sum(blocks[q + 1]), sum(blocks[q]), ent))
    cd = complex_cohomology_dims(mats)
    assert cd.euler_characteristic() == cd.cohomology_euler_characteristic()
    assert all(h >= 0 for h in cd.cohomology)
