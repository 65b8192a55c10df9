from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from homlie.errors import DimensionError
from homlie.ratlin import (Affine, Echelon, Inconsistent, Matrix, Subspace, Unique, as_scalar,
                           complement_indices, intersect, kernel, lattice, preimage, rref, solve)
from helpers import matrices, small_fraction

F = Fraction


def to_sympy(m: Matrix) -> sympy.Matrix:
    return sympy.Matrix(m.rows, m.cols, lambda i, j: sympy.Rational(m[i, j].numerator, m[i, j].denominator))


def from_sympy_rows(sm: sympy.Matrix) -> list:
    return [tuple(F(int(x.p), int(x.q)) for x in sm.row(i)) for i in range(sm.rows)]


# ---------------------------------------------------------------- examples

def test_kernel_of_identity_is_zero():
    assert kernel(Matrix.identity(3)).dim == 0


def test_kernel_of_zero_map_is_full():
    k = kernel(Matrix.zeros(2, 3))
    assert k.dim == 3 and k.is_full()


def test_kernel_canonical_row():
    k = kernel(Matrix([[1, 2]]))
    assert k.vectors == ((F(1), F(-1, 2)),)


def test_solve_identity_is_unique():
    assert solve(Matrix.identity(3), [1, 2, 3]) == Unique((F(1), F(2), F(3)))


def test_solve_zero_matrix_inconsistent():
    assert isinstance(solve(Matrix.zeros(2, 2), [0, 1]), Inconsistent)


def test_solve_affine_line():
    sol = solve(Matrix([[1, 1]]), [1])
    assert isinstance(sol, Affine)
    assert sol.particular == (F(1), F(0))
    assert sol.kernel == Subspace.span([(1, -1)], 2)


def test_solve_dimension_mismatch():
    with pytest.raises(DimensionError):
        solve(Matrix.identity(2), [1, 2, 3])


def test_lattice_examples():
    v = Subspace.span([(1, 2, 3), (0, 1, 1)], 3)
    assert lattice(v, v, "intersect") == v
    x = Subspace.span([(1, 0)], 2)
    y = Subspace.span([(0, 1)], 2)
    assert lattice(x, y, "sum").is_full()
    a = Subspace.span([(1, 1, 0)], 3)
    b = Subspace.span([(1, 0, 0), (0, 1, 0)], 3)
    assert lattice(a, b, "intersect") == a
    assert lattice(b, a, "contains") is True
    assert lattice(a, b, "equal") is False


def test_lattice_ambient_mismatch():
    with pytest.raises(DimensionError):
        lattice(Subspace.zero(2), Subspace.zero(3), "sum")


def test_as_scalar_is_exact():
    assert as_scalar("3/6") == F(1, 2)
    assert as_scalar("−2") == F(-2)
    with pytest.raises(TypeError):
        as_scalar(0.5)
    with pytest.raises(TypeError):
        as_scalar(True)
    with pytest.raises(ValueError):
        as_scalar("1.5")


def test_matrix_basics():
    m = Matrix([[1, 2], [3, 4]])
    assert m.T == Matrix([[1, 3], [2, 4]])
    assert m @ Matrix.identity(2) == m
    assert (m ** 2) == m @ m
    assert m.rank() == 2 and m.is_invertible()
    assert Matrix.from_columns([(1, 3), (2, 4)]) == m
    assert m.apply((1, 1)) == (F(3), F(7))
    with pytest.raises(DimensionError):
        m @ Matrix.identity(3)


def test_preimage_and_complement():
    proj = Matrix([[1, 0, 0], [0, 0, 0], [0, 0, 0]])
    target = Subspace.zero(3)
    assert preimage(proj, target) == Subspace.span([(0, 1, 0), (0, 0, 1)], 3)
    s = Subspace.span([(1, 1, 0)], 3)
    assert complement_indices(s) == [0, 2]
    assert complement_indices(s, order=[1, 2, 0]) == [1, 2]


# ---------------------------------------------------------------- sympy oracle

@given(matrices())
def test_rref_matches_sympy(m):
    r, pivots = rref(m)
    sm, spiv = to_sympy(m).rref()
    assert tuple(pivots) == tuple(spiv)
    assert [tuple(row) for row in r.tolist()] == from_sympy_rows(sm)[:len(pivots)]


@given(matrices())
def test_kernel_against_sympy_and_rank_nullity(m):
    k = kernel(m)
    assert k.dim == len(to_sympy(m).nullspace())
    assert k.dim + m.rank() == m.cols
    for v in k.vectors:
        assert not any(m.apply(v))


@given(matrices(), st.randoms(use_true_random=False))
def test_subspace_canonical_under_row_permutation(m, rnd):
    rows = m.tolist()
    shuffled = rows[:]
    rnd.shuffle(shuffled)
    assert Subspace.span(rows, m.cols) == Subspace.span(shuffled, m.cols)
    assert Subspace.span(rows, m.cols).basis == Subspace.span(shuffled, m.cols).basis


@given(matrices(cols=st.just(4)), matrices(cols=st.just(4)))
def test_dimension_formula(a, b):
    A = Subspace.span(a.tolist(), 4)
    B = Subspace.span(b.tolist(), 4)
    assert A.dim + B.dim == (A + B).dim + (A & B).dim
    assert (A & B) <= A and (A & B) <= B and A <= A + B
    assert intersect(A, B) == intersect(B, A)


@given(matrices(), st.data())
def test_solve_classification(a, data):
    b = data.draw(st.lists(small_fraction, min_size=a.rows, max_size=a.rows))
    sol = solve(a, b)
    aug_rank = Matrix([list(r) + [x] for r, x in zip(a.tolist(), b)], a.cols + 1).rank()
    if isinstance(sol, Inconsistent):
        assert aug_rank > a.rank()
        return
    x = sol.solution if isinstance(sol, Unique) else sol.particular
    assert a.apply(x) == tuple(b)
    if isinstance(sol, Unique):
        assert kernel(a).is_zero()
    else:
        assert sol.kernel == kernel(a) and not sol.kernel.is_zero()


@given(matrices(cols=st.just(4)))
def test_echelon_agrees_with_span(m):
    ech = Echelon(4)
    for row in m.tolist():
        ech.add(row)
    assert ech.subspace() == Subspace.span(m.tolist(), 4)
    for row in m.tolist():
        assert row in ech


@given(matrices(rows=st.just(3), cols=st.just(3)), matrices(rows=st.just(3), cols=st.just(2)),
       matrices(rows=st.just(2), cols=st.just(2)))
def test_matmul_associative(a, b, c):
    assert (a @ b) @ c == a @ (b @ c)
    assert to_sympy(a @ b) == to_sympy(a) * to_sympy(b)


@given(matrices(cols=st.just(3)))
def test_coordinates_roundtrip(m):
    s = Subspace.span(m.tolist(), 3)
    for v in m.tolist():
        c = s.coordinates(v)
        rebuilt = [sum((ci * b[j] for ci, b in zip(c, s.vectors)), F(0)) for j in range(3)]
        assert tuple(rebuilt) == tuple(v)
