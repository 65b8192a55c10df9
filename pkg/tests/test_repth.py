from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from homlie import corpus
from homlie.errors import DimensionError, PreconditionError
from homlie.ratlin import Echelon, Matrix, Subspace, solve, unit_vector
from homlie.repth import Representation, adjoint, check_representation, irreducible, spin
from homlie.superalgebra import check_axioms
from helpers import square_matrices

ALL = corpus.corpus()
MULTIPLICATIVE = [g for g in ALL if check_axioms(g).multiplicative]


def envelope_dim(ops, n):
    """Dimension of the unital associative algebra generated by ``ops``."""
    ech = Echelon(n * n)
    flat = lambda m: [x for row in m.tolist() for x in row]  # noqa: E731
    frontier = [Matrix.identity(n)]
    ech.add(flat(frontier[0]))
    while frontier:
        nxt = []
        for a in frontier:
            for m in ops:
                b = m @ a
                if ech.add(flat(b)) is not None:
                    nxt.append(b)
        frontier = nxt
    return len(ech)


def test_zero_rep_passes(affine):
    n = affine.dim
    r = Representation(2, (0, 1), tuple(Matrix.zeros(2, 2) for _ in range(n)), Matrix([[3, 0], [0, 5]]))
    assert check_representation(affine, r).ok


def test_sl2_ad0(sl2):
    r = adjoint(sl2, 0)
    assert check_representation(sl2, r).ok
    assert r.rho[0] == Matrix([[0, 0, 0], [0, 2, 0], [0, 0, -2]])


def test_affine_twisted_adjoint_and_corruption():
    g = corpus.affine({"e3": "0"})
    r = adjoint(g, 1)
    assert check_representation(g, r).ok and not r.warnings
    assert r.rho[2] == Matrix.zeros(3, 3)
    grid = r.rho[0].tolist()
    grid[0][0] += 1
    bad = Representation(r.module_dim, r.module_parity, (Matrix(grid, 3),) + r.rho[1:], r.beta)
    rep = check_representation(g, bad)
    assert not rep.ok and rep.witnesses["bracket"] == ("e1", "e2")


def test_adjoint_identity_twist_independent_of_s(sl2):
    assert adjoint(sl2, 0).rho == adjoint(sl2, 3).rho


def test_adjoint_warns_without_multiplicativity():
    assert adjoint(corpus.swap2(), 1).warnings
    with pytest.raises(ValueError):
        adjoint(corpus.swap2(), -1)


def test_rep_dimension_errors(affine):
    with pytest.raises(DimensionError):
        Representation(2, (0,), (), Matrix.identity(2))
    with pytest.raises(DimensionError):
        check_representation(affine, Representation(1, (0,), (Matrix.zeros(1, 1),), Matrix.identity(1)))


def test_spin_examples(sl2):
    v = (Fraction(1), Fraction(2))
    assert spin([], [v]) == Subspace.span([v], 2)
    assert spin([Matrix.zeros(2, 2)], [v]) == Subspace.span([v], 2)
    assert spin([sl2.ad(i) for i in range(3)], [sl2.vector("e")]).is_full()
    with pytest.raises(DimensionError):
        spin([Matrix.zeros(2, 2), Matrix.zeros(3, 3)], [v])


def test_irreducible_examples(sl2):
    assert irreducible([Matrix([[5]])], 1).is_irreducible
    v = irreducible([Matrix.zeros(2, 2)], 2)
    assert v.is_reducible and v.witness.dim == 1
    assert irreducible([sl2.ad(i) for i in range(3)], 3).is_irreducible
    with pytest.raises(PreconditionError):
        irreducible([], 0)


def test_rotation_is_irreducible_over_q():
    # no rational eigenvector, although the envelope is only 2-dimensional
    v = irreducible([Matrix([[0, -1], [1, 0]])], 2)
    assert v.is_irreducible


def test_witness_homogeneous_and_beta_flag():
    ops = [Matrix([[1, 0], [0, 2]])]
    v = irreducible(ops, 2, parity=(0, 1), beta=Matrix([[0, 1], [1, 0]]))
    assert v.is_reducible and v.homogeneous
    assert v.beta_stable is False


# ---------------------------------------------------------------- properties

@pytest.mark.parametrize("g", MULTIPLICATIVE, ids=lambda g: g.name)
@pytest.mark.parametrize("s", [0, 1, 2])
def test_twisted_adjoint_is_representation(g, s):
    assert check_representation(g, adjoint(g, s)).ok


@given(st.lists(square_matrices(3), min_size=1, max_size=3),
       st.lists(st.lists(st.integers(-2, 2).map(Fraction), min_size=3, max_size=3), min_size=1, max_size=2))
def test_spin_invariant_and_idempotent(ops, seed):
    s = spin(ops, seed, 3)
    for m in ops:
        assert all(m.apply(v) in s for v in s.vectors)
    assert spin(ops, list(s.vectors), 3) == s


@given(st.lists(square_matrices(3), min_size=1, max_size=2))
def test_verdict_against_envelope(ops):
    v = irreducible(ops, 3)
    if envelope_dim(ops, 3) == 9:
        assert v.status != "Reducible"
    if v.is_reducible:
        w = v.witness
        assert 0 < w.dim < 3
        assert all(w.is_invariant(m) for m in ops)


@given(st.lists(square_matrices(1), min_size=2, max_size=2), square_matrices(3), square_matrices(3))
def test_planted_invariant_subspace_found(blocks, top, conj):
    # block upper-triangular operators conjugated by an invertible matrix
    if not conj.is_invertible():
        conj = Matrix.identity(3)
    inv = Matrix.from_columns([solve(conj, unit_vector(3, i)).solution for i in range(3)], 3)
    ops = []
    for b, t in zip(blocks, (top, top.T)):
        grid = t.tolist()
        grid[1][0] = grid[2][0] = Fraction(0)
        grid[0][0] = b[0, 0]
        ops.append(conj @ Matrix(grid, 3) @ inv)
    v = irreducible(ops, 3)
    assert not v.is_irreducible
    if v.is_reducible:
        assert all(v.witness.is_invariant(m) for m in ops)
