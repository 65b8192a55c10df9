from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from homlie import corpus
from homlie.errors import DimensionError, SpecError
from homlie.ratlin import Matrix
from homlie.superalgebra import (HomLieSuperalgebra, check_axioms, hom_jacobi_sum, sign,
                                 super_jacobi_witness)
from helpers import change_basis, parity_block_matrices

ALL = corpus.corpus()


def test_affine_loads_with_filled_entry(affine):
    assert affine.table[0][1] == (1, 0, 0)
    assert affine.table[1][0][0] == -1
    assert affine.alpha == Matrix.identity(3)


def test_empty_brackets_give_abelian():
    g = HomLieSuperalgebra.from_brackets(["a", "b", "c"], [0, 1, 1])
    assert g.is_abelian()
    assert check_axioms(g).is_hom_lie


def test_even_square_rejected():
    with pytest.raises(SpecError):
        HomLieSuperalgebra.from_brackets(["e1", "e2"], [0, 0], {("e1", "e1"): "e2"})


def test_odd_square_accepted():
    g = HomLieSuperalgebra.from_brackets(["u", "z"], {"u": 1}, {("u", "u"): "z"})
    assert g.bracket(g.vector("u"), g.vector("u")) == (0, 1)


@pytest.mark.parametrize("brackets,alpha", [
    ({("e1", "e9"): "e1"}, None),
    ({("e1", "e3"): "e1"}, None),
    ({("e2", "e1"): "e1"}, None),
    ({}, {"e3": "e1"}),
])
def test_load_errors(brackets, alpha):
    with pytest.raises(SpecError):
        HomLieSuperalgebra.from_brackets(["e1", "e2", "e3"], [0, 0, 1], brackets, alpha)


def test_bracket_examples(affine):
    e1, e2, e3 = (affine.vector(x) for x in ("e1", "e2", "e3"))
    assert affine.bracket(e1, e2) == e1
    assert affine.bracket(e2, affine.vector("e1 + e3")) == (-1, 0, 0)
    with pytest.raises(DimensionError):
        affine.bracket(e1, (1, 0))


@given(st.lists(st.integers(-3, 3), min_size=2, max_size=2))
def test_even_self_bracket_vanishes(c):
    g = corpus.affine()
    x = (Fraction(c[0]), Fraction(c[1]), Fraction(0))
    assert not any(g.bracket(x, x))


def test_affine_axioms_identity_alpha(affine):
    rep = check_axioms(affine)
    for flag in ("parity_graded", "supersymmetric", "hom_jacobi", "multiplicative", "regular"):
        assert getattr(rep, flag), flag
    assert rep.witnesses == {}


def test_affine_non_idempotent_twist():
    rep = check_axioms(corpus.affine({"e2": "e1 + e2", "e3": "0"}))
    assert rep.multiplicative
    assert not rep.alpha_idempotent and rep.witnesses["alpha_idempotent"] == ("e2",)
    assert not rep.regular and rep.witnesses["regular"] == ("e3",)


def test_swap_twist_is_hom_lie_but_not_multiplicative():
    rep = check_axioms(corpus.swap2())
    assert rep.is_hom_lie and not rep.multiplicative


def test_broken_jacobi_detected():
    g = HomLieSuperalgebra.from_brackets(
        ["a", "b", "c"], None, {("a", "b"): "c", ("b", "c"): "a", ("a", "c"): "a"})
    rep = check_axioms(g)
    assert not rep.hom_jacobi and len(rep.witnesses["hom_jacobi"]) == 3


@pytest.mark.parametrize("g", ALL, ids=lambda g: g.name)
def test_flags_iff_witness(g):
    rep = check_axioms(g)
    for flag, value in rep.flags().items():
        assert (value is False) == (flag in rep.witnesses)


@pytest.mark.parametrize("g", ALL, ids=lambda g: g.name)
def test_supersymmetry_structural(g):
    n = g.dim
    for i in range(n):
        for j in range(n):
            s = -sign(g.parity[i] * g.parity[j])
            assert g.table[j][i] == tuple(s * c for c in g.table[i][j])


@pytest.mark.parametrize("g", ALL, ids=lambda g: g.name)
def test_identity_twist_matches_super_jacobi(g):
    h = g.with_alpha(None)
    assert check_axioms(h).hom_jacobi == (super_jacobi_witness(h) is None)


@pytest.mark.parametrize("g", ALL, ids=lambda g: g.name)
def test_corpus_is_hom_lie(g):
    assert check_axioms(g).is_hom_lie


@given(st.sampled_from(ALL), st.randoms(use_true_random=False))
def test_permutation_invariance(g, rnd):
    order = list(range(g.dim))
    rnd.shuffle(order)
    assert check_axioms(g).flags() == check_axioms(g.permuted(order)).flags()


@given(st.data())
def test_change_of_basis_invariance(data):
    g = data.draw(st.sampled_from(ALL))
    P = data.draw(parity_block_matrices(g))
    h = change_basis(g, P)
    assert check_axioms(g).flags() == check_axioms(h).flags()


@given(st.sampled_from(ALL), st.integers(0, 5), st.integers(0, 5), st.integers(0, 5))
def test_jacobi_sum_rotation_invariant(g, i, j, k):
    n = g.dim
    i, j, k = i % n, j % n, k % n
    assert hom_jacobi_sum(g, i, j, k) == hom_jacobi_sum(g, j, k, i)
