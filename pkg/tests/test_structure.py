import logging

import pytest
from hypothesis import given
from hypothesis import strategies as st

from homlie import corpus
from homlie.errors import DimensionError, PreconditionError
from homlie.ratlin import Subspace
from homlie.structure import (center, classify_subspace, derived_and_center, ideal_arithmetic,
                              ideal_closure, is_homogeneous, quotient)
from homlie.superalgebra import check_axioms
from helpers import corpus_ideals

ALL = corpus.corpus()
MULTIPLICATIVE = [g for g in ALL if check_axioms(g).multiplicative]


def homogeneous_ideals(g):
    return [i for i in corpus_ideals(g) if is_homogeneous(g, i)]


def span(g, *labels):
    return Subspace.span([g.vector(x) for x in labels], g.dim)


def test_classify_examples(affine):
    v = classify_subspace(affine, span(affine, "e1"))
    assert v.is_hom_ideal and v.is_subalgebra and v.is_abelian
    assert classify_subspace(affine, Subspace.full(3)).is_hom_ideal
    w = classify_subspace(affine, span(affine, "e2"))
    assert w.is_subalgebra and not w.is_hom_ideal
    assert w.witnesses["is_hom_ideal"] == ("e2", "e1")
    with pytest.raises(DimensionError):
        classify_subspace(affine, Subspace.zero(2))


def test_alpha_instability_is_reported():
    g = corpus.swap2()
    v = classify_subspace(g, span(g, "a"))
    assert not v.alpha_stable and not v.is_hom_ideal and "alpha_stable" in v.witnesses


def test_closure_examples(affine, sl2):
    assert ideal_closure(affine, []).is_zero()
    assert ideal_closure(affine, ["e2"]) == span(affine, "e1", "e2")
    assert ideal_closure(sl2, ["e"]).is_full()


def test_arithmetic_examples(affine):
    i, j = span(affine, "e1"), span(affine, "e3")
    assert ideal_arithmetic(affine, i, j, "sum") == span(affine, "e1", "e3")
    assert ideal_arithmetic(affine, i, j, "intersect").is_zero()
    assert ideal_arithmetic(affine, i, j, "bracket").is_zero()
    assert ideal_arithmetic(affine, i, i, "sum") == i == ideal_arithmetic(affine, i, i, "intersect")
    zero = Subspace.zero(3)
    assert ideal_arithmetic(affine, i, zero, "bracket").is_zero()
    with pytest.raises(PreconditionError) as info:
        ideal_arithmetic(affine, span(affine, "e2"), i, "sum")
    assert info.value.witness == ("e2", "e1")
    with pytest.raises(ValueError):
        ideal_arithmetic(affine, i, j, "product")


def test_derived_and_center_examples(affine, sl2):
    d, c = derived_and_center(corpus.abelian((0, 1)))
    assert d.is_zero() and c.is_full()
    d, c = derived_and_center(affine)
    assert d == span(affine, "e1") and c == span(affine, "e3")
    d, c = derived_and_center(sl2)
    assert d.is_full() and c.is_zero()


def test_quotient_examples(affine, sl2):
    q = quotient(affine, span(affine, "e1"))
    assert q.dim == 2 and q.is_abelian() and sorted(q.parity) == [0, 1]
    assert quotient(sl2, Subspace.full(3)).dim == 0
    same = quotient(affine, Subspace.zero(3))
    assert same.table == affine.table and same.alpha == affine.alpha
    with pytest.raises(PreconditionError):
        quotient(affine, span(affine, "e2"))


def test_mixed_parity_ideal_rejected():
    g = corpus.abelian((0, 1))
    with pytest.raises(PreconditionError):
        quotient(g, Subspace.span([(1, 1)], 2))


# ---------------------------------------------------------------- corpus properties

@pytest.mark.parametrize("g", MULTIPLICATIVE, ids=lambda g: g.name)
def test_ideal_arithmetic_closed(g, caplog):
    ideals = corpus_ideals(g)
    with caplog.at_level(logging.WARNING):
        for i in ideals:
            for j in ideals:
                for op in ("sum", "intersect", "bracket"):
                    assert classify_subspace(g, ideal_arithmetic(g, i, j, op)).is_hom_ideal
    assert not caplog.records


def test_bracket_of_ideals_needs_multiplicative_twist(caplog):
    # [g, g] = span{a} is not alpha-stable when alpha swaps a and b
    g = corpus.swap2()
    full = Subspace.full(2)
    with caplog.at_level(logging.WARNING):
        out = ideal_arithmetic(g, full, full, "bracket")
    assert out == span(g, "a")
    assert not classify_subspace(g, out).is_hom_ideal
    assert caplog.records
    with pytest.raises(PreconditionError):
        quotient(g, derived_and_center(g)[0])


@pytest.mark.parametrize("g", MULTIPLICATIVE, ids=lambda g: g.name)
def test_quotient_by_derived_is_abelian(g):
    d, _ = derived_and_center(g)
    assert classify_subspace(g, d).is_hom_ideal
    q = quotient(g, d)
    assert q.is_abelian() and check_axioms(q).is_hom_lie
    for i in homogeneous_ideals(g):
        if quotient(g, i).is_abelian():
            assert d <= i


@pytest.mark.parametrize("g", ALL, ids=lambda g: g.name)
def test_center_of_surjective_multiplicative(g):
    rep = check_axioms(g)
    if rep.multiplicative and rep.regular:
        v = classify_subspace(g, center(g))
        assert v.is_hom_ideal and v.is_abelian


@pytest.mark.parametrize("g", ALL, ids=lambda g: g.name)
def test_quotients_are_hom_lie(g):
    for i in homogeneous_ideals(g):
        rep = check_axioms(quotient(g, i))
        assert rep.is_hom_lie


@given(st.sampled_from(ALL), st.data())
def test_closure_idempotent_and_monotone(g, data):
    labels = data.draw(st.lists(st.sampled_from(g.names), max_size=3, unique=True))
    extra = data.draw(st.sampled_from(g.names))
    c = ideal_closure(g, labels)
    assert ideal_closure(g, list(c.vectors)) == c
    assert c <= ideal_closure(g, labels + [extra])
    assert classify_subspace(g, c).is_hom_ideal
