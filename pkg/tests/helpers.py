"""Shared test utilities: ideal enumeration, basis changes and hypothesis strategies."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from hypothesis import strategies as st

from homlie.ratlin import Matrix, Subspace, solve, unit_vector
from homlie.structure import center, classify_subspace, derived_algebra, ideal_closure
from homlie.superalgebra import HomLieSuperalgebra

small_fraction = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))


def matrices(rows=st.integers(1, 5), cols=st.integers(1, 5), entries=small_fraction):
    return st.tuples(rows, cols).flatmap(
        lambda rc: st.lists(st.lists(entries, min_size=rc[1], max_size=rc[1]),
                            min_size=rc[0], max_size=rc[0]).map(lambda g: Matrix(g, rc[1])))


def square_matrices(n, entries=small_fraction):
    return st.lists(st.lists(entries, min_size=n, max_size=n), min_size=n, max_size=n).map(
        lambda g: Matrix(g, n))


def corpus_ideals(g: HomLieSuperalgebra, seed: int = 0, samples: int = 6) -> list:
    """Hom-ideals reachable from small generating sets, plus center and derived algebra."""
    n = g.dim
    cands = [Subspace.zero(n), Subspace.full(n), center(g), derived_algebra(g)]
    basis = [unit_vector(n, i) for i in range(n)]
    for k in (1, 2):
        for combo in itertools.combinations(basis, k):
            cands.append(ideal_closure(g, list(combo)))
    rng = random.Random(seed)
    for _ in range(samples):
        v = [Fraction(rng.randint(-2, 2)) for _ in range(n)]
        cands.append(ideal_closure(g, [v]))
    out = []
    for s in cands:
        if s not in out and classify_subspace(g, s).is_hom_ideal:
            out.append(s)
    return out


def change_basis(g: HomLieSuperalgebra, P: Matrix) -> HomLieSuperalgebra:
    """The same algebra in the basis whose i-th vector is column i of ``P`` (parity-preserving)."""
    n = g.dim
    cols = [P.column(i) for i in range(n)]

    def coords(v):
        return solve(P, v).solution

    table = [[coords(g.bracket(cols[i], cols[j])) for j in range(n)] for i in range(n)]
    alpha = Matrix.from_columns([coords(g.alpha.apply(c)) for c in cols], n)
    return HomLieSuperalgebra(g.names, g.parity, table, alpha, g.zdegree, g.name)


def parity_block_matrices(g: HomLieSuperalgebra):
    """Invertible matrices that preserve the parity (and degree, when present) decomposition."""
    n = g.dim
    key = [(g.parity[i], None if g.zdegree is None else g.zdegree[i]) for i in range(n)]

    def build(entries):
        grid = [[Fraction(0)] * n for _ in range(n)]
        it = iter(entries)
        for i in range(n):
            for j in range(n):
                if key[i] == key[j]:
                    grid[i][j] = next(it)
        return Matrix(grid, n)

    count = sum(1 for i in range(n) for j in range(n) if key[i] == key[j])
    return st.lists(st.integers(-3, 3).map(Fraction), min_size=count, max_size=count).map(build).filter(
        lambda m: m.is_invertible())
