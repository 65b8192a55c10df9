"""Small named algebras used by the tests, the acceptance suite and the CLI examples.

All are desk-scale (dimension at most 6) and given over Q.
"""

from __future__ import annotations

from fractions import Fraction

from .superalgebra import HomLieSuperalgebra


def affine(alpha=None) -> HomLieSuperalgebra:
    """e1, e2 even, e3 odd, [e1, e2] = e1."""
    return HomLieSuperalgebra.from_brackets(
        ["e1", "e2", "e3"], [0, 0, 1], {("e1", "e2"): "e1"}, alpha, name="affine")


def sl2(graded: bool = True, alpha=None) -> HomLieSuperalgebra:
    """Basis (h, e, f), degrees (0, 1, -1) when graded."""
    return HomLieSuperalgebra.from_brackets(
        ["h", "e", "f"], [0, 0, 0],
        {("h", "e"): "2*e", ("h", "f"): "-2*f", ("e", "f"): "h"},
        alpha, {"h": 0, "e": 1, "f": -1} if graded else None, name="sl2")


def sl2_twisted(lam=2) -> HomLieSuperalgebra:
    """Yau twist of sl(2) by the automorphism h -> h, e -> lam e, f -> f/lam.

    The bracket is ``alpha o [.,.]``; the result is multiplicative and regular
    but does not satisfy the ordinary Jacobi identity.
    """
    lam = Fraction(lam)
    return HomLieSuperalgebra.from_brackets(
        ["h", "e", "f"], [0, 0, 0],
        {("h", "e"): {"e": 2 * lam}, ("h", "f"): {"f": -2 / lam}, ("e", "f"): "h"},
        {"e": {"e": lam}, "f": {"f": 1 / lam}}, {"h": 0, "e": 1, "f": -1}, name="sl2_twisted")


def heisenberg() -> HomLieSuperalgebra:
    """x odd of degree -1, y odd of degree 1, z even of degree 0, [x, y] = z."""
    return HomLieSuperalgebra.from_brackets(
        ["x", "z", "y"], {"x": 1, "y": 1}, {("x", "y"): "z"},
        zdegree={"x": -1, "z": 0, "y": 1}, name="heisenberg")


def abelian(parities=(0, 0), degrees=None, name="abelian") -> HomLieSuperalgebra:
    names = [f"a{i + 1}" for i in range(len(parities))]
    return HomLieSuperalgebra.from_brackets(names, list(parities), {}, None, degrees, name=name)


def osp12(graded: bool = True, alpha=None) -> HomLieSuperalgebra:
    """osp(1|2): even h, e, f and odd x, y; consistent grading f,y,h,x,e = -2..2."""
    return HomLieSuperalgebra.from_brackets(
        ["h", "e", "f", "x", "y"], {"x": 1, "y": 1},
        {("h", "e"): "2*e", ("h", "f"): "-2*f", ("e", "f"): "h",
         ("h", "x"): "x", ("h", "y"): "-y", ("e", "y"): "-x", ("f", "x"): "-y",
         ("x", "x"): "2*e", ("y", "y"): "-2*f", ("x", "y"): "h"},
        alpha, {"h": 0, "e": 2, "f": -2, "x": 1, "y": -1} if graded else None, name="osp12")


def osp12_twisted(mu=2) -> HomLieSuperalgebra:
    """Yau twist of osp(1|2) by the automorphism x -> mu x, y -> y/mu."""
    mu = Fraction(mu)
    g = osp12()
    scale = {"h": Fraction(1), "e": mu * mu, "f": 1 / (mu * mu), "x": mu, "y": 1 / mu}
    brackets = {}
    for i, a in enumerate(g.names):
        for j in range(i, g.dim):
            b = g.names[j]
            v = g.table[i][j]
            if any(v):
                brackets[(a, b)] = {g.names[k]: c * scale[g.names[k]] for k, c in enumerate(v) if c}
    alpha = {lab: {lab: s} for lab, s in scale.items()}
    return HomLieSuperalgebra.from_brackets(g.names, g.parity, brackets, alpha,
                                            dict(zip(g.names, g.zdegree)), name="osp12_twisted")


def gl11() -> HomLieSuperalgebra:
    """gl(1|1): even a = E11, d = E22, odd u = E12, w = E21."""
    return HomLieSuperalgebra.from_brackets(
        ["a", "d", "u", "w"], {"u": 1, "w": 1},
        {("a", "u"): "u", ("a", "w"): "-w", ("d", "u"): "-u", ("d", "w"): "w", ("u", "w"): "a + d"},
        name="gl11")


def sl2_pair() -> HomLieSuperalgebra:
    """sl(2) + sl(2), both factors graded (0, 1, -1)."""
    return HomLieSuperalgebra.from_brackets(
        ["h1", "e1", "f1", "h2", "e2", "f2"], None,
        {("h1", "e1"): "2*e1", ("h1", "f1"): "-2*f1", ("e1", "f1"): "h1",
         ("h2", "e2"): "2*e2", ("h2", "f2"): "-2*f2", ("e2", "f2"): "h2"},
        None, {"h1": 0, "e1": 1, "f1": -1, "h2": 0, "e2": 1, "f2": -1}, name="sl2_pair")


def swap2() -> HomLieSuperalgebra:
    """[a, b] = a with alpha swapping a and b: a hom-Lie algebra, not multiplicative."""
    return HomLieSuperalgebra.from_brackets(["a", "b"], None, {("a", "b"): "a"},
                                            {"a": "b", "b": "a"}, name="swap2")


def corpus() -> list:
    """The desk-scale corpus used for property and acceptance checks."""
    return [
        affine(),
        affine({"e3": "0"}),
        affine({"e2": "e1 + e2", "e3": "0"}),
        sl2(),
        sl2_twisted(),
        heisenberg(),
        abelian((0, 0)),
        abelian((0, 1), (-1, 0), name="abelian_graded"),
        osp12(),
        osp12_twisted(),
        gl11(),
        sl2_pair(),
        swap2(),
    ]
