"""Representations, twisted adjoint representations and irreducibility testing.

Irreducibility over Q is decided with the Holt-Rees form of Norton's
criterion: pick an element ``w`` of the operator algebra, an irreducible
factor ``p`` of its characteristic polynomial with ``nullity(p(w)) = deg p``,
then spin one kernel vector of ``p(w)`` under the operators and one kernel
vector of ``p(w)^T`` under the transposed operators.  Both spanning the whole
space certifies irreducibility; either failing to do so yields an invariant
subspace.  Candidates ``w`` follow a fixed schedule (generators, pairwise sums
and products, then seeded random combinations), so verdicts are reproducible.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import sympy

from .errors import DimensionError, PreconditionError
from .ratlin import Echelon, Matrix, Subspace, kernel, unit_vector
from .superalgebra import HomLieSuperalgebra, check_axioms, sign

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Representation:
    """``rho[i]`` is the action of basis element ``i``; ``beta`` twists the module."""

    module_dim: int
    module_parity: tuple
    rho: tuple
    beta: Matrix
    warnings: tuple = ()

    def __post_init__(self):
        n = self.module_dim
        if len(self.module_parity) != n:
            raise DimensionError("module parity must cover every module coordinate")
        for m in (*self.rho, self.beta):
            if m.shape != (n, n):
                raise DimensionError(f"operator of shape {m.shape} on a module of dimension {n}")

    def action(self, x: Sequence[Fraction]) -> Matrix:
        out = Matrix.zeros(self.module_dim, self.module_dim)
        for c, m in zip(x, self.rho):
            if c:
                out = out + m.scale(c)
        return out


@dataclass
class RepresentationReport:
    ok: bool
    twist_ok: bool
    bracket_ok: bool
    even: bool
    witnesses: dict = field(default_factory=dict)


def _parity_shift_ok(m: Matrix, shift: int, parity: Sequence[int]) -> bool:
    for i in range(m.rows):
        for j in range(m.cols):
            if m[i, j] and parity[i] != (parity[j] + shift) % 2:
                return False
    return True


def check_representation(g: HomLieSuperalgebra, r: Representation) -> RepresentationReport:
    """Exact check of the two representation identities over basis elements and pairs."""
    n = g.dim
    if len(r.rho) != n:
        raise DimensionError(f"{len(r.rho)} action matrices for an algebra of dimension {n}")
    wit = {}
    even = all(_parity_shift_ok(r.rho[i], g.parity[i], r.module_parity) for i in range(n))
    even = even and _parity_shift_ok(r.beta, 0, r.module_parity)
    if not even:
        wit["even"] = ()
    beta = r.beta
    rho_alpha = [r.action(g.alpha.column(i)) for i in range(n)]

    twist_ok = True
    for i in range(n):
        if rho_alpha[i] @ beta != beta @ r.rho[i]:
            twist_ok = False
            wit["twist"] = (g.names[i],)
            break

    bracket_ok = True
    for i in range(n):
        for j in range(n):
            lhs = r.action(g.table[i][j]) @ beta
            rhs = rho_alpha[i] @ r.rho[j]
            other = rho_alpha[j] @ r.rho[i]
            rhs = rhs - other if sign(g.parity[i] * g.parity[j]) == 1 else rhs + other
            if lhs != rhs:
                bracket_ok = False
                wit["bracket"] = (g.names[i], g.names[j])
                break
        if not bracket_ok:
            break
    return RepresentationReport(twist_ok and bracket_ok, twist_ok, bracket_ok, even, wit)


def adjoint(g: HomLieSuperalgebra, s: int) -> Representation:
    """The twisted adjoint representation ``a -> ad(alpha^s(a))`` with ``beta = alpha``."""
    if s < 0:
        raise ValueError("s must be nonnegative")
    warnings = ()
    if not check_axioms(g).multiplicative:
        warnings = ("alpha is not multiplicative; the twisted adjoint need not be a representation",)
    a_s = g.alpha_power(s)
    rho = tuple(g.ad(a_s.column(i)) for i in range(g.dim))
    return Representation(g.dim, g.parity, rho, g.alpha, warnings)


def spin(operators: Sequence[Matrix], seed: Sequence[Sequence[Fraction]], dim: int | None = None) -> Subspace:
    """Smallest subspace containing ``seed`` and invariant under every operator."""
    if dim is None:
        if operators:
            dim = operators[0].rows
        elif seed:
            dim = len(seed[0])
        else:
            raise DimensionError("cannot infer the dimension of an empty spin")
    for m in operators:
        if m.shape != (dim, dim):
            raise DimensionError(f"operator of shape {m.shape} in dimension {dim}")
    ech = Echelon(dim)
    queue = []
    for v in seed:
        if len(v) != dim:
            raise DimensionError("seed vector of the wrong length")
        w = ech.add(v)
        if w is not None:
            queue.append(w)
    while queue and len(ech) < dim:
        v = queue.pop()
        for m in operators:
            w = ech.add(m.apply(v))
            if w is not None:
                queue.append(w)
    return ech.subspace()


@dataclass
class IrreducibilityVerdict:
    status: str
    witness: Subspace | None = None
    certificate: str = ""
    homogeneous: bool | None = None
    beta_stable: bool | None = None

    @property
    def is_irreducible(self) -> bool:
        return self.status == "Irreducible"

    @property
    def is_reducible(self) -> bool:
        return self.status == "Reducible"


def _annihilator(s: Subspace) -> Subspace:
    return kernel(s.basis) if s.dim else Subspace.full(s.ambient_dim)


def _charpoly_factors(w: Matrix) -> list:
    x = sympy.Symbol("x")
    sm = sympy.Matrix(w.rows, w.cols, lambda i, j: sympy.Rational(w[i, j].numerator, w[i, j].denominator))
    poly = sm.charpoly(x)
    _, factors = sympy.factor_list(poly.as_expr(), x)
    out = []
    for fac, _mult in factors:
        coeffs = sympy.Poly(fac, x).all_coeffs()
        out.append(tuple(Fraction(int(c.p), int(c.q)) for c in coeffs))
    out.sort(key=len)
    return out


def _poly_at(coeffs: Sequence[Fraction], w: Matrix) -> Matrix:
    n = w.rows
    out = Matrix.zeros(n, n)
    ident = Matrix.identity(n)
    for c in coeffs:
        out = out @ w + ident.scale(c)
    return out


def _candidates(operators: Sequence[Matrix], budget: int, seed: int):
    ops = list(operators)
    yield from ((f"g{i}", m) for i, m in enumerate(ops))
    for i in range(len(ops)):
        for j in range(i + 1, len(ops)):
            yield f"g{i}+g{j}", ops[i] + ops[j]
    products = []
    for i in range(len(ops)):
        for j in range(len(ops)):
            p = ops[i] @ ops[j]
            products.append((f"g{i}*g{j}", p))
    yield from products
    words = [(f"g{i}", m) for i, m in enumerate(ops)] + products
    rng = random.Random(seed)
    for _ in range(budget):
        k = rng.randint(1, min(4, len(words)))
        picks = rng.sample(range(len(words)), k)
        label = []
        total = None
        for idx in picks:
            c = rng.choice((-2, -1, 1, 2, 3))
            term = words[idx][1].scale(c)
            total = term if total is None else total + term
            label.append(f"{c}*{words[idx][0]}")
        yield "+".join(label), total


def _homogeneous_witness(w: Subspace, parity: Sequence[int]):
    """Replace a mixed-parity invariant subspace by a homogeneous one when possible."""
    n = w.ambient_dim
    even = [i for i in range(n) if parity[i] == 0]
    odd = [i for i in range(n) if parity[i] == 1]

    def project(v, keep):
        return tuple(c if i in keep else Fraction(0) for i, c in enumerate(v))

    hull = Subspace.span([project(v, set(even)) for v in w.vectors]
                         + [project(v, set(odd)) for v in w.vectors], n)
    if hull == w:
        return w, True
    if not hull.is_full():
        return hull, True
    core = (w & Subspace.span([unit_vector(n, i) for i in even], n)) + \
        (w & Subspace.span([unit_vector(n, i) for i in odd], n))
    if not core.is_zero():
        return core, True
    return w, False


def irreducible(operators: Sequence[Matrix], dim: int, parity: Sequence[int] | None = None,
                beta: Matrix | None = None, budget: int = 64, seed: int = 0) -> IrreducibilityVerdict:
    """Decide whether Q^dim has a proper nonzero subspace invariant under ``operators``."""
    if dim < 1:
        raise PreconditionError("irreducibility is undefined for the zero module")
    ops = list(operators)
    for m in ops:
        if m.shape != (dim, dim):
            raise DimensionError(f"operator of shape {m.shape} in dimension {dim}")

    def reducible(w: Subspace, note: str) -> IrreducibilityVerdict:
        homogeneous = None
        if parity is not None:
            w, homogeneous = _homogeneous_witness(w, parity)
        stable = None if beta is None else w.is_invariant(beta)
        return IrreducibilityVerdict("Reducible", w, note, homogeneous, stable)

    if dim == 1:
        return IrreducibilityVerdict("Irreducible", None, "one-dimensional module")

    opsT = [m.T for m in ops]
    for i in range(dim):
        s = spin(ops, [unit_vector(dim, i)], dim)
        if not s.is_full():
            return reducible(s, f"spin of basis vector {i}")
    for i in range(dim):
        s = spin(opsT, [unit_vector(dim, i)], dim)
        if not s.is_full():
            return reducible(_annihilator(s), f"annihilator of dual spin of basis vector {i}")

    tried = 0
    for label, w in _candidates(ops, budget, seed):
        if w.is_zero():
            continue
        tried += 1
        for coeffs in _charpoly_factors(w):
            pw = _poly_at(coeffs, w)
            null = kernel(pw)
            v = null.vectors[0]
            s = spin(ops, [v], dim)
            if not s.is_full():
                return reducible(s, f"spin of a kernel vector of p({label})")
            if null.dim != len(coeffs) - 1:
                continue
            u = kernel(pw.T).vectors[0]
            st = spin(opsT, [u], dim)
            if not st.is_full():
                return reducible(_annihilator(st), f"annihilator of dual spin for p({label})")
            deg = len(coeffs) - 1
            return IrreducibilityVerdict(
                "Irreducible", None,
                f"Norton test on w = {label}: factor of degree {deg} with nullity {deg}; "
                f"kernel vector and dual kernel vector both spin to the whole space")
    log.info("irreducibility search exhausted after %d candidates", tried)
    return IrreducibilityVerdict("Inconclusive", None, f"no conclusive element among {tried} candidates")
