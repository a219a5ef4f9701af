"""Hom-Lie algebras, representations, actions, morphisms and fixtures.

A Hom-Lie algebra is a twisted space with a skew bracket mu satisfying the
twisted Jacobi identity

    [alpha(x), [y, z]] + [alpha(y), [z, x]] + [alpha(z), [x, y]] = 0

and, throughout this package, multiplicativity alpha[x, y] = [alpha x, alpha y]
(the bracket calculus in the other modules is only valid for multiplicative
structures).  ``RawHomStructure`` carries the same data with no invariants so
that candidate and known non-multiplicative structures can be loaded and
diagnosed.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .linalg import Mat, Vec, rat
from .cochains import (SkewCochain, TwistedSpace, compatibility_witness, evaluate,
                       operator_cochain)


class RawHomStructure:
    """Twisted space plus skew 2-cochain; no structural invariants enforced."""

    def __init__(self, space: TwistedSpace, mu: SkewCochain, basis_names: tuple[str, ...] | None = None):
        if mu.arity != 2 or mu.domain != space or mu.codomain != space:
            raise ValueError("structure bracket must be a 2-cochain on the space itself")
        self.space = space
        self.mu = mu
        self.basis_names = basis_names or tuple(f"x{i+1}" for i in range(space.dim))

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def alpha(self) -> Mat:
        return self.space.alpha

    def bracket(self, x: Vec, y: Vec) -> Vec:
        return evaluate(self.mu, [x, y])

    def __repr__(self) -> str:
        return f"{type(self).__name__}(dim={self.dim})"


class HomLieAlgebra(RawHomStructure):
    """Multiplicative Hom-Lie algebra; both invariants verified at construction."""

    def __init__(self, space: TwistedSpace, mu: SkewCochain, basis_names: tuple[str, ...] | None = None):
        super().__init__(space, mu, basis_names)
        witness = multiplicativity_witness(self)
        if witness is not None:
            key, lhs, rhs = witness
            raise ValueError(f"bracket is not multiplicative at basis pair {key}: {lhs} vs {rhs}")
        witness = hom_jacobi_witness(self)
        if witness is not None:
            key, value = witness
            raise ValueError(f"twisted Jacobi identity fails at basis triple {key}: {value}")

    def __eq__(self, other) -> bool:
        return (isinstance(other, HomLieAlgebra) and self.space == other.space
                and self.mu == other.mu)

    __hash__ = None


def as_hom_lie(raw: RawHomStructure) -> HomLieAlgebra:
    """Promote a raw structure, re-running both invariant checks."""
    if isinstance(raw, HomLieAlgebra):
        return raw
    return HomLieAlgebra(raw.space, raw.mu, raw.basis_names)


def hom_jacobi_witness(s: RawHomStructure) -> tuple[tuple[int, int, int], Vec] | None:
    """First increasing basis triple where the twisted cyclic sum is nonzero.

    The cyclic sum is alternating and trilinear, so vanishing on increasing
    triples is equivalent to vanishing everywhere.  This direct evaluation is
    the independent oracle for the Maurer-Cartan characterization of the
    bracket inside the graded bracket machinery.
    """
    space = s.space
    alpha = space.alpha
    basis = [space.basis_vec(i) for i in range(space.dim)]
    twisted = [alpha @ b for b in basis]
    for i, j, k in combinations(range(space.dim), 3):
        x, y, z = basis[i], basis[j], basis[k]
        total = (s.bracket(twisted[i], s.bracket(y, z))
                 + s.bracket(twisted[j], s.bracket(z, x))
                 + s.bracket(twisted[k], s.bracket(x, y)))
        if not total.is_zero():
            return (i, j, k), total
    return None


def check_hom_jacobi(s: RawHomStructure) -> bool:
    return hom_jacobi_witness(s) is None


def multiplicativity_witness(s: RawHomStructure) -> tuple[tuple[int, ...], Vec, Vec] | None:
    """First basis pair with alpha[x, y] != [alpha x, alpha y], with both sides."""
    return compatibility_witness(s.mu)


def check_multiplicative(s: RawHomStructure) -> bool:
    return multiplicativity_witness(s) is None


def multiplicativity_failures(s: RawHomStructure) -> list[tuple[tuple[int, int], Vec, Vec]]:
    """Every basis pair where multiplicativity fails, with both sides."""
    alpha = s.alpha
    basis = [s.space.basis_vec(i) for i in range(s.dim)]
    twisted = [alpha @ b for b in basis]
    failures = []
    for i, j in combinations(range(s.dim), 2):
        lhs = alpha @ s.bracket(basis[i], basis[j])
        rhs = s.bracket(twisted[i], twisted[j])
        if lhs != rhs:
            failures.append(((i, j), lhs, rhs))
    return failures


class Representation:
    """A twisted module (V, act, beta) for a Hom-Lie algebra."""

    def __init__(self, algebra: HomLieAlgebra, module: TwistedSpace,
                 table: tuple[tuple[Vec, ...], ...]):
        if len(table) != algebra.dim or any(len(row) != module.dim for row in table):
            raise ValueError("action table shape must be (algebra dim) x (module dim)")
        for row in table:
            for v in row:
                if v.dim != module.dim:
                    raise ValueError("action values must live in the module")
        self.algebra = algebra
        self.module = module
        self.table = tuple(tuple(row) for row in table)

    def act(self, x: Vec, v: Vec) -> Vec:
        """Bilinear extension of the basis action table."""
        total = Vec.zero(self.module.dim)
        for i, a in x.support():
            for j, b in v.support():
                total = total + self.table[i][j].scale(a * b)
        return total

    def __repr__(self) -> str:
        return f"Representation(algebra dim={self.algebra.dim}, module dim={self.module.dim})"


def representation_witness(rep: Representation):
    """First failing representation axiom, or None.

    Checks beta(x . v) = alpha(x) . beta(v) on basis pairs and
    [x, y] . beta(v) = alpha(x) . (y . v) - alpha(y) . (x . v) on basis triples.
    """
    alg, mod = rep.algebra, rep.module
    alpha, beta = alg.alpha, mod.alpha
    gbasis = [alg.space.basis_vec(i) for i in range(alg.dim)]
    vbasis = [mod.basis_vec(j) for j in range(mod.dim)]
    for i in range(alg.dim):
        for j in range(mod.dim):
            lhs = beta @ rep.table[i][j]
            rhs = rep.act(alpha @ gbasis[i], beta @ vbasis[j])
            if lhs != rhs:
                return ("twist equivariance", (i, j), lhs, rhs)
    for i in range(alg.dim):
        for j in range(alg.dim):
            for k in range(mod.dim):
                lhs = rep.act(alg.bracket(gbasis[i], gbasis[j]), beta @ vbasis[k])
                rhs = (rep.act(alpha @ gbasis[i], rep.table[j][k])
                       - rep.act(alpha @ gbasis[j], rep.table[i][k]))
                if lhs != rhs:
                    return ("bracket compatibility", (i, j, k), lhs, rhs)
    return None


def check_representation(rep: Representation) -> bool:
    return representation_witness(rep) is None


class HomLieAction:
    """An action of one Hom-Lie algebra on another.

    The action map makes the acted algebra's space a representation and is
    additionally a twisted derivation of the acted bracket:
    alpha(x) . [h, k] = [x . h, beta(k)] + [beta(h), x . k].
    """

    def __init__(self, acting: HomLieAlgebra, acted: HomLieAlgebra,
                 table: tuple[tuple[Vec, ...], ...]):
        self.acting = acting
        self.acted = acted
        self.rep = Representation(acting, acted.space, table)
        self.table = self.rep.table

    def act(self, x: Vec, h: Vec) -> Vec:
        return self.rep.act(x, h)

    def __repr__(self) -> str:
        return f"HomLieAction(acting dim={self.acting.dim}, acted dim={self.acted.dim})"


def action_witness(a: HomLieAction):
    """First failing action axiom (representation axioms plus derivation law)."""
    w = representation_witness(a.rep)
    if w is not None:
        return w
    acting, acted = a.acting, a.acted
    alpha, beta = acting.alpha, acted.alpha
    gbasis = [acting.space.basis_vec(i) for i in range(acting.dim)]
    hbasis = [acted.space.basis_vec(i) for i in range(acted.dim)]
    for i in range(acting.dim):
        for j, k in combinations(range(acted.dim), 2):
            lhs = a.act(alpha @ gbasis[i], acted.bracket(hbasis[j], hbasis[k]))
            rhs = (acted.bracket(a.table[i][j], beta @ hbasis[k])
                   + acted.bracket(beta @ hbasis[j], a.table[i][k]))
            if lhs != rhs:
                return ("derivation law", (i, j, k), lhs, rhs)
    return None


def check_action(a: HomLieAction) -> bool:
    return action_witness(a) is None


def adjoint_representation(alg: HomLieAlgebra) -> Representation:
    """The algebra acting on itself by its own bracket."""
    basis = [alg.space.basis_vec(i) for i in range(alg.dim)]
    table = tuple(tuple(alg.bracket(basis[i], basis[j]) for j in range(alg.dim))
                  for i in range(alg.dim))
    return Representation(alg, alg.space, table)


def adjoint_action(alg: HomLieAlgebra) -> HomLieAction:
    basis = [alg.space.basis_vec(i) for i in range(alg.dim)]
    table = tuple(tuple(alg.bracket(basis[i], basis[j]) for j in range(alg.dim))
                  for i in range(alg.dim))
    return HomLieAction(alg, alg, table)


def trivial_representation(alg: HomLieAlgebra, module: TwistedSpace) -> Representation:
    zero_row = tuple(Vec.zero(module.dim) for _ in range(module.dim))
    return Representation(alg, module, tuple(zero_row for _ in range(alg.dim)))


class HomMorphism:
    """A linear map between Hom-Lie algebras, candidate for a morphism."""

    def __init__(self, source: HomLieAlgebra, target: HomLieAlgebra, mat: Mat):
        if mat.nrows != target.dim or mat.ncols != source.dim:
            raise ValueError("morphism matrix shape must be (target dim) x (source dim)")
        self.source = source
        self.target = target
        self.mat = mat

    def as_cochain(self) -> SkewCochain:
        return operator_cochain(self.source.space, self.target.space, self.mat)

    def __repr__(self) -> str:
        return f"HomMorphism({self.source.dim} -> {self.target.dim})"


def morphism_witness(phi: HomMorphism):
    """First failing morphism identity: twist intertwining or bracket preservation."""
    src, tgt, m = phi.source, phi.target, phi.mat
    if tgt.alpha @ m != m @ src.alpha:
        return ("twist intertwining", None, tgt.alpha @ m, m @ src.alpha)
    basis = [src.space.basis_vec(i) for i in range(src.dim)]
    for i, j in combinations(range(src.dim), 2):
        lhs = m @ src.bracket(basis[i], basis[j])
        rhs = tgt.bracket(m @ basis[i], m @ basis[j])
        if lhs != rhs:
            return ("bracket preservation", (i, j), lhs, rhs)
    return None


def check_morphism(phi: HomMorphism) -> bool:
    return morphism_witness(phi) is None


def yau_twist(lie_mu: SkewCochain, a: Mat) -> HomLieAlgebra:
    """Twist a Lie bracket by one of its endomorphisms: (g, a o [ , ], a).

    lie_mu must satisfy the untwisted Jacobi identity and a must preserve the
    bracket; both are checked and violations are rejected.
    """
    dim = lie_mu.domain.dim
    plain = TwistedSpace.untwisted(dim)
    base = RawHomStructure(plain, SkewCochain(plain, plain, 2, dict(lie_mu.coeffs)))
    w = hom_jacobi_witness(base)
    if w is not None:
        raise ValueError(f"input bracket fails the Jacobi identity at {w[0]}")
    basis = [Vec.basis(dim, i) for i in range(dim)]
    for i, j in combinations(range(dim), 2):
        if a @ base.bracket(basis[i], basis[j]) != base.bracket(a @ basis[i], a @ basis[j]):
            raise ValueError(f"twisting map is not a bracket homomorphism at pair ({i}, {j})")
    space = TwistedSpace(a)
    twisted = SkewCochain(space, space, 2, {k: a @ v for k, v in lie_mu.coeffs.items()})
    return HomLieAlgebra(space, twisted)


def commutator_hom_lie(product: tuple[tuple[Vec, ...], ...], a: Mat) -> RawHomStructure:
    """Commutator bracket x*y - y*x of a twisted associative product.

    product[i][j] is the basis product e_i * e_j.  The twisted associativity
    law alpha(x)*(y*z) = (x*y)*alpha(z) is checked on all basis triples.
    """
    dim = len(product)
    if a.nrows != dim or any(len(row) != dim for row in product):
        raise ValueError("product table must be square and match the twist size")

    def mul(x: Vec, y: Vec) -> Vec:
        total = Vec.zero(dim)
        for i, ci in x.support():
            for j, cj in y.support():
                total = total + product[i][j].scale(ci * cj)
        return total

    basis = [Vec.basis(dim, i) for i in range(dim)]
    for i in range(dim):
        for j in range(dim):
            for k in range(dim):
                lhs = mul(a @ basis[i], mul(basis[j], basis[k]))
                rhs = mul(mul(basis[i], basis[j]), a @ basis[k])
                if lhs != rhs:
                    raise ValueError(f"product is not twisted-associative at triple ({i}, {j}, {k})")
    space = TwistedSpace(a)
    mu = SkewCochain.from_function(space, space, 2,
                                   lambda key: mul(basis[key[0]], basis[key[1]]) - mul(basis[key[1]], basis[key[0]]))
    return RawHomStructure(space, mu)


def semidirect_weight(action: HomLieAction, lam) -> HomLieAlgebra:
    """Weighted semidirect product on acting + acted with twist alpha (+) beta.

    [(x, h), (y, k)] = ([x, y], x . k - y . h + lam [h, k]); the result is
    verified to be a multiplicative Hom-Lie algebra.
    """
    lam = rat(lam)
    g, h = action.acting, action.acted
    gd, hd = g.dim, h.dim
    dim = gd + hd
    alpha_rows = []
    for i in range(gd):
        alpha_rows.append(tuple(g.alpha.rows[i]) + (Fraction(0),) * hd)
    for i in range(hd):
        alpha_rows.append((Fraction(0),) * gd + tuple(h.alpha.rows[i]))
    space = TwistedSpace(Mat(tuple(alpha_rows)))

    def embed_g(v: Vec) -> Vec:
        return Vec(v.entries + (Fraction(0),) * hd)

    def embed_h(v: Vec) -> Vec:
        return Vec((Fraction(0),) * gd + v.entries)

    def split(i: int) -> tuple[Vec, Vec]:
        if i < gd:
            return g.space.basis_vec(i), Vec.zero(hd)
        return Vec.zero(gd), h.space.basis_vec(i - gd)

    def value(key):
        (x1, h1), (x2, h2) = split(key[0]), split(key[1])
        gpart = g.bracket(x1, x2)
        hpart = action.act(x1, h2) - action.act(x2, h1) + h.bracket(h1, h2).scale(lam)
        return embed_g(gpart) + embed_h(hpart)

    mu = SkewCochain.from_function(space, space, 2, value)
    return HomLieAlgebra(space, mu)


# ---------------------------------------------------------------------------
# Fixtures


def fixture_abelian(dim: int, alpha: Mat | None = None) -> HomLieAlgebra:
    """Zero bracket with an arbitrary twist (identity by default)."""
    space = TwistedSpace(alpha if alpha is not None else Mat.identity(dim))
    return HomLieAlgebra(space, SkewCochain.zero(space, space, 2))

def fixture_jackson_sl2(q) -> RawHomStructure:
    """q-deformed sl2 on basis (e, h, f) with diagonal twist (q, q, q^2).

    Brackets: [h, e] = 2e, [e, f] = (1+q)/2 h, [h, f] = -2q f.  Satisfies the
    twisted Jacobi identity for every q but is multiplicative only for the
    degenerate values q in {0, 1}; returned raw so it can be diagnosed.
    """
    q = rat(q)
    space = TwistedSpace(Mat.diagonal([q, q, q * q]))
    half = Fraction(1, 2)
    table = {
        (0, 1): Vec.make([-2, 0, 0]),              # [e, h] = -[h, e]
        (0, 2): Vec.make([0, (1 + q) * half, 0]),  # [e, f]
        (1, 2): Vec.make([0, 0, -2 * q]),          # [h, f]
    }
    mu = SkewCochain(space, space, 2, table)
    return RawHomStructure(space, mu, basis_names=("e", "h", "f"))


def fixture_3dim(a, b, c, d) -> RawHomStructure:
    """Four-parameter bracket on a 3-dim space with twist diag(1, 2, 2).

    [e1, e2] = a e1 + b e3, [e1, e3] = c e2, [e2, e3] = d e1 + 2a e3.
    Twisted Jacobi holds for all parameters; multiplicativity holds exactly
    when a = d = 0.
    """
    a, b, c, d = rat(a), rat(b), rat(c), rat(d)
    space = TwistedSpace(Mat.diagonal([1, 2, 2]))
    table = {
        (0, 1): Vec.make([a, 0, b]),
        (0, 2): Vec.make([0, c, 0]),
        (1, 2): Vec.make([d, 0, 2 * a]),
    }
    return RawHomStructure(space, SkewCochain(space, space, 2, table))


def fixture_b(b=1, c=1) -> HomLieAlgebra:
    """The multiplicative member of the 3-dim family (a = d = 0)."""
    return as_hom_lie(fixture_3dim(0, b, c, 0))


def _sl2_lie_mu() -> SkewCochain:
    space = TwistedSpace.untwisted(3)
    table = {
        (0, 1): Vec.make([-2, 0, 0]),
        (0, 2): Vec.make([0, 1, 0]),
        (1, 2): Vec.make([0, 0, -2]),
    }
    return SkewCochain(space, space, 2, table)


def fixture_yau_sl2(t=2) -> HomLieAlgebra:
    """Yau twist of classical sl2 by the diagonal automorphism (t, 1, 1/t)."""
    t = rat(t)
    return yau_twist(_sl2_lie_mu(), Mat.diagonal([t, 1, 1 / t]))


def fixture_yau_heisenberg(s=2, t=3) -> HomLieAlgebra:
    """Yau twist of the Heisenberg algebra [e1, e2] = e3 by diag(s, t, s t)."""
    s, t = rat(s), rat(t)
    space = TwistedSpace.untwisted(3)
    mu = SkewCochain(space, space, 2, {(0, 1): Vec.make([0, 0, 1])})
    return yau_twist(mu, Mat.diagonal([s, t, s * t]))


def fixture_yau_shear() -> HomLieAlgebra:
    """Heisenberg algebra twisted by a unipotent (non-diagonal) automorphism.

    The shear e2 -> e1 + e2 preserves [e1, e2] = e3, so the twist is a
    bracket homomorphism but has a nontrivial Jordan block; exercises every
    code path that diagonal twists leave untested.
    """
    space = TwistedSpace.untwisted(3)
    mu = SkewCochain(space, space, 2, {(0, 1): Vec.make([0, 0, 1])})
    return yau_twist(mu, Mat.make([[1, 1, 0], [0, 1, 0], [0, 0, 1]]))


def fixture_yau_dim4() -> HomLieAlgebra:
    """Yau twist of an almost-abelian 4-dim Lie algebra.

    [e1, ei] = (i - 1) ei for i = 2, 3, 4, twisted by diag(1, 2, 1, 3); gives
    a multiplicative Hom-Lie algebra where arity-4 cochains are nontrivial.
    """
    space = TwistedSpace.untwisted(4)
    table = {
        (0, 1): Vec.make([0, 1, 0, 0]),
        (0, 2): Vec.make([0, 0, 2, 0]),
        (0, 3): Vec.make([0, 0, 0, 3]),
    }
    mu = SkewCochain(space, space, 2, table)
    return yau_twist(mu, Mat.diagonal([1, 2, 1, 3]))


def abelianized(alg: HomLieAlgebra) -> HomLieAlgebra:
    """Zero-bracket algebra on the same twisted space."""
    return HomLieAlgebra(alg.space, SkewCochain.zero(alg.space, alg.space, 2))


def bracket_action_on_abelian(alg: HomLieAlgebra) -> HomLieAction:
    """The algebra acting by its bracket on the abelianized copy of itself.

    This is the standard non-adjoint action fixture: the representation is
    the adjoint one but the acted algebra carries the zero bracket, so the
    derivation law is vacuous.
    """
    target = abelianized(alg)
    basis = [alg.space.basis_vec(i) for i in range(alg.dim)]
    table = tuple(tuple(alg.bracket(basis[i], basis[j]) for j in range(alg.dim))
                  for i in range(alg.dim))
    return HomLieAction(alg, target, table)
