"""Randomized exact verification of the graded bracket identities.

Each identity tag names one equation of the bracket calculus.  A trial
samples twist-compatible cochains with small integer coefficients, evaluates
both sides as full coefficient tables and compares them with exact rational
equality; the first differing basis tuple becomes the failure witness.
Trials draw from independent deterministic streams keyed by (seed, identity,
trial index), so reports are reproducible and trials could run in any order.

Identity catalogue (in fixed order):

 1  mc_homlie               square-zero 2-cochains of the insertion bracket
                            agree with the direct twisted-Jacobi oracle
 2  nr_graded_lie           graded skew + Jacobi, insertion bracket
 3  cup_graded_lie          graded skew + Jacobi, cup bracket
 4  cup_via_theta           cup bracket via theta and insertion
 5  cup_via_delta           cup bracket via the adjoint coboundary
 6  delta_cup_derivation    adjoint coboundary derives the cup bracket
 7  cup_trivial_cohomology  cup of cocycles is an explicit coboundary
 8  theta_cup_derivation    derivation-like law of theta over cup
 9  pre_lie                 graded right pre-Lie identity of insertion
10  rho_is_action           insertion acts on the cup algebra
11  semidirect_jacobi       graded Lie structure on the semidirect sum
12  graph_delta_closed      coboundary graph closed: delta is fn -> nr morphism
13  fn_graded_lie           graded skew + Jacobi, corrected cup bracket
14  fn_two_formulas         defining vs explicit vs coboundary-form agree
15  matched_pair_axioms     all four matched-pair identities
16  bicrossed_jacobi        bicrossed bracket Lie structure + pair embedding
17  graph_theta_closed      theta graph closed: theta is derived -> nr morphism
18  derived_graded_lie      graded skew + Jacobi, derived bracket
19  derived_two_formulas    defining vs explicit three-sum formula
20  d_lambda_derivation     weighted differential derives the derived bracket
21  theta_squared           square of theta via its coboundary commutator
22  rb_lemma                cup with the structure cochain via theta images
23  relative_consistency    three relative Rota-Baxter criteria agree
24  d_r_matches_induced     operator coboundary equals the induced-module one
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass
from fractions import Fraction

from .linalg import Mat, Vec, kernel_basis, rat, rat_str
from .cochains import (SkewCochain, TwistedSpace, cochain_matrix, compatibility_basis,
                       contract, evaluate, flatten_cochain, shuffles)
from .structures import (HomLieAlgebra, RawHomStructure, adjoint_representation,
                         bracket_action_on_abelian, fixture_abelian, fixture_b,
                         fixture_yau_dim4, fixture_yau_heisenberg, fixture_yau_shear,
                         fixture_yau_sl2, hom_jacobi_witness)
from .differentials import d_lambda, delta_hom
from . import brackets as br
from .brackets import GradedPair
from .cohomology import d_rb
from .operators import (induced_structures, relative_rb_graph, relative_rb_mc,
                        relative_rb_pointwise, search_relative_rb)

IDENTITIES: tuple[str, ...] = (
    "mc_homlie", "nr_graded_lie", "cup_graded_lie", "cup_via_theta", "cup_via_delta",
    "delta_cup_derivation", "cup_trivial_cohomology", "theta_cup_derivation",
    "pre_lie", "rho_is_action", "semidirect_jacobi", "graph_delta_closed",
    "fn_graded_lie", "fn_two_formulas", "matched_pair_axioms", "bicrossed_jacobi",
    "graph_theta_closed", "derived_graded_lie", "derived_two_formulas",
    "d_lambda_derivation", "theta_squared", "rb_lemma", "relative_consistency",
    "d_r_matches_induced",
)

_LAMBDAS = ("0", "1", "-1", "1/2", "2")


def _sign(exponent: int) -> int:
    return -1 if exponent % 2 else 1


@dataclass(frozen=True)
class Failure:
    trial: int
    detail: str
    witness: tuple[int, ...] | None
    lhs: tuple[str, ...] | str
    rhs: tuple[str, ...] | str

    def to_json(self) -> dict:
        return {"trial": self.trial, "detail": self.detail,
                "witness": list(self.witness) if self.witness else None,
                "lhs": list(self.lhs) if isinstance(self.lhs, tuple) else self.lhs,
                "rhs": list(self.rhs) if isinstance(self.rhs, tuple) else self.rhs}


@dataclass(frozen=True)
class VerificationReport:
    identity: str
    trials: int
    failures: tuple[Failure, ...]

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {"identity": self.identity, "trials": self.trials,
                "passed": self.passed,
                "failures": [f.to_json() for f in self.failures]}


@dataclass(frozen=True)
class SuiteReport:
    seed: int
    trials: int
    max_arity: int
    results: tuple[tuple[str, tuple[VerificationReport, ...]], ...]

    @property
    def all_passed(self) -> bool:
        return all(r.passed for _, reports in self.results for r in reports)

    def to_json(self) -> dict:
        return {"seed": self.seed, "trials": self.trials, "max_arity": self.max_arity,
                "all_passed": self.all_passed,
                "fixtures": [
                    {"fixture": name, "reports": [r.to_json() for r in reports]}
                    for name, reports in self.results]}


def _stream(seed: int, *labels) -> random.Random:
    digest = hashlib.sha256("|".join([str(seed), *map(str, labels)]).encode()).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


def sample_cochain(domain: TwistedSpace, codomain: TwistedSpace, arity: int,
                   rng: random.Random) -> SkewCochain:
    """Random integer combination (coefficients in [-3, 3]) of the compatible basis.

    Membership in the compatible cochain space holds by construction.
    """
    total = SkewCochain.zero(domain, codomain, arity)
    for b in compatibility_basis(domain, codomain, arity):
        c = rng.randint(-3, 3)
        if c:
            total = total + b.scale(c)
    return total


def _sample_endo(alg: HomLieAlgebra, rng: random.Random, max_arity: int,
                 arity: int | None = None) -> SkewCochain:
    if arity is None:
        arity = rng.randint(1, max_arity)
    return sample_cochain(alg.space, alg.space, arity, rng)


def _mismatch(detail: str, A: SkewCochain, B: SkewCochain):
    """First differing basis tuple between two coefficient tables."""
    if A == B:
        return None
    for key in sorted(set(A.coeffs) | set(B.coeffs)):
        va, vb = A.value_on(key), B.value_on(key)
        if va != vb:
            return (detail, tuple(i + 1 for i in key),
                    tuple(rat_str(x) for x in va.entries),
                    tuple(rat_str(x) for x in vb.entries))
    return None


def _pair_mismatch(detail: str, a: GradedPair, b: GradedPair):
    return (_mismatch(detail + " (first component)", a.upper, b.upper)
            or _mismatch(detail + " (second component)", a.lower, b.lower))


def _skew_jacobi(detail, bracket, degree_of, P, Q, R, mismatch=_mismatch):
    dP, dQ = degree_of(P), degree_of(Q)
    skew = mismatch(f"{detail} skew-symmetry",
                    bracket(Q, P), bracket(P, Q).scale(-_sign(dP * dQ)))
    if skew is not None:
        return skew
    lhs = bracket(P, bracket(Q, R))
    rhs = bracket(bracket(P, Q), R) + bracket(Q, bracket(P, R)).scale(_sign(dP * dQ))
    return mismatch(f"{detail} Jacobi", lhs, rhs)


# ---------------------------------------------------------------------------
# Explicit shuffle-sum twins used as independent oracles


def _fn_explicit(alg: HomLieAlgebra, P: SkewCochain, Q: SkewCochain) -> SkewCochain:
    """Corrected cup bracket via its three explicit shuffle sums."""
    m, n = P.arity, Q.arity
    space = alg.space
    adj = adjoint_representation(alg)
    dP, dQ = delta_hom(adj, P), delta_hom(adj, Q)
    pw = space.twist_power
    basis = [space.basis_vec(i) for i in range(space.dim)]
    sh_cup = list(shuffles(m, n))
    sh_p = list(shuffles(m + 1, n - 1))
    sh_q = list(shuffles(n + 1, m - 1))

    def value(key):
        total = Vec.zero(space.dim)
        for image, sign in sh_cup:
            left = P.value_on(tuple(key[p] for p in image[:m]))
            right = Q.value_on(tuple(key[p] for p in image[m:]))
            if left.is_zero() or right.is_zero():
                continue
            total = total + alg.bracket(pw(n - 1) @ left, pw(m - 1) @ right).scale(sign)
        for image, sign in sh_p:
            head = dP.value_on(tuple(key[p] for p in image[:m + 1]))
            if head.is_zero():
                continue
            rest = [pw(m) @ basis[key[p]] for p in image[m + 1:]]
            total = total + evaluate(Q, [head] + rest).scale(sign * _sign(m))
        for image, sign in sh_q:
            head = dQ.value_on(tuple(key[p] for p in image[:n + 1]))
            if head.is_zero():
                continue
            rest = [pw(n) @ basis[key[p]] for p in image[n + 1:]]
            total = total - evaluate(P, [head] + rest).scale(sign * _sign((m + 1) * n))
        return total

    return SkewCochain.from_function(space, space, m + n, value)


def _derived_explicit(alg: HomLieAlgebra, P: SkewCochain, Q: SkewCochain) -> SkewCochain:
    """Derived bracket via its explicit three-block shuffle sums."""
    m, n = P.arity, Q.arity
    space = alg.space
    pw = space.twist_power
    basis = [space.basis_vec(i) for i in range(space.dim)]
    sh_cup = list(shuffles(m, n))
    sh_p = list(shuffles(m, 1, n - 1))
    sh_q = list(shuffles(n, 1, m - 1))

    def value(key):
        total = Vec.zero(space.dim)
        for image, sign in sh_cup:
            left = P.value_on(tuple(key[p] for p in image[:m]))
            right = Q.value_on(tuple(key[p] for p in image[m:]))
            if left.is_zero() or right.is_zero():
                continue
            total = total + alg.bracket(pw(n - 1) @ left, pw(m - 1) @ right).scale(sign)
        for image, sign in sh_p:
            head = P.value_on(tuple(key[p] for p in image[:m]))
            if head.is_zero():
                continue
            inner = alg.bracket(head, pw(m - 1) @ basis[key[image[m]]])
            rest = [pw(m) @ basis[key[p]] for p in image[m + 1:]]
            total = total - evaluate(Q, [inner] + rest).scale(sign)
        for image, sign in sh_q:
            head = Q.value_on(tuple(key[p] for p in image[:n]))
            if head.is_zero():
                continue
            inner = alg.bracket(head, pw(n - 1) @ basis[key[image[n]]])
            rest = [pw(n) @ basis[key[p]] for p in image[n + 1:]]
            total = total + evaluate(P, [inner] + rest).scale(sign * _sign(m * n))
        return total

    return SkewCochain.from_function(space, space, m + n, value)


def _derived_rel_explicit(action, P: SkewCochain, Q: SkewCochain) -> SkewCochain:
    """Relative derived bracket via its explicit shuffle sums (action form)."""
    rep = action.rep if hasattr(action, "rep") else action
    g = rep.algebra
    module = rep.module
    m, n = P.arity, Q.arity
    gpw = g.space.twist_power
    hpw = module.twist_power
    basis = [module.basis_vec(i) for i in range(module.dim)]
    sh_cup = list(shuffles(m, n))
    sh_p = list(shuffles(m, 1, n - 1))
    sh_q = list(shuffles(n, 1, m - 1))

    def value(key):
        total = Vec.zero(g.dim)
        for image, sign in sh_cup:
            left = P.value_on(tuple(key[p] for p in image[:m]))
            right = Q.value_on(tuple(key[p] for p in image[m:]))
            if left.is_zero() or right.is_zero():
                continue
            total = total + g.bracket(gpw(n - 1) @ left, gpw(m - 1) @ right).scale(sign)
        for image, sign in sh_p:
            head = P.value_on(tuple(key[p] for p in image[:m]))
            if head.is_zero():
                continue
            inner = rep.act(head, hpw(m - 1) @ basis[key[image[m]]])
            rest = [hpw(m) @ basis[key[p]] for p in image[m + 1:]]
            total = total - evaluate(Q, [inner] + rest).scale(sign)
        for image, sign in sh_q:
            head = Q.value_on(tuple(key[p] for p in image[:n]))
            if head.is_zero():
                continue
            inner = rep.act(head, hpw(n - 1) @ basis[key[image[n]]])
            rest = [hpw(n) @ basis[key[p]] for p in image[n + 1:]]
            total = total + evaluate(P, [inner] + rest).scale(sign * _sign(m * n))
        return total

    return SkewCochain.from_function(module, g.space, m + n, value)


# ---------------------------------------------------------------------------
# Per-identity contexts (computed once per verify call)


def _cocycle_data(alg: HomLieAlgebra, max_arity: int):
    """Per arity: compatible basis plus kernel coefficients of the adjoint coboundary."""
    adj = adjoint_representation(alg)
    data = {}
    for m in range(1, max_arity + 1):
        basis = compatibility_basis(alg.space, alg.space, m)
        if not basis:
            data[m] = ([], [])
            continue
        columns = [flatten_cochain(delta_hom(adj, b)) for b in basis]
        data[m] = (basis, kernel_basis(Mat.from_columns(columns)))
    return data


def _sample_cocycle(data, arity: int, rng: random.Random, space, codomain) -> SkewCochain:
    basis, kern = data[arity]
    total = SkewCochain.zero(space, codomain, arity)
    for k in kern:
        c = rng.randint(-3, 3)
        if c:
            for b, coeff in zip(basis, k.entries):
                if coeff:
                    total = total + b.scale(coeff * c)
    return total


def _relative_context(alg: HomLieAlgebra):
    """Action of the algebra on its abelianized copy, plus verified operators."""
    action = bracket_action_on_abelian(alg)
    verified = []
    for lam in (Fraction(0), Fraction(1)):
        for R in search_relative_rb(action, lam):
            verified.append((lam, R))
    if not verified:
        verified.append((Fraction(0), Mat.zero(alg.dim, alg.dim)))
    return action, verified


def _context(identity: str, alg: HomLieAlgebra, max_arity: int):
    if identity == "cup_trivial_cohomology":
        return _cocycle_data(alg, max_arity)
    if identity == "relative_consistency":
        action, verified = _relative_context(alg)
        return action, verified
    if identity == "d_r_matches_induced":
        action, verified = _relative_context(alg)
        induced = [(lam, R) + induced_structures(action, R, lam) for lam, R in verified]
        return action, induced
    return None


# ---------------------------------------------------------------------------
# Identity checkers: return a mismatch tuple or None


def _check_mc_homlie(alg, rng, max_arity, ctx):
    own = br.nr_bracket(alg.mu, alg.mu)
    if not own.is_zero():
        return _mismatch("structure cochain square", own,
                         SkewCochain.zero(alg.space, alg.space, own.arity))
    nu = sample_cochain(alg.space, alg.space, 2, rng)
    square_zero = br.nr_bracket(nu, nu).is_zero()
    jacobi = hom_jacobi_witness(RawHomStructure(alg.space, nu)) is None
    if square_zero != jacobi:
        return ("Maurer-Cartan vs direct twisted Jacobi", None,
                f"bracket square zero: {square_zero}", f"cyclic sum zero: {jacobi}")
    return None


def _check_nr_graded_lie(alg, rng, max_arity, ctx):
    P, Q, R = (_sample_endo(alg, rng, max_arity) for _ in range(3))
    return _skew_jacobi("insertion bracket", br.nr_bracket, lambda f: f.arity - 1, P, Q, R)


def _check_cup_graded_lie(alg, rng, max_arity, ctx):
    P, Q, R = (_sample_endo(alg, rng, max_arity) for _ in range(3))
    return _skew_jacobi("cup bracket", lambda a, b: br.cup_bracket(a, b, alg),
                        lambda f: f.arity, P, Q, R)


def _check_cup_via_theta(alg, rng, max_arity, ctx):
    P = _sample_endo(alg, rng, max_arity)
    Q = _sample_endo(alg, rng, max_arity)
    n = Q.arity
    rhs = (contract(P, br.theta(alg, Q)) - br.theta(alg, contract(P, Q))).scale(_sign(n))
    return _mismatch("cup via theta", br.cup_bracket(P, Q, alg), rhs)


def _check_cup_via_delta(alg, rng, max_arity, ctx):
    P = _sample_endo(alg, rng, max_arity)
    Q = _sample_endo(alg, rng, max_arity)
    m = P.arity
    adj = adjoint_representation(alg)
    rhs = (contract(P, delta_hom(adj, Q))
           + contract(delta_hom(adj, P), Q).scale(_sign(m - 1))
           + delta_hom(adj, contract(P, Q)).scale(_sign(m)))
    return _mismatch("cup via coboundary", br.cup_bracket(P, Q, alg), rhs)


def _check_delta_cup_derivation(alg, rng, max_arity, ctx):
    P = _sample_endo(alg, rng, max_arity)
    Q = _sample_endo(alg, rng, max_arity)
    m = P.arity
    adj = adjoint_representation(alg)
    lhs = delta_hom(adj, br.cup_bracket(P, Q, alg))
    rhs = (br.cup_bracket(delta_hom(adj, P), Q, alg)
           + br.cup_bracket(P, delta_hom(adj, Q), alg).scale(_sign(m)))
    return _mismatch("coboundary derives cup", lhs, rhs)


def _check_cup_trivial_cohomology(alg, rng, max_arity, ctx):
    m = rng.randint(1, max_arity)
    n = rng.randint(1, max_arity)
    P = _sample_cocycle(ctx, m, rng, alg.space, alg.space)
    Q = _sample_cocycle(ctx, n, rng, alg.space, alg.space)
    adj = adjoint_representation(alg)
    preimage = contract(P, Q).scale(_sign(m))
    return _mismatch("cup of cocycles is the explicit coboundary",
                     br.cup_bracket(P, Q, alg), delta_hom(adj, preimage))


def _check_theta_cup_derivation(alg, rng, max_arity, ctx):
    P = _sample_endo(alg, rng, max_arity)
    Q = _sample_endo(alg, rng, max_arity)
    n = Q.arity
    lhs = br.theta(alg, br.cup_bracket(P, Q, alg))
    rhs = (br.cup_bracket(br.theta(alg, P), Q, alg).scale(_sign(n))
           + br.cup_bracket(P, br.theta(alg, Q), alg))
    return _mismatch("theta derives cup", lhs, rhs)


def _check_pre_lie(alg, rng, max_arity, ctx):
    P, Q, R = (_sample_endo(alg, rng, max_arity) for _ in range(3))
    m, n = P.arity, Q.arity
    lhs = contract(contract(P, Q), R) - contract(P, contract(Q, R))
    rhs = (contract(contract(Q, P), R) - contract(Q, contract(P, R))).scale(
        _sign((m - 1) * (n - 1)))
    return _mismatch("graded right pre-Lie identity", lhs, rhs)


def _check_rho_is_action(alg, rng, max_arity, ctx):
    P = _sample_endo(alg, rng, max_arity)
    Q = _sample_endo(alg, rng, max_arity)
    E = _sample_endo(alg, rng, max_arity)
    F = _sample_endo(alg, rng, max_arity)
    m, n, k = P.arity - 1, Q.arity - 1, E.arity
    first = _mismatch("insertion is a bracket morphism",
                      contract(br.nr_bracket(P, Q), E),
                      contract(P, contract(Q, E))
                      - contract(Q, contract(P, E)).scale(_sign(m * n)))
    if first is not None:
        return first
    return _mismatch("insertion derives cup",
                     contract(P, br.cup_bracket(E, F, alg)),
                     br.cup_bracket(contract(P, E), F, alg)
                     + br.cup_bracket(E, contract(P, F), alg).scale(_sign(m * k)))


def _sample_pair(alg, rng, max_arity) -> GradedPair:
    deg = rng.randint(1, max(1, max_arity - 1))
    return GradedPair(sample_cochain(alg.space, alg.space, deg + 1, rng),
                      sample_cochain(alg.space, alg.space, deg, rng))


def _check_semidirect_jacobi(alg, rng, max_arity, ctx):
    a, b, c = (_sample_pair(alg, rng, max_arity) for _ in range(3))
    return _skew_jacobi("semidirect bracket",
                        lambda x, y: br.semidirect_graded_bracket(alg, x, y),
                        lambda p: p.degree, a, b, c, mismatch=_pair_mismatch)


def _check_graph_delta_closed(alg, rng, max_arity, ctx):
    P = _sample_endo(alg, rng, max_arity)
    Q = _sample_endo(alg, rng, max_arity)
    adj = adjoint_representation(alg)
    lhs = delta_hom(adj, br.fn_bracket(alg, P, Q))
    rhs = br.nr_bracket(delta_hom(adj, P), delta_hom(adj, Q))
    return _mismatch("coboundary graph closure", lhs, rhs)


def _check_fn_graded_lie(alg, rng, max_arity, ctx):
    P, Q, R = (_sample_endo(alg, rng, max_arity) for _ in range(3))
    return _skew_jacobi("corrected cup bracket",
                        lambda a, b: br.fn_bracket(alg, a, b), lambda f: f.arity, P, Q, R)


def _check_fn_two_formulas(alg, rng, max_arity, ctx):
    P = _sample_endo(alg, rng, max_arity)
    Q = _sample_endo(alg, rng, max_arity)
    m = P.arity
    adj = adjoint_representation(alg)
    defining = br.fn_bracket(alg, P, Q)
    first = _mismatch("defining vs explicit shuffle formula",
                      defining, _fn_explicit(alg, P, Q))
    if first is not None:
        return first
    alt = br.nr_bracket(P, delta_hom(adj, Q)) + delta_hom(adj, contract(P, Q)).scale(_sign(m))
    return _mismatch("defining vs coboundary form", defining, alt)


def _check_matched_pair_axioms(alg, rng, max_arity, ctx):
    P = _sample_endo(alg, rng, max_arity)
    Q = _sample_endo(alg, rng, max_arity)
    E = _sample_endo(alg, rng, max_arity)
    F = _sample_endo(alg, rng, max_arity)
    m, n = P.arity - 1, Q.arity - 1
    k, l = E.arity, F.arity
    fn = lambda a, b: br.fn_bracket(alg, a, b)
    rho = contract
    psi = lambda e, p: br.fn_bracket(alg, e, p)
    check = _mismatch("action morphism axiom",
                      rho(br.nr_bracket(P, Q), E),
                      rho(P, rho(Q, E)) - rho(Q, rho(P, E)).scale(_sign(m * n)))
    if check is not None:
        return check
    check = _mismatch("twisted derivation axiom",
                      rho(P, fn(E, F)),
                      fn(rho(P, E), F) + fn(E, rho(P, F)).scale(_sign(m * k))
                      + rho(psi(F, P), E).scale(_sign((m + k) * l))
                      - rho(psi(E, P), F).scale(_sign(m * k)))
    if check is not None:
        return check
    check = _mismatch("reverse morphism axiom",
                      psi(fn(E, F), P),
                      psi(E, psi(F, P)) - psi(F, psi(E, P)).scale(_sign(k * l)))
    if check is not None:
        return check
    return _mismatch("reverse derivation axiom",
                     psi(E, br.nr_bracket(P, Q)),
                     br.nr_bracket(psi(E, P), Q)
                     + br.nr_bracket(P, psi(E, Q)).scale(_sign(k * m))
                     + psi(rho(Q, E), P).scale(_sign((k + m) * n))
                     - psi(rho(P, E), Q).scale(_sign(k * m)))


def _check_bicrossed_jacobi(alg, rng, max_arity, ctx):
    a, b, c = (_sample_pair(alg, rng, max_arity) for _ in range(3))
    check = _skew_jacobi("bicrossed bracket",
                         lambda x, y: br.bicrossed_bracket(alg, x, y),
                         lambda p: p.degree, a, b, c, mismatch=_pair_mismatch)
    if check is not None:
        return check
    adj = adjoint_representation(alg)

    def embed(pair: GradedPair) -> GradedPair:
        shift = delta_hom(adj, pair.lower).scale(_sign(pair.degree))
        return GradedPair(pair.upper + shift, pair.lower)

    return _pair_mismatch("pair embedding preserves brackets",
                          embed(br.bicrossed_bracket(alg, a, b)),
                          br.semidirect_graded_bracket(alg, embed(a), embed(b)))


def _check_graph_theta_closed(alg, rng, max_arity, ctx):
    P = _sample_endo(alg, rng, max_arity)
    Q = _sample_endo(alg, rng, max_arity)
    lhs = br.theta(alg, br.derived_bracket(alg, P, Q))
    rhs = br.nr_bracket(br.theta(alg, P), br.theta(alg, Q))
    return _mismatch("theta graph closure", lhs, rhs)


def _check_derived_graded_lie(alg, rng, max_arity, ctx):
    P, Q, R = (_sample_endo(alg, rng, max_arity) for _ in range(3))
    return _skew_jacobi("derived bracket",
                        lambda a, b: br.derived_bracket(alg, a, b),
                        lambda f: f.arity, P, Q, R)


def _check_derived_two_formulas(alg, rng, max_arity, ctx):
    P = _sample_endo(alg, rng, max_arity)
    Q = _sample_endo(alg, rng, max_arity)
    return _mismatch("defining vs explicit three-sum formula",
                     br.derived_bracket(alg, P, Q), _derived_explicit(alg, P, Q))


def _check_d_lambda_derivation(alg, rng, max_arity, ctx):
    P = _sample_endo(alg, rng, max_arity)
    Q = _sample_endo(alg, rng, max_arity)
    lam = rat(rng.choice(_LAMBDAS))
    m = P.arity
    lhs = d_lambda(alg, br.derived_bracket(alg, P, Q), lam)
    rhs = (br.derived_bracket(alg, d_lambda(alg, P, lam), Q)
           + br.derived_bracket(alg, P, d_lambda(alg, Q, lam)).scale(_sign(m)))
    return _mismatch("weighted differential derives the derived bracket", lhs, rhs)


def _check_theta_squared(alg, rng, max_arity, ctx):
    f = _sample_endo(alg, rng, max_arity)
    n = f.arity
    adj = adjoint_representation(alg)
    lhs = br.theta(alg, br.theta(alg, f))
    rhs = (br.theta(alg, delta_hom(adj, f))
           - delta_hom(adj, br.theta(alg, f))).scale(_sign(n))
    return _mismatch("theta squared", lhs, rhs)


def _check_rb_lemma(alg, rng, max_arity, ctx):
    R = sample_cochain(alg.space, alg.space, 1, rng)
    lam = rat(rng.choice(_LAMBDAS))
    first = _mismatch("cup with the structure cochain",
                      br.cup_bracket(alg.mu, R, alg),
                      contract(br.theta(alg, R), alg.mu))
    if first is not None:
        return first
    lhs = br.theta(alg, d_lambda(alg, R, lam))
    rhs = br.nr_bracket(alg.mu, br.theta(alg, R)).scale(-lam)
    return _mismatch("theta of the weighted differential", lhs, rhs)


def _check_relative_consistency(alg, rng, max_arity, ctx):
    action, verified = ctx
    lam = rat(rng.choice(_LAMBDAS))
    if rng.random() < 0.2 and verified:
        lam, R = verified[rng.randrange(len(verified))]
    else:
        R = cochain_matrix(sample_cochain(action.acted.space, action.acting.space, 1, rng))
    pointwise = relative_rb_pointwise(action, R, lam)
    graph = relative_rb_graph(action, R, lam)
    mc = relative_rb_mc(action, R, lam)
    if pointwise != graph or pointwise != mc:
        return ("relative operator criteria disagree", None,
                f"pointwise={pointwise}, graph={graph}", f"Maurer-Cartan={mc}")
    return None


def _check_d_r_matches_induced(alg, rng, max_arity, ctx):
    action, induced = ctx
    lam, R, _, rep = induced[rng.randrange(len(induced))]
    arity = rng.randint(1, max_arity)
    f = sample_cochain(action.acted.space, action.acting.space, arity, rng)
    return _mismatch("operator coboundary vs induced-module coboundary",
                     d_rb(action, R, lam, f), delta_hom(rep, f))


_CHECKERS = {
    "mc_homlie": _check_mc_homlie,
    "nr_graded_lie": _check_nr_graded_lie,
    "cup_graded_lie": _check_cup_graded_lie,
    "cup_via_theta": _check_cup_via_theta,
    "cup_via_delta": _check_cup_via_delta,
    "delta_cup_derivation": _check_delta_cup_derivation,
    "cup_trivial_cohomology": _check_cup_trivial_cohomology,
    "theta_cup_derivation": _check_theta_cup_derivation,
    "pre_lie": _check_pre_lie,
    "rho_is_action": _check_rho_is_action,
    "semidirect_jacobi": _check_semidirect_jacobi,
    "graph_delta_closed": _check_graph_delta_closed,
    "fn_graded_lie": _check_fn_graded_lie,
    "fn_two_formulas": _check_fn_two_formulas,
    "matched_pair_axioms": _check_matched_pair_axioms,
    "bicrossed_jacobi": _check_bicrossed_jacobi,
    "graph_theta_closed": _check_graph_theta_closed,
    "derived_graded_lie": _check_derived_graded_lie,
    "derived_two_formulas": _check_derived_two_formulas,
    "d_lambda_derivation": _check_d_lambda_derivation,
    "theta_squared": _check_theta_squared,
    "rb_lemma": _check_rb_lemma,
    "relative_consistency": _check_relative_consistency,
    "d_r_matches_induced": _check_d_r_matches_induced,
}


def verify(identity: str, algebra: HomLieAlgebra, trials: int = 50, seed: int = 0,
           max_arity: int = 3) -> VerificationReport:
    """Run one identity for the given number of independent random trials."""
    if identity not in _CHECKERS:
        raise ValueError(f"unknown identity tag: {identity!r}")
    checker = _CHECKERS[identity]
    ctx = _context(identity, algebra, max_arity)
    failures = []
    for trial in range(trials):
        rng = _stream(seed, identity, trial)
        result = checker(algebra, rng, max_arity, ctx)
        if result is not None:
            detail, witness, lhs, rhs = result
            failures.append(Failure(trial, detail, witness, lhs, rhs))
    return VerificationReport(identity, trials, tuple(failures))


def default_fixtures() -> list[tuple[str, HomLieAlgebra]]:
    return [
        ("abelian-dim2", fixture_abelian(2)),
        ("threedim-multiplicative", fixture_b()),
        ("yau-sl2", fixture_yau_sl2()),
        ("yau-heisenberg", fixture_yau_heisenberg()),
        ("yau-shear", fixture_yau_shear()),
        ("yau-dim4", fixture_yau_dim4()),
    ]


def run_all(algebras: list[tuple[str, HomLieAlgebra]] | None = None, trials: int = 50,
            seed: int = 0, max_arity: int = 3,
            identities: tuple[str, ...] | None = None) -> SuiteReport:
    """Every identity over every algebra; deterministic for a fixed seed."""
    if algebras is None:
        algebras = default_fixtures()
    tags = identities if identities is not None else IDENTITIES
    results = []
    for name, alg in algebras:
        reports = tuple(verify(tag, alg, trials=trials, seed=seed, max_arity=max_arity)
                        for tag in tags)
        results.append((name, reports))
    return SuiteReport(seed, trials, max_arity, tuple(results))
