"""Nijenhuis and (relative) Rota-Baxter operators.

Every operator predicate here is checked two ways: the pointwise defining
identity on basis pairs, and the Maurer-Cartan / graph-closure restatement in
the graded bracket machinery.  The dual routes must agree; a disagreement is
an internal consistency failure (it would mean a sign error in a bracket),
reported as ``ConsistencyError`` rather than a verdict.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from .linalg import Mat, Vec, mat_rank, rat
from .cochains import (SkewCochain, cochain_matrix, compatibility_basis, operator_cochain)
from .structures import (HomLieAction, HomLieAlgebra, HomMorphism, RawHomStructure,
                         Representation, adjoint_representation, check_morphism,
                         hom_jacobi_witness, representation_witness, semidirect_weight)
from .differentials import d_lambda, d_lambda_tilde, d_trivial, delta_hom
from .brackets import cup_bracket, derived_bracket, derived_bracket_rel, fn_bracket


class ConsistencyError(RuntimeError):
    """Divergence between dual implementations of the same criterion."""


HALF = Fraction(1, 2)


def _endo_cochain(alg: HomLieAlgebra, m: Mat) -> SkewCochain:
    if alg.alpha @ m != m @ alg.alpha:
        raise ValueError("operator does not commute with the twist")
    return operator_cochain(alg.space, alg.space, m)


def deformed_bracket_n(alg: HomLieAlgebra, N: Mat) -> SkewCochain:
    """The bracket [x, y]^N = [Nx, y] + [x, Ny] - N[x, y] as a 2-cochain."""
    _endo_cochain(alg, N)
    basis = [alg.space.basis_vec(i) for i in range(alg.dim)]

    def value(key):
        x, y = basis[key[0]], basis[key[1]]
        return alg.bracket(N @ x, y) + alg.bracket(x, N @ y) - (N @ alg.bracket(x, y))

    return SkewCochain.from_function(alg.space, alg.space, 2, value)


def nijenhuis_defect(alg: HomLieAlgebra, N: Mat):
    """First basis pair violating [Nx, Ny] = N([x, y]^N), with both sides."""
    _endo_cochain(alg, N)
    deformed = deformed_bracket_n(alg, N)
    basis = [alg.space.basis_vec(i) for i in range(alg.dim)]
    for i, j in combinations(range(alg.dim), 2):
        lhs = alg.bracket(N @ basis[i], N @ basis[j])
        rhs = N @ deformed.value_on((i, j))
        if lhs != rhs:
            return (i, j), lhs, rhs
    return None


def is_nijenhuis(alg: HomLieAlgebra, N: Mat) -> bool:
    """[Nx, Ny] = N([x, y]^N) on basis pairs, cross-checked as [N, N]_fn = 0."""
    nc = _endo_cochain(alg, N)
    direct = nijenhuis_defect(alg, N) is None
    via_mc = fn_bracket(alg, nc, nc).is_zero()
    if direct != via_mc:
        raise ConsistencyError(
            f"Nijenhuis criteria disagree: pointwise={direct}, bracket square={via_mc}")
    return direct


@dataclass(frozen=True)
class OperatorReport:
    """Outcome of the full post-verification battery for one operator."""

    ok: bool
    checks: tuple[tuple[str, bool, str], ...]

    def failed(self) -> list[str]:
        return [f"{name}: {msg}" for name, passed, msg in self.checks if not passed]


def nijenhuis_report(alg: HomLieAlgebra, N: Mat,
                     ts=("1", "-1", "1/2", "3")) -> OperatorReport:
    """Verify everything a Nijenhuis operator induces.

    The deformed bracket gives a Hom-Lie algebra, N is a morphism from the
    deformed structure to the original one, the pencil mu + t * deformed
    satisfies the twisted Jacobi identity for the sample weights t, and the
    squared bracket obstruction vanishes.
    """
    checks = []
    nij = is_nijenhuis(alg, N)
    checks.append(("nijenhuis identity", nij, "" if nij else "defining identity fails"))
    deformed = deformed_bracket_n(alg, N)
    deformed_alg = None
    try:
        deformed_alg = HomLieAlgebra(alg.space, deformed)
        checks.append(("deformed structure", True, ""))
    except ValueError as exc:
        checks.append(("deformed structure", False, str(exc)))
    if deformed_alg is not None:
        morph = check_morphism(HomMorphism(deformed_alg, alg, N))
        checks.append(("morphism from deformed", morph, "" if morph else "N fails to intertwine the brackets"))
    for t in ts:
        t = rat(t)
        pencil = alg.mu + deformed.scale(t)
        witness = hom_jacobi_witness(RawHomStructure(alg.space, pencil))
        ok = witness is None
        checks.append((f"pencil t={t}", ok, "" if ok else f"Jacobi fails at {witness[0]}"))
    nc = _endo_cochain(alg, N)
    sq = delta_hom(adjoint_representation(alg), fn_bracket(alg, nc, nc)).is_zero()
    checks.append(("coboundary of bracket square", sq, "" if sq else "nonzero"))
    return OperatorReport(all(p for _, p, _ in checks), tuple(checks))


def rb_deformed_bracket(alg: HomLieAlgebra, R: Mat, lam) -> SkewCochain:
    """The bracket [x, y]^R = [Rx, y] + [x, Ry] + lam [x, y] as a 2-cochain."""
    _endo_cochain(alg, R)
    lam = rat(lam)
    basis = [alg.space.basis_vec(i) for i in range(alg.dim)]

    def value(key):
        x, y = basis[key[0]], basis[key[1]]
        return alg.bracket(R @ x, y) + alg.bracket(x, R @ y) + alg.bracket(x, y).scale(lam)

    return SkewCochain.from_function(alg.space, alg.space, 2, value)


def rota_baxter_defect(alg: HomLieAlgebra, R: Mat, lam):
    """First basis pair violating the weighted Rota-Baxter identity."""
    _endo_cochain(alg, R)
    lam = rat(lam)
    deformed = rb_deformed_bracket(alg, R, lam)
    basis = [alg.space.basis_vec(i) for i in range(alg.dim)]
    for i, j in combinations(range(alg.dim), 2):
        lhs = alg.bracket(R @ basis[i], R @ basis[j])
        rhs = R @ deformed.value_on((i, j))
        if lhs != rhs:
            return (i, j), lhs, rhs
    return None


def is_rota_baxter(alg: HomLieAlgebra, R: Mat, lam) -> bool:
    """[Rx, Ry] = R([Rx, y] + [x, Ry] + lam [x, y]) on basis pairs.

    Cross-checked against the Maurer-Cartan equation of the weighted derived
    differential graded Lie algebra: d_lam R + (1/2)[R, R]_derived = 0.
    """
    lam = rat(lam)
    rc = _endo_cochain(alg, R)
    direct = rota_baxter_defect(alg, R, lam) is None
    residual = d_lambda(alg, rc, lam) + derived_bracket(alg, rc, rc).scale(HALF)
    via_mc = residual.is_zero()
    if direct != via_mc:
        raise ConsistencyError(
            f"Rota-Baxter criteria disagree: pointwise={direct}, Maurer-Cartan={via_mc}")
    return direct


def _relative_cochain(action: HomLieAction, R: Mat) -> SkewCochain:
    g, h = action.acting, action.acted
    if g.alpha @ R != R @ h.alpha:
        raise ValueError("operator does not intertwine the twists")
    return operator_cochain(h.space, g.space, R)


def relative_rb_defect(action: HomLieAction, R: Mat, lam):
    """First basis pair violating the relative Rota-Baxter identity."""
    _relative_cochain(action, R)
    lam = rat(lam)
    g, h = action.acting, action.acted
    basis = [h.space.basis_vec(i) for i in range(h.dim)]
    for i, j in combinations(range(h.dim), 2):
        hi, hj = basis[i], basis[j]
        lhs = g.bracket(R @ hi, R @ hj)
        rhs = R @ (action.act(R @ hi, hj) - action.act(R @ hj, hi)
                   + h.bracket(hi, hj).scale(lam))
        if lhs != rhs:
            return (i, j), lhs, rhs
    return None


def relative_rb_pointwise(action: HomLieAction, R: Mat, lam) -> bool:
    """[Rh, Rk] = R(Rh . k - Rk . h + lam [h, k]) on basis pairs of the acted algebra."""
    return relative_rb_defect(action, R, lam) is None


def relative_rb_graph(action: HomLieAction, R: Mat, lam) -> bool:
    """Graph closure inside the weighted semidirect product.

    Builds the semidirect algebra on acting + acted and checks that brackets
    of graph generators (R h, h) stay inside the span of the graph.
    """
    _relative_cochain(action, R)
    big = semidirect_weight(action, lam)
    g, h = action.acting, action.acted
    graph_cols = [Vec(tuple((R @ h.space.basis_vec(j)).entries) + h.space.basis_vec(j).entries)
                  for j in range(h.dim)]
    graph_mat = Mat.from_columns(graph_cols)
    base_rank = mat_rank(graph_mat)
    for i, j in combinations(range(h.dim), 2):
        w = big.bracket(graph_cols[i], graph_cols[j])
        if mat_rank(Mat.from_columns(graph_cols + [w])) != base_rank:
            return False
    return True


def relative_rb_mc(action: HomLieAction, R: Mat, lam) -> bool:
    """Maurer-Cartan equation in the relative derived differential graded Lie algebra."""
    rc = _relative_cochain(action, R)
    residual = (d_lambda_tilde(action.acted, rc, lam)
                + derived_bracket_rel(action, rc, rc).scale(HALF))
    return residual.is_zero()


def is_relative_rb(action: HomLieAction, R: Mat, lam) -> bool:
    """All three relative Rota-Baxter criteria; they must agree."""
    a = relative_rb_pointwise(action, R, lam)
    b = relative_rb_graph(action, R, lam)
    c = relative_rb_mc(action, R, lam)
    if a != b or a != c:
        raise ConsistencyError(
            f"relative Rota-Baxter criteria disagree: pointwise={a}, graph={b}, Maurer-Cartan={c}")
    return a


def induced_structures(action: HomLieAction, R: Mat, lam) -> tuple[HomLieAlgebra, Representation]:
    """The Hom-Lie algebra and representation induced by a relative operator.

    The acted space acquires the bracket Rh . k - Rk . h + lam [h, k] (with
    the acted twist), the acting space becomes a module for it via
    h . x = [Rh, x] + R(x . h), and R becomes a morphism from the induced
    algebra to the acting one.  All three facts are verified.
    """
    lam = rat(lam)
    if not is_relative_rb(action, R, lam):
        raise ValueError("operator fails the relative Rota-Baxter identity")
    g, h = action.acting, action.acted
    hbasis = [h.space.basis_vec(i) for i in range(h.dim)]
    gbasis = [g.space.basis_vec(i) for i in range(g.dim)]

    def bracket_value(key):
        hi, hj = hbasis[key[0]], hbasis[key[1]]
        return (action.act(R @ hi, hj) - action.act(R @ hj, hi)
                + h.bracket(hi, hj).scale(lam))

    induced = HomLieAlgebra(h.space, SkewCochain.from_function(h.space, h.space, 2, bracket_value))
    table = tuple(
        tuple(g.bracket(R @ hbasis[i], gbasis[j]) + (R @ action.act(gbasis[j], hbasis[i]))
              for j in range(g.dim))
        for i in range(h.dim))
    rep = Representation(induced, g.space, table)
    w = representation_witness(rep)
    if w is not None:
        raise ConsistencyError(f"induced module structure fails its axioms: {w[0]} at {w[1]}")
    if not check_morphism(HomMorphism(induced, g, R)):
        raise ConsistencyError("operator is not a morphism from the induced algebra")
    return induced, rep


def mc_residual(s: SkewCochain, dgla_kind: str, *, target: HomLieAlgebra | None = None,
                phi: HomMorphism | None = None, alg: HomLieAlgebra | None = None,
                action: HomLieAction | Representation | None = None, lam=0) -> SkewCochain:
    """d(s) + (1/2)[s, s] in the chosen differential graded Lie algebra.

    Kinds: "morphism" (cup bracket, trivial-coefficient differential into
    ``target``), "morphism_twisted" (same bracket, differential twisted by a
    verified morphism ``phi``), "derived" (weight-``lam`` differential on
    ``alg``), "relative_derived" (the module version over ``action``).
    """
    if s.arity != 1:
        raise ValueError("Maurer-Cartan residual is defined for arity-1 elements")
    if dgla_kind == "morphism":
        if target is None:
            raise ValueError("morphism residual needs the codomain algebra")
        source = alg
        if source is None:
            raise ValueError("morphism residual needs the domain algebra")
        return d_trivial(source, s) + cup_bracket(s, s, target).scale(HALF)
    if dgla_kind == "morphism_twisted":
        if phi is None:
            raise ValueError("twisted morphism residual needs the base morphism")
        if not check_morphism(phi):
            raise ValueError("base map is not a morphism")
        d = d_trivial(phi.source, s) + cup_bracket(phi.as_cochain(), s, phi.target)
        return d + cup_bracket(s, s, phi.target).scale(HALF)
    if dgla_kind == "derived":
        if alg is None:
            raise ValueError("derived residual needs the algebra")
        return d_lambda(alg, s, lam) + derived_bracket(alg, s, s).scale(HALF)
    if dgla_kind == "relative_derived":
        if action is None:
            raise ValueError("relative derived residual needs the action")
        acted = action.acted if isinstance(action, HomLieAction) else None
        if acted is None:
            raise ValueError("relative derived residual needs a full action")
        return (d_lambda_tilde(acted, s, lam)
                + derived_bracket_rel(action, s, s).scale(HALF))
    raise ValueError(f"unknown differential graded Lie algebra kind: {dgla_kind!r}")


# ---------------------------------------------------------------------------
# Bounded brute-force searches


def _twist_aligned_positions(basis: list[SkewCochain]) -> list[tuple[int, int]] | None:
    """Entry positions spanning the intertwiner space, if it is entry-aligned."""
    positions = []
    for b in basis:
        m = cochain_matrix(b)
        nz = [(i, j) for i in range(m.nrows) for j in range(m.ncols) if m.rows[i][j] != 0]
        if len(nz) != 1 or m.rows[nz[0][0]][nz[0][1]] != 1:
            return None
        positions.append(nz[0])
    return positions


def _search_matrices(source, target, entries) -> list[Mat]:
    """All matrices with entries in the given set intertwining the twists."""
    entries = tuple(rat(e) for e in entries)
    rows, cols = target.dim, source.dim
    basis = compatibility_basis(source, target, 1)
    positions = _twist_aligned_positions(basis)
    found = []
    if positions is not None and (Fraction(0) in entries or len(positions) == rows * cols):
        for combo in product(entries, repeat=len(positions)):
            grid = [[Fraction(0)] * cols for _ in range(rows)]
            for (i, j), v in zip(positions, combo):
                grid[i][j] = v
            found.append(Mat.make(grid))
        return found
    for combo in product(entries, repeat=rows * cols):
        m = Mat.make([combo[r * cols:(r + 1) * cols] for r in range(rows)])
        if target.alpha @ m == m @ source.alpha:
            found.append(m)
    return found


def search_nijenhuis(alg: HomLieAlgebra, entries=(-1, 0, 1)) -> list[Mat]:
    """Twist-commuting matrices over an entry grid satisfying the Nijenhuis identity."""
    return [m for m in _search_matrices(alg.space, alg.space, entries)
            if is_nijenhuis(alg, m)]


def search_rota_baxter(alg: HomLieAlgebra, lam, entries=(-1, 0, 1)) -> list[Mat]:
    lam = rat(lam)
    return [m for m in _search_matrices(alg.space, alg.space, entries)
            if is_rota_baxter(alg, m, lam)]


def search_relative_rb(action: HomLieAction, lam, entries=(-1, 0, 1)) -> list[Mat]:
    lam = rat(lam)
    out = []
    for m in _search_matrices(action.acted.space, action.acting.space, entries):
        if relative_rb_pointwise(action, m, lam) and is_relative_rb(action, m, lam):
            out.append(m)
    return out
