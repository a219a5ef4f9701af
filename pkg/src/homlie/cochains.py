"""Twisted spaces and skew-symmetric multilinear cochains.

A twisted space is a finite-dimensional rational vector space with a chosen
endomorphism (the twist).  An n-cochain from (W, alpha) to (V, beta) is an
alternating n-linear map stored densely on the wedge basis: one value vector
per strictly increasing index tuple.  The cochain spaces used everywhere else
are the twist-compatible ones,

    C^n(W, V) = { f : beta o f = f o alpha^(wedge n) },

parameterized by ``compatibility_basis``.  The module also provides shuffle
enumeration with signs and the first-slot insertion operator underlying all
graded brackets.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product
from typing import Callable, Iterator, Sequence

from .linalg import Mat, Vec, kernel_basis, rat


class TwistedSpace:
    """A dimension together with its twist endomorphism and cached powers."""

    def __init__(self, alpha: Mat):
        if alpha.nrows != alpha.ncols:
            raise ValueError("twist must be a square matrix")
        self.alpha = alpha
        self.dim = alpha.nrows
        self._powers: dict[int, Mat] = {0: Mat.identity(self.dim), 1: alpha}

    @staticmethod
    def untwisted(dim: int) -> "TwistedSpace":
        return TwistedSpace(Mat.identity(dim))

    def twist_power(self, k: int) -> Mat:
        if k < 0:
            raise ValueError("negative twist power")
        if k not in self._powers:
            self._powers[k] = self.alpha @ self.twist_power(k - 1)
        return self._powers[k]

    def basis_vec(self, i: int) -> Vec:
        return Vec.basis(self.dim, i)

    def __eq__(self, other) -> bool:
        return isinstance(other, TwistedSpace) and self.alpha == other.alpha

    def __hash__(self) -> int:
        return hash(self.alpha)

    def __repr__(self) -> str:
        return f"TwistedSpace(dim={self.dim})"


def shuffles(*block_sizes: int) -> Iterator[tuple[tuple[int, ...], int]]:
    """All (n1, ..., nk)-shuffles with their signatures.

    A shuffle is a permutation of {0, ..., N-1} that is increasing on each
    consecutive block of positions.  Yields (image, sign) where image[p] is
    the 0-based value of the permutation at position p, so a term indexed by
    a shuffle reads its arguments as [args[i] for i in image].
    """
    if any(n < 0 for n in block_sizes):
        raise ValueError("block sizes must be nonnegative")
    total = sum(block_sizes)
    blocks = [n for n in block_sizes if n > 0]

    def rec(remaining: tuple[int, ...], blocks: list[int]) -> Iterator[tuple[int, ...]]:
        if not blocks:
            yield ()
            return
        head, *rest = blocks
        for chosen in combinations(remaining, head):
            left = tuple(v for v in remaining if v not in chosen)
            for tail in rec(left, rest):
                yield chosen + tail

    for image in rec(tuple(range(total)), blocks):
        yield image, perm_sign(image)


def perm_sign(image: Sequence[int]) -> int:
    """Signature of a permutation given as its image sequence."""
    sign = 1
    for i in range(len(image)):
        for j in range(i + 1, len(image)):
            if image[i] > image[j]:
                sign = -sign
    return sign


def sort_with_sign(idxs: Sequence[int]) -> tuple[int, tuple[int, ...] | None]:
    """Sort indices, tracking the permutation sign; sign 0 on a repeat."""
    idx = list(idxs)
    sign = 1
    for i in range(1, len(idx)):
        j = i
        while j > 0 and idx[j - 1] > idx[j]:
            idx[j - 1], idx[j] = idx[j], idx[j - 1]
            sign = -sign
            j -= 1
    for a, b in zip(idx, idx[1:]):
        if a == b:
            return 0, None
    return sign, tuple(idx)


class SkewCochain:
    """Alternating multilinear map on wedge basis coefficients.

    coeffs maps strictly increasing 0-based index tuples to value vectors in
    the codomain; missing tuples are zero.  Instances are immutable by
    convention and compared by exact coefficient tables.
    """

    __hash__ = None

    def __init__(self, domain: TwistedSpace, codomain: TwistedSpace, arity: int,
                 coeffs: dict[tuple[int, ...], Vec]):
        if arity < 1:
            raise ValueError("cochain arity must be >= 1")
        self.domain = domain
        self.codomain = codomain
        self.arity = arity
        table: dict[tuple[int, ...], Vec] = {}
        for key, value in coeffs.items():
            key = tuple(key)
            if len(key) != arity or any(a >= b for a, b in zip(key, key[1:])):
                raise ValueError(f"coefficient key {key} is not a strictly increasing {arity}-tuple")
            if any(i < 0 or i >= domain.dim for i in key):
                raise ValueError(f"coefficient key {key} out of range for dim {domain.dim}")
            if value.dim != codomain.dim:
                raise ValueError("coefficient value has wrong dimension")
            if not value.is_zero():
                table[key] = value
        self.coeffs = table

    @staticmethod
    def zero(domain: TwistedSpace, codomain: TwistedSpace, arity: int) -> "SkewCochain":
        return SkewCochain(domain, codomain, arity, {})

    @staticmethod
    def from_function(domain: TwistedSpace, codomain: TwistedSpace, arity: int,
                      fn: Callable[[tuple[int, ...]], Vec]) -> "SkewCochain":
        """Build a cochain from its values on increasing basis tuples."""
        table = {}
        for key in combinations(range(domain.dim), arity):
            table[key] = fn(key)
        return SkewCochain(domain, codomain, arity, table)

    def value_on(self, key: tuple[int, ...]) -> Vec:
        """Value on a strictly increasing basis tuple."""
        return self.coeffs.get(tuple(key), Vec.zero(self.codomain.dim))

    def __eq__(self, other) -> bool:
        if not isinstance(other, SkewCochain):
            return NotImplemented
        return (self.arity == other.arity and self.domain == other.domain
                and self.codomain == other.codomain and self.coeffs == other.coeffs)

    def __add__(self, other: "SkewCochain") -> "SkewCochain":
        self._require_same_shape(other)
        keys = set(self.coeffs) | set(other.coeffs)
        return SkewCochain(self.domain, self.codomain, self.arity,
                           {k: self.value_on(k) + other.value_on(k) for k in keys})

    def __sub__(self, other: "SkewCochain") -> "SkewCochain":
        self._require_same_shape(other)
        keys = set(self.coeffs) | set(other.coeffs)
        return SkewCochain(self.domain, self.codomain, self.arity,
                           {k: self.value_on(k) - other.value_on(k) for k in keys})

    def __neg__(self) -> "SkewCochain":
        return SkewCochain(self.domain, self.codomain, self.arity,
                           {k: -v for k, v in self.coeffs.items()})

    def scale(self, c) -> "SkewCochain":
        c = rat(c)
        if c == 0:
            return SkewCochain.zero(self.domain, self.codomain, self.arity)
        return SkewCochain(self.domain, self.codomain, self.arity,
                           {k: v.scale(c) for k, v in self.coeffs.items()})

    def is_zero(self) -> bool:
        return not self.coeffs

    def _require_same_shape(self, other: "SkewCochain"):
        if (self.arity != other.arity or self.domain != other.domain
                or self.codomain != other.codomain):
            raise ValueError("cochain shape mismatch")

    def __repr__(self) -> str:
        return f"SkewCochain(arity={self.arity}, nonzero={len(self.coeffs)})"


def evaluate(f: SkewCochain, args: Sequence[Vec]) -> Vec:
    """Multilinear, alternating evaluation on arbitrary vectors.

    Expands each argument over its nonzero coordinates, so evaluation on
    near-basis vectors (basis vectors hit by twist powers) stays cheap.
    """
    if len(args) != f.arity:
        raise ValueError(f"expected {f.arity} arguments, got {len(args)}")
    dim = f.domain.dim
    for a in args:
        if a.dim != dim:
            raise ValueError("argument dimension mismatch")
    total = Vec.zero(f.codomain.dim)
    supports = [a.support() for a in args]
    for combo in product(*supports):
        idxs = [i for i, _ in combo]
        sign, key = sort_with_sign(idxs)
        if sign == 0:
            continue
        value = f.coeffs.get(key)
        if value is None:
            continue
        c = Fraction(sign)
        for _, coeff in combo:
            c *= coeff
        total = total + value.scale(c)
    return total


def is_compatible(f: SkewCochain) -> bool:
    """Whether beta o f = f o alpha^(wedge n) on every increasing basis tuple."""
    return compatibility_witness(f) is None


def compatibility_witness(f: SkewCochain) -> tuple[tuple[int, ...], Vec, Vec] | None:
    """First basis tuple where twist-compatibility fails, with both sides."""
    beta = f.codomain.alpha
    alpha = f.domain.alpha
    twisted_basis = [alpha @ Vec.basis(f.domain.dim, i) for i in range(f.domain.dim)]
    for key in combinations(range(f.domain.dim), f.arity):
        lhs = beta @ f.value_on(key)
        rhs = evaluate(f, [twisted_basis[i] for i in key])
        if lhs != rhs:
            return key, lhs, rhs
    return None


_COMPAT_CACHE: dict[tuple, list[SkewCochain]] = {}


def compatibility_basis(domain: TwistedSpace, codomain: TwistedSpace, arity: int) -> list[SkewCochain]:
    """Basis of the twist-compatible cochain space C^arity(domain, codomain).

    Computed as the kernel of the linear map f -> beta o f - f o alpha^(wedge n)
    on raw coefficient tables.  Deterministic ordering: lexicographic tuples,
    codomain coordinates within each tuple.
    """
    if arity < 1:
        raise ValueError("arity must be >= 1")
    cache_key = (domain.alpha, codomain.alpha, arity)
    if cache_key in _COMPAT_CACHE:
        return _COMPAT_CACHE[cache_key]
    keys = list(combinations(range(domain.dim), arity))
    ncoords = len(keys) * codomain.dim
    if ncoords == 0:
        _COMPAT_CACHE[cache_key] = []
        return []
    columns = []
    for key in keys:
        for c in range(codomain.dim):
            unit = SkewCochain(domain, codomain, arity, {key: Vec.basis(codomain.dim, c)})
            image = _compat_defect(unit)
            columns.append(flatten_cochain(image, keys))
    matrix = Mat.from_columns(columns)
    basis = [unflatten_cochain(domain, codomain, arity, keys, v) for v in kernel_basis(matrix)]
    _COMPAT_CACHE[cache_key] = basis
    return basis


def _compat_defect(f: SkewCochain) -> SkewCochain:
    beta = f.codomain.alpha
    alpha = f.domain.alpha
    twisted_basis = [alpha @ Vec.basis(f.domain.dim, i) for i in range(f.domain.dim)]

    def defect(key):
        return (beta @ f.value_on(key)) - evaluate(f, [twisted_basis[i] for i in key])

    return SkewCochain.from_function(f.domain, f.codomain, f.arity, defect)


def flatten_cochain(f: SkewCochain, keys: list[tuple[int, ...]] | None = None) -> Vec:
    """Raw coefficient table as a single vector (fixed tuple ordering)."""
    if keys is None:
        keys = list(combinations(range(f.domain.dim), f.arity))
    entries = []
    for key in keys:
        entries.extend(f.value_on(key).entries)
    return Vec(tuple(entries))


def unflatten_cochain(domain: TwistedSpace, codomain: TwistedSpace, arity: int,
                      keys: list[tuple[int, ...]], v: Vec) -> SkewCochain:
    table = {}
    d = codomain.dim
    for pos, key in enumerate(keys):
        table[key] = Vec(tuple(v[pos * d + c] for c in range(d)))
    return SkewCochain(domain, codomain, arity, table)


def fixed_vectors(space: TwistedSpace) -> list[Vec]:
    """Basis of the twist-fixed subspace {v : alpha v = v} (degree-0 cochains)."""
    return kernel_basis(space.alpha - Mat.identity(space.dim))


def contract(inner: SkewCochain, outer: SkewCochain) -> SkewCochain:
    """First-slot insertion i_P Q of inner = P into outer = Q.

    (i_P Q)(x_1, ..., x_{m+n-1}) sums over (m, n-1)-shuffles with sign:
    outer applied to P(first block) followed by the remaining arguments hit
    by the m-1 power of the shared domain twist.  Requires inner to be an
    endomorphism-type cochain on outer's domain.
    """
    w = inner.domain
    if inner.codomain != w or outer.domain != w:
        raise ValueError("contraction requires inner in C(W, W) and outer in C(W, V)")
    m, n = inner.arity, outer.arity
    twist = w.twist_power(m - 1)
    twisted_basis = [twist @ Vec.basis(w.dim, i) for i in range(w.dim)]
    shuffle_list = list(shuffles(m, n - 1))

    def value(key):
        total = Vec.zero(outer.codomain.dim)
        for image, sign in shuffle_list:
            first = tuple(key[p] for p in image[:m])
            head = inner.value_on(first)
            if head.is_zero():
                continue
            rest = [twisted_basis[key[p]] for p in image[m:]]
            term = evaluate(outer, [head] + rest)
            if not term.is_zero():
                total = total + term.scale(sign)
        return total

    return SkewCochain.from_function(w, outer.codomain, m + n - 1, value)


def contract_mixed(inner: SkewCochain, outer: SkewCochain) -> SkewCochain:
    """Insertion for mixed-codomain cochains; same operation as ``contract``."""
    return contract(inner, outer)


def operator_cochain(domain: TwistedSpace, codomain: TwistedSpace, m: Mat) -> SkewCochain:
    """A linear map as an arity-1 cochain (columns become coefficients)."""
    if m.nrows != codomain.dim or m.ncols != domain.dim:
        raise ValueError("operator shape does not match the spaces")
    return SkewCochain(domain, codomain, 1, {(j,): m.col(j) for j in range(domain.dim)})


def cochain_matrix(f: SkewCochain) -> Mat:
    """Matrix of an arity-1 cochain."""
    if f.arity != 1:
        raise ValueError("only arity-1 cochains correspond to matrices")
    return Mat.from_columns([f.value_on((j,)) for j in range(f.domain.dim)])
