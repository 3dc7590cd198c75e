"""
Automorphisms of G_p(A) as words over primitive maps.

An AutMap is a word of PrimitiveSpec letters plus a compiled evaluator; the
letters are applied left to right. Words are what reports carry as
certificates: ``from_word`` rebuilds the evaluator from the serialised
letters alone, so a certificate can be re-checked independently.

Primitives on G = G_p(A) (elements (a, v), blocks x_1..x_r of v):
    psi      x_i -> x_{i+1 mod r}                      (A fixed)
    phi      x_1 -> x_1 - x_r                          (A fixed)
    psi_i    (a, v) -> (a, v + v^i_a)
    lift(F)  (a, v^i_h) -> (F(a), v^i_{F(h)})
    inner(x) y -> x^-1 y x
    linear   (a, v) -> (a, L v) for an A-equivariant L
    perm     explicit permutation of element indices (ranks)

Version: 0.4.0
License: MIT
"""

import logging
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from typing import Any

import numpy as np

# mypy: disable-error-code="no-redef"
try:
    from .errors import (
        EquivarianceError,
        InfeasibleSystemError,
        InvalidParameterError,
        LimitExceededError,
        ParentMismatchError,
        PreconditionError,
    )
    from .gfp import GfpVector, act_batch, block_matrix, row_reduce, solve_linear
    from .groups import TableGroup, extend_generator_images, invert_perm, is_automorphism
    from .models import Lemma5Result, PrimitiveSpec
    from .semidirect import SdElement, SdGroup, sd_order
except ImportError:
    from errors import (
        EquivarianceError,
        InfeasibleSystemError,
        InvalidParameterError,
        LimitExceededError,
        ParentMismatchError,
        PreconditionError,
    )
    from gfp import GfpVector, act_batch, block_matrix, row_reduce, solve_linear
    from groups import TableGroup, extend_generator_images, invert_perm, is_automorphism
    from models import Lemma5Result, PrimitiveSpec
    from semidirect import SdElement, SdGroup, sd_order

logger = logging.getLogger(__name__)

Step = Callable[[Any], Any]


# =============================================================================
# AutMap
# =============================================================================


@dataclass(frozen=True, eq=False)
class AutMap:
    """
    An automorphism given by a word over primitives.

    Attributes:
        parent: The group acted on (SdGroup or TableGroup)
        word: Letters, applied left to right
    """

    parent: Any
    word: tuple[PrimitiveSpec, ...]
    _steps: tuple[Step, ...] = field(repr=False)

    def __call__(self, x: Any) -> Any:
        for step in self._steps:
            x = step(x)
        return x

    def descriptors(self) -> list[PrimitiveSpec]:
        return list(self.word)

    def __len__(self) -> int:
        return len(self.word)


def identity_aut(G: Any) -> AutMap:
    return AutMap(G, (), ())


def from_word(G: Any, word: Sequence[PrimitiveSpec | dict[str, Any]]) -> AutMap:
    """Compile a serialised word into an AutMap."""
    letters = tuple(w if isinstance(w, PrimitiveSpec) else PrimitiveSpec.model_validate(w) for w in word)
    return AutMap(G, letters, tuple(_compile(G, spec) for spec in letters))


def compose(f: AutMap, g: AutMap) -> AutMap:
    """f o g: x -> f(g(x))."""
    if f.parent is not g.parent:
        raise ParentMismatchError("automorphisms of different groups composed")
    return AutMap(f.parent, g.word + f.word, g._steps + f._steps)


def invert(f: AutMap) -> AutMap:
    letters = [spec.model_copy(update={"power": -spec.power}) for spec in reversed(f.word)]
    return from_word(f.parent, letters)


def power(f: AutMap, n: int) -> AutMap:
    base = f if n >= 0 else invert(f)
    result = identity_aut(f.parent)
    for _ in range(abs(n)):
        result = compose(base, result)
    return result


def aut_equal(f: AutMap, g: AutMap) -> bool:
    """Equality of multiplicative maps, decided on the parent's generators."""
    if f.parent is not g.parent:
        raise ParentMismatchError("automorphisms of different groups compared")
    return all(f(x) == g(x) for x in f.parent.generators)


def check_multiplicative(
    f: AutMap, *, exhaustive_limit: int = 256, samples: int = 200, seed: int = 0
) -> bool:
    """
    f(xy) = f(x) f(y).

    All pairs when the parent has at most ``exhaustive_limit`` elements;
    otherwise all generator pairs plus random products of generators.
    """
    G = f.parent
    try:
        n = G.order
    except LimitExceededError:
        n = None
    if n is not None and n <= exhaustive_limit:
        elems = [G.unrank(i) for i in range(n)]
        images = [f(x) for x in elems]
        for i, x in enumerate(elems):
            for j, y in enumerate(elems):
                if f(G.mul(x, y)) != G.mul(images[i], images[j]):
                    return False
        return True
    rng = np.random.default_rng(seed)
    gens = list(G.generators)
    pool = list(gens)
    for _ in range(samples):
        x = G.identity()
        for k in rng.integers(0, len(gens), size=4):
            x = G.mul(x, gens[int(k)])
        pool.append(x)
    for x in gens:
        for y in pool:
            if f(G.mul(x, y)) != G.mul(f(x), f(y)) or f(G.mul(y, x)) != G.mul(f(y), f(x)):
                return False
    return True


# =============================================================================
# Primitive compilation
# =============================================================================


def _require_sd(G: Any, kind: str) -> SdGroup:
    if not isinstance(G, SdGroup):
        raise InvalidParameterError(f"primitive {kind!r} needs a G_p(A) parent")
    return G


def _block_op(G: SdGroup, fn: Callable[[np.ndarray], np.ndarray]) -> Step:
    """Lift a map on (r, block_dim) coordinate arrays to elements (A fixed)."""
    B = G.B

    def step(x: SdElement) -> SdElement:
        if x.v.is_sparse:
            blocks: dict[int, dict[int, int]] = {}
            for j, c in x.v.items():
                i, k = divmod(j, B.block_dim)
                blocks.setdefault(i, {})[k] = c
            keys = sorted({k for blk in blocks.values() for k in blk})
            dense = np.array([[blocks.get(i, {}).get(k, 0) for k in keys] for i in range(B.r)], dtype=np.int64)
            out = fn(dense) % B.p
            items = [(i * B.block_dim + k, int(out[i, n])) for i in range(B.r) for n, k in enumerate(keys)]
            return SdElement(x.a, B.vector(items))
        out = fn(x.v.dense.reshape(B.r, B.block_dim)) % B.p
        return SdElement(x.a, GfpVector(B.p, B.dim, dense=out.ravel()))

    return step


def _compile(G: Any, spec: PrimitiveSpec) -> Step:
    e = spec.power
    if spec.kind == "psi":
        S = _require_sd(G, "psi")
        return _block_op(S, lambda X: np.roll(X, e, axis=0))
    if spec.kind == "phi":
        S = _require_sd(G, "phi")

        def phi(X: np.ndarray) -> np.ndarray:
            Y = X.copy()
            Y[0] = Y[0] - e * Y[-1]
            return Y

        return _block_op(S, phi)
    if spec.kind == "psi_i":
        S = _require_sd(G, "psi_i")
        i = spec.index
        if i is None or not 1 <= i <= S.r:
            raise InvalidParameterError(f"psi_i index {i} outside 1..{S.r}")

        def psi_i(x: SdElement) -> SdElement:
            return SdElement(x.a, x.v + S.B.basis(i, x.a).scale(e))

        return psi_i
    if spec.kind == "inner":
        y = G.decode(spec.element)
        yp = G.power(y, e)
        return lambda x: G.conj(x, yp)
    if spec.kind == "lift":
        S = _require_sd(G, "lift")
        F = _lift_perm(S, spec.images or [])
        Fe = _perm_power(F, e)
        return _lift_step(S, Fe)
    if spec.kind == "linear":
        S = _require_sd(G, "linear")
        L = _matrix_power(S.p, np.asarray(spec.matrix, dtype=np.int64), e)

        def linear(x: SdElement) -> SdElement:
            return SdElement(x.a, GfpVector(S.p, S.B.dim, dense=L @ x.v.to_array()))

        return linear
    if spec.kind == "perm":
        P = _perm_power(np.asarray(spec.images, dtype=np.int64), e)
        if isinstance(G, SdGroup):
            if len(P) != G.require_enumerable():
                raise InvalidParameterError(f"perm has {len(P)} points, {G.name} has {G.order} elements")
            return lambda x: G.unrank(int(P[G.rank(x)]))
        if not isinstance(G, TableGroup) or len(P) != G.order:
            raise InvalidParameterError(f"perm does not act on the elements of {G.name}")
        return lambda x: int(P[x])
    raise InvalidParameterError(f"unknown primitive {spec.kind!r}")


def _perm_power(P: np.ndarray, e: int) -> np.ndarray:
    base = P if e >= 0 else invert_perm(P)
    out = np.arange(len(P), dtype=np.int64)
    for _ in range(abs(e)):
        out = base[out]
    return out


def _matrix_power(p: int, L: np.ndarray, e: int) -> np.ndarray:
    n = L.shape[0]
    if e < 0:
        R, pivots = row_reduce(p, np.hstack([L, np.eye(n, dtype=np.int64)]), ncols=n)
        if len(pivots) < n:
            raise InvalidParameterError("linear map is not invertible")
        L, e = R[:, n:], -e
    out = np.eye(n, dtype=np.int64)
    for _ in range(e):
        out = (L @ out) % p
    return out


def _lift_perm(G: SdGroup, images: Sequence[int]) -> np.ndarray:
    """Permutation of A determined by images of A's generators; must be an automorphism."""
    A = G.A
    if not isinstance(A, TableGroup) or not A.is_dense:
        raise PreconditionError("lifts are available for dense catalog base groups only")
    F = extend_generator_images(A, list(images))
    if F is None or not is_automorphism(A, F):
        raise InvalidParameterError(f"generator images {list(images)} do not define an automorphism of {A.name}")
    return F


def _lift_step(G: SdGroup, F: np.ndarray) -> Step:
    B = G.B
    # coordinate j = block * (n-1) + h - 1 maps to block * (n-1) + F(h) - 1
    coord_map = np.concatenate(
        [i * B.block_dim + F[1:] - 1 for i in range(B.r)]
    ).astype(np.int64)

    def lift(x: SdElement) -> SdElement:
        items = [(int(coord_map[j]), c) for j, c in x.v.items()]
        return SdElement(int(F[x.a]), B.vector(items))

    return lift


# =============================================================================
# Constructors
# =============================================================================


def primitive_aut(
    G: Any,
    kind: str,
    *,
    power: int = 1,
    index: int | None = None,
    F: Sequence[int] | np.ndarray | None = None,
    x: Any = None,
    matrix: np.ndarray | None = None,
) -> AutMap:
    """
    One primitive automorphism.

    Args:
        G: Parent group
        kind: psi | phi | psi_i | lift | inner | linear | perm
        power: Exponent
        index: Block for psi_i (1-based)
        F: For lift, the automorphism of A as a full permutation or as the
            images of A's generators; for perm, the full permutation
        x: Conjugating element for inner
        matrix: Matrix for linear (use extend_linear to get the check)

    Raises:
        InvalidParameterError: bad index, non-automorphism F, unknown kind
    """
    spec: dict[str, Any] = {"kind": kind, "power": power}
    if kind == "psi_i":
        spec["index"] = index
    elif kind == "lift":
        S = _require_sd(G, "lift")
        images = np.asarray(F, dtype=np.int64)
        if len(images) == S.A.order:
            images = images[S.A.generators]
        spec["images"] = [int(v) for v in images]
    elif kind == "perm":
        spec["images"] = [int(v) for v in np.asarray(F)]
    elif kind == "inner":
        if x is None:
            raise InvalidParameterError("inner needs an element")
        spec["element"] = G.encode(x)
    elif kind == "linear":
        spec["matrix"] = np.asarray(matrix, dtype=np.int64).tolist()
    return from_word(G, [spec])


def extend_linear(G: SdGroup, L: np.ndarray) -> AutMap:
    """
    The automorphism fixing A pointwise and acting on B by L.

    L acts on coordinate columns. It must be invertible and commute with the
    action of every generator of A on every basis vector.

    Raises:
        InvalidParameterError: L singular or of the wrong shape
        EquivarianceError: first (basis vector, generator) where L fails to commute
    """
    B = G.B
    L = np.mod(np.asarray(L, dtype=np.int64), B.p)
    if L.shape != (B.dim, B.dim):
        raise InvalidParameterError(f"matrix of shape {L.shape} for dimension {B.dim}")
    if len(row_reduce(B.p, L)[1]) < B.dim:
        raise InvalidParameterError("linear map is not invertible")
    E = np.eye(B.dim, dtype=np.int64)
    for g in G.A.generators:
        lhs = (act_batch(B, E, g) @ L.T) % B.p
        rhs = act_batch(B, (E @ L.T) % B.p, g)
        bad = np.flatnonzero((lhs != rhs).any(axis=1))
        if bad.size:
            raise EquivarianceError(int(bad[0]), int(G.A.rank(g)))
    return primitive_aut(G, "linear", matrix=L)


def matrix_on_B(f: AutMap) -> np.ndarray:
    """Matrix (columns = images of basis vectors) of an automorphism that preserves B."""
    G = f.parent
    B = G.B
    cols = []
    for j in range(B.dim):
        image = f(G.vec(B.vector([(j, 1)])))
        if G.A.rank(image.a):
            raise PreconditionError("automorphism does not preserve B")
        cols.append(image.v.to_array())
    return np.array(cols, dtype=np.int64).T


def default_generators(G: Any, aut_a: np.ndarray | None = None) -> list[AutMap]:
    """
    Witness-search generators.

    For G_p(A): psi, phi, psi_1..psi_r, inner by G's generators and lifts of
    Aut(A)'s generators (``aut_a``, rows of permutations). For a TableGroup,
    ``aut_a`` holds generators of Aut(G) itself and they become perm letters,
    followed by the inner automorphisms by G's generators.
    """
    gens: list[AutMap] = []
    if isinstance(G, SdGroup):
        gens.append(primitive_aut(G, "psi"))
        gens.append(primitive_aut(G, "phi"))
        gens.extend(primitive_aut(G, "psi_i", index=i) for i in range(1, G.r + 1))
        if aut_a is not None:
            ident = np.arange(G.A.order)
            gens.extend(primitive_aut(G, "lift", F=F) for F in aut_a if not np.array_equal(F, ident))
    elif aut_a is not None:
        ident = np.arange(G.order)
        gens.extend(primitive_aut(G, "perm", F=F) for F in aut_a if not np.array_equal(F, ident))
    gens.extend(primitive_aut(G, "inner", x=g) for g in G.generators)
    return gens


# =============================================================================
# Lifts and the quotient G/B
# =============================================================================


def sigma_lift_check(G: SdGroup, F: np.ndarray) -> bool:
    """
    lift(F) maps B onto B and induces F on G/B = A.

    Args:
        F: Automorphism of A as a full permutation
    """
    f = primitive_aut(G, "lift", F=F)
    B = G.B
    for j in range(B.dim):
        if G.A.rank(f(G.vec(B.vector([(j, 1)]))).a) != 0:
            return False
    return all(f(G.base(a)).a == int(F[a]) for a in range(G.A.order))


# =============================================================================
# Conjugating gt to g
# =============================================================================


def lemma5_conjugator(G: SdGroup, x: SdElement) -> tuple[GfpVector, list[int]]:
    """
    (u, exps) with psi_1^e_1 ... psi_r^e_r o inner((0, u)) mapping x = (g, t) to (g, 0).

    Per block i, solves (w^g - w) - a v^i_g = -t_i for w in B_i and a scalar
    a; then t_i + z_i = a v^i_g with z_i = w^g - w. With u = -(sum of the w)
    conjugation by (0, u) turns t into t + z, and psi_i^-a clears block i.

    Raises:
        PreconditionError: g is the identity or x does not have order p
        InfeasibleSystemError: a block system had no solution, or the result
            failed its own verification
    """
    G._check(x)
    g = x.a
    if G.A.rank(g) == 0:
        raise PreconditionError("x lies in B; g must not be the identity")
    if sd_order(G, x) != G.p:
        raise PreconditionError(f"x has order {sd_order(G, x)}, expected {G.p}")
    B = G.B
    d = B.block_dim
    M = (block_matrix(B, g) - np.eye(d, dtype=np.int64)) % B.p
    unit = np.zeros(d, dtype=np.int64)
    unit[G.A.rank(g) - 1] = 1
    system = np.hstack([M, (-unit)[:, None]])
    w_total = B.zero()
    coeffs: list[int] = []
    for i in range(1, B.r + 1):
        t_i = B.local(x.v, i)
        sol = solve_linear(B.p, system, (-t_i) % B.p)
        if sol.x is None:
            raise InfeasibleSystemError(f"block {i}: no z in [g, B_{i}] with t_{i} + z in <v_g>")
        w_total = w_total + B.embed(sol.x[:d], i)
        coeffs.append(int(sol.x[d]) % B.p)
    u = -w_total
    exps = [-a for a in coeffs]
    if conjugator_aut(G, u, exps)(x) != G.base(g):
        raise InfeasibleSystemError("conjugator failed verification")
    logger.debug("%s: conjugator for %r with exps %s", G.name, x, exps)
    return u, exps


def conjugator_aut(G: SdGroup, u: GfpVector, exps: Sequence[int]) -> AutMap:
    """inner((0, u)) followed by psi_i^exps_i."""
    word: list[dict[str, Any]] = []
    if not u.is_zero():
        word.append({"kind": "inner", "element": G.encode(G.vec(u))})
    word.extend({"kind": "psi_i", "index": i, "power": e} for i, e in enumerate(exps, start=1) if e)
    return from_word(G, word)


def lemma5_certificate(G: SdGroup, x: SdElement) -> Lemma5Result:
    """Conjugator for x together with its word, re-verified from the word alone."""
    u, exps = lemma5_conjugator(G, x)
    word = conjugator_aut(G, u, exps).descriptors()
    verified = from_word(G, word)(x) == G.base(x.a)
    return Lemma5Result(
        element=G.encode(x),
        u={j: c for j, c in u.items()},
        exps=exps,
        word=word,
        verified=verified,
    )
