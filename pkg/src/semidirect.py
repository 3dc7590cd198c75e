"""
The groups G_p(A) = B x| A and their iterates.

Elements are pairs (a, v) in the normal form a*v (base element left, vector
right) with

    (a1, v1) * (a2, v2) = (a1 a2, v1^a2 + v2)
    (a, v)^-1           = (a^-1, -v^(a^-1))
    (a, v)^n            = (a^n, sum_{k<n} v^(a^k))

so (a, v) has order ord(a) when the norm sum over <a> kills v and
p * ord(a) otherwise.

Element ranks give a bijection with 0..order-1:

    rank(a, v) = rank_A(a) + |A| * sum_j v_j p^j

which is the index used by enumerate() and by the vectorised *_many methods.
Groups whose order exceeds ``max_enum`` keep element arithmetic but refuse
every operation that needs ranks of all elements.

Version: 0.4.0
License: MIT
"""

import logging
import math
from collections.abc import Iterator
from dataclasses import dataclass, field
from typing import Any, NamedTuple

import numpy as np
from sympy import isprime, nextprime, primefactors
from sympy.ntheory import factorint

# mypy: disable-error-code="no-redef"
try:
    from .config import get_settings
    from .errors import InvalidParameterError, LimitExceededError, ParentMismatchError
    from .gfp import GfpVector, ModuleB, act, act_batch, norm_map, norm_matrix, solve_linear
    from .groups import TableGroup
    from .models import SakDescriptor, SakLevel
except ImportError:
    from config import get_settings
    from errors import InvalidParameterError, LimitExceededError, ParentMismatchError
    from gfp import GfpVector, ModuleB, act, act_batch, norm_map, norm_matrix, solve_linear
    from groups import TableGroup
    from models import SakDescriptor, SakLevel

logger = logging.getLogger(__name__)

EXACT_DIGITS = 10_000


# =============================================================================
# Orders
# =============================================================================


@dataclass(frozen=True)
class GroupOrder:
    """
    Exact group order with a factor-tower rendering for huge values.

    Attributes:
        primes: Prime divisors
        digits: Approximate number of decimal digits (inf when not computable)
        terms: Factor terms (base, exponent expression) used for the tower
        factors: Merged prime exponents when computable
    """

    primes: tuple[int, ...]
    digits: float
    terms: tuple[tuple[int, str], ...]
    factors: dict[int, int] | None = field(default=None, compare=False)

    @classmethod
    def of_int(cls, n: int) -> "GroupOrder":
        factors = {int(q): int(e) for q, e in factorint(n).items()}
        terms = tuple((q, str(e)) for q, e in sorted(factors.items()))
        return cls(tuple(sorted(factors)), math.log10(n) if n > 1 else 0.0, terms, factors)

    @classmethod
    def semidirect(cls, p: int, r: int, inner: "GroupOrder", *, symbolic_digits: int | None = None) -> "GroupOrder":
        """Order p^(r(|A|-1)) * |A| of G_p(A) given |A|."""
        limit = symbolic_digits if symbolic_digits is not None else get_settings().symbolic_digits
        n = inner.exact
        if n is not None and inner.factors is not None:
            dim = r * (n - 1)
            digits = dim * math.log10(p) + inner.digits
            factors = dict(inner.factors)
            factors[p] = factors.get(p, 0) + dim
        else:
            digits, factors = math.inf, None
        primes = tuple(sorted(set(inner.primes) | {p}))
        if factors is not None and digits <= limit:
            terms = tuple((q, str(e)) for q, e in sorted(factors.items()))
        else:
            terms = ((p, f"{r}*({inner.compact()}-1)"),) + inner.terms
        return cls(primes, digits, terms, factors)

    @property
    def exact(self) -> int | None:
        """The order as an int when it has at most EXACT_DIGITS digits."""
        if self.factors is None or self.digits > EXACT_DIGITS:
            return None
        return math.prod(q**e for q, e in self.factors.items())

    @staticmethod
    def _term(base: int, exponent: str) -> str:
        if exponent == "1":
            return str(base)
        if exponent.isdigit():
            return f"{base}^{exponent}"
        return f"{base}^({exponent})"

    def compact(self) -> str:
        return "*".join(self._term(b, e) for b, e in self.terms)

    def render(self, symbolic_digits: int | None = None) -> str:
        """Decimal when short enough, otherwise the factor tower."""
        limit = symbolic_digits if symbolic_digits is not None else get_settings().symbolic_digits
        exact = self.exact
        if exact is not None and self.digits <= limit:
            return str(exact)
        return " * ".join(self._term(b, e) for b, e in self.terms)


def group_order_of(G: Any) -> GroupOrder:
    if isinstance(G, SdGroup):
        return G.order_info
    return GroupOrder.of_int(G.order)


def minimal_wild_prime(nA: int, p: int) -> int:
    """
    Smallest prime dividing neither nA nor p - 1.

    Raises:
        InvalidParameterError: nA < 2 or p not prime
    """
    if nA < 2:
        raise InvalidParameterError("the base group must be nontrivial")
    if not isprime(p):
        raise InvalidParameterError(f"{p} is not prime")
    m = nA * (p - 1)
    q = 2
    while m % q == 0:
        q = int(nextprime(q))
    return q


# =============================================================================
# Elements
# =============================================================================


@dataclass(frozen=True)
class SdElement:
    """The element a*v of G_p(A); ``a`` is an element of A, ``v`` a vector of B."""

    a: Any
    v: GfpVector

    def __repr__(self) -> str:
        return f"({self.a!r}, {dict(self.v.items())})"


class ElementIndex(NamedTuple):
    """Bijection between an SdGroup and its enumerated TableGroup."""

    to_index: Any
    to_element: Any


# =============================================================================
# SdGroup
# =============================================================================


class SdGroup:
    """
    G_p(A) = B x| A with lazy element arithmetic.

    Attributes:
        A: Base group (TableGroup or SdGroup)
        p: Prime of B
        r: Minimal wild prime for (|A|, p)
        B: The module
        order_info: GroupOrder of G
        name: Expression-style name, e.g. "G(2, C3)"
    """

    def __init__(self, A: Any, p: int, *, name: str | None = None):
        nA = int(A.order)
        self.r = minimal_wild_prime(nA, p)
        self.A = A
        self.p = p
        self.nA = nA
        self.B = ModuleB(p, self.r, A)
        self.order_info = GroupOrder.semidirect(p, self.r, group_order_of(A))
        self._exact_order = self.order_info.exact
        self.name = name or f"G({p}, {A.name})"
        self._powers: np.ndarray | None = None
        self._table_group: TableGroup | None = None
        logger.debug("%s: r=%d dim=%d order=%s", self.name, self.r, self.B.dim, self.order_info.render())

    def __repr__(self) -> str:
        return f"SdGroup({self.name}, r={self.r}, dim={self.B.dim})"

    # -------------------------------------------------------------------------
    # Sizes
    # -------------------------------------------------------------------------

    @property
    def order(self) -> int:
        exact = self.order_info.exact
        if exact is None:
            raise LimitExceededError(f"exact order of {self.name}", self.order_info.render(), EXACT_DIGITS)
        return exact

    @property
    def enumerable(self) -> bool:
        exact = self.order_info.exact
        return exact is not None and exact <= get_settings().max_enum

    def require_enumerable(self, max_enum: int | None = None) -> int:
        limit = max_enum if max_enum is not None else get_settings().max_enum
        exact = self.order_info.exact
        if exact is None or exact > limit:
            raise LimitExceededError(f"enumeration of {self.name}", self.order_info.render(), limit)
        return exact

    # -------------------------------------------------------------------------
    # Elements
    # -------------------------------------------------------------------------

    def element(self, a: Any = None, v: GfpVector | None = None) -> SdElement:
        a = self.A.identity() if a is None else a
        return SdElement(a, self.B.zero() if v is None else v)

    def identity(self) -> SdElement:
        return self.element()

    def base(self, a: Any) -> SdElement:
        """(a, 0)."""
        return self.element(a)

    def vec(self, v: GfpVector) -> SdElement:
        """(0, v)."""
        return self.element(None, v)

    def _check(self, x: SdElement) -> None:
        if not isinstance(x, SdElement) or x.v.p != self.p or x.v.dim != self.B.dim:
            raise ParentMismatchError(f"{x!r} is not an element of {self.name}")

    @property
    def generators(self) -> list[SdElement]:
        """(s, 0) and (0, v^i_s) for the generators s of A."""
        gens = [self.base(s) for s in self.A.generators if self.A.rank(s)]
        for i in range(1, self.r + 1):
            gens.extend(self.vec(self.B.basis(i, s)) for s in self.A.generators if self.A.rank(s))
        return gens

    # -------------------------------------------------------------------------
    # Arithmetic
    # -------------------------------------------------------------------------

    def mul(self, x: SdElement, y: SdElement) -> SdElement:
        return sd_mul(self, x, y)

    def inv(self, x: SdElement) -> SdElement:
        self._check(x)
        ai = self.A.inv(x.a)
        return SdElement(ai, -act(self.B, x.v, ai))

    def power(self, x: SdElement, n: int) -> SdElement:
        if n < 0:
            x, n = self.inv(x), -n
        result, base = self.identity(), x
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def conj(self, x: SdElement, g: SdElement) -> SdElement:
        """x^g = g^-1 x g."""
        return self.mul(self.mul(self.inv(g), x), g)

    def element_order(self, x: SdElement) -> int:
        return sd_order(self, x)

    def is_identity(self, x: SdElement) -> bool:
        return self.A.rank(x.a) == 0 and x.v.is_zero()

    # -------------------------------------------------------------------------
    # Ranks
    # -------------------------------------------------------------------------

    def rank(self, x: SdElement) -> int:
        k = sum(c * self.p**j for j, c in x.v.items())
        return self.A.rank(x.a) + self.nA * k

    def unrank(self, i: int) -> SdElement:
        i = int(i)
        exact = self._exact_order
        if i < 0 or (exact is not None and i >= exact):
            raise InvalidParameterError(f"rank {i} is not an element of {self.name}")
        a = self.A.unrank(i % self.nA)
        k = i // self.nA
        items = []
        j = 0
        while k:
            k, c = divmod(k, self.p)
            if c:
                items.append((j, c))
            j += 1
        return SdElement(a, self.B.vector(items))

    def encode(self, x: SdElement) -> dict[str, Any]:
        return {"a": self.A.encode(x.a), "v": {str(j): c for j, c in x.v.items()}}

    def decode(self, obj: Any) -> SdElement:
        """Inverse of encode; an int is read as a rank."""
        if isinstance(obj, int) and not isinstance(obj, bool):
            return self.unrank(obj)
        if not isinstance(obj, dict) or "a" not in obj:
            raise InvalidParameterError(f"cannot decode {obj!r} as an element of {self.name}")
        a = self.A.decode(obj["a"])
        try:
            items = [(int(j), int(c)) for j, c in (obj.get("v") or {}).items()]
        except (AttributeError, TypeError, ValueError):
            raise InvalidParameterError(f"cannot decode {obj!r} as an element of {self.name}") from None
        v = self.B.vector(items)
        return SdElement(a, v)

    def label(self, x: SdElement) -> str:
        return repr(x)

    def elements(self) -> Iterator[SdElement]:
        n = self.require_enumerable()
        return (self.unrank(i) for i in range(n))

    # -------------------------------------------------------------------------
    # Vectorised rank arithmetic
    # -------------------------------------------------------------------------

    def _pow_array(self) -> np.ndarray:
        if self._powers is None:
            self._powers = self.p ** np.arange(self.B.dim, dtype=np.int64)
        return self._powers

    def digits(self, k: np.ndarray) -> np.ndarray:
        """Vector parts (m, dim) of the keys k = rank // |A|."""
        k = np.asarray(k, dtype=np.int64)
        return (k[:, None] // self._pow_array()[None, :]) % self.p

    def keys(self, V: np.ndarray) -> np.ndarray:
        return np.asarray(V, dtype=np.int64) @ self._pow_array()

    def split_ranks(self, X: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        X = np.asarray(X, dtype=np.int64)
        return X % self.nA, self.digits(X // self.nA)

    def join_ranks(self, a: np.ndarray, V: np.ndarray) -> np.ndarray:
        return np.asarray(a, dtype=np.int64) + self.nA * self.keys(V)

    def act_many(self, V: np.ndarray, a: np.ndarray) -> np.ndarray:
        """Row-wise V[k]^a[k], grouped by distinct a."""
        out = np.empty_like(V)
        for b in np.unique(a):
            mask = a == b
            out[mask] = act_batch(self.B, V[mask], self.A.unrank(int(b)))
        return out

    def mul_many(self, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
        """Element-wise products of rank arrays."""
        self.require_enumerable()
        X, Y = np.broadcast_arrays(np.asarray(X, dtype=np.int64), np.asarray(Y, dtype=np.int64))
        X, Y = X.ravel(), Y.ravel()
        ax, VX = self.split_ranks(X)
        ay, VY = self.split_ranks(Y)
        a = self.A.mul_many(ax, ay)
        V = (self.act_many(VX, ay) + VY) % self.p
        return self.join_ranks(a, V)

    def inv_many(self, X: np.ndarray) -> np.ndarray:
        self.require_enumerable()
        ax, VX = self.split_ranks(np.ravel(X))
        ai = self.A.inv_many(ax)
        return self.join_ranks(ai, (-self.act_many(VX, ai)) % self.p)

    def right_column(self, g: SdElement) -> np.ndarray:
        """rank(x * g) for every rank x."""
        n = self.require_enumerable()
        return self.mul_many(np.arange(n), np.full(n, self.rank(g)))

    def elements_of_order(self, q: int) -> np.ndarray:
        """
        Ranks of all elements of prime order q, sorted.

        (0, v) has order p for v != 0; (a, t) with a != 0 has order q iff
        ord(a) = q and the norm of t over <a> vanishes.
        """
        self.require_enumerable()
        found: list[np.ndarray] = []
        m = self.p**self.B.dim
        if q == self.p:
            found.append(self.nA * np.arange(1, m, dtype=np.int64))
        for ra in range(1, self.nA):
            a = self.A.unrank(ra)
            if self.A.element_order(a) != q:
                continue
            K = norm_kernel(self.B, a)
            if len(K):
                coeffs = np.array(np.unravel_index(np.arange(self.p ** len(K)), (self.p,) * len(K))).T
                V = (coeffs @ K) % self.p
            else:
                V = np.zeros((1, self.B.dim), dtype=np.int64)
            found.append(ra + self.nA * self.keys(V))
        return np.sort(np.concatenate(found)) if found else np.zeros(0, dtype=np.int64)


def norm_kernel(B: ModuleB, a: Any) -> np.ndarray:
    """Basis (rows, full coordinates) of the kernel of the norm map of <a> on B."""
    local = solve_linear(B.p, norm_matrix(B, a), np.zeros(B.block_dim, dtype=np.int64)).kernel
    rows = []
    for i in range(B.r):
        for vec in local:
            full = np.zeros(B.dim, dtype=np.int64)
            full[i * B.block_dim : (i + 1) * B.block_dim] = vec
            rows.append(full)
    return np.array(rows, dtype=np.int64).reshape(-1, B.dim)


# =============================================================================
# Operations
# =============================================================================


def build_Gp(A: Any, p: int) -> SdGroup:
    """
    G_p(A) with r = minimal_wild_prime(|A|, p).

    Raises:
        InvalidParameterError: trivial A or non-prime p
    """
    return SdGroup(A, p)


def sd_mul(G: SdGroup, x: SdElement, y: SdElement) -> SdElement:
    """(a1, v1)(a2, v2) = (a1 a2, v1^a2 + v2)."""
    G._check(x)
    G._check(y)
    return SdElement(G.A.mul(x.a, y.a), act(G.B, x.v, y.a) + y.v)


def sd_order(G: SdGroup, x: SdElement, *, method: str = "norm") -> int:
    """
    Order of x = (a, v).

    Args:
        method: "norm" uses ord(a) and the norm sum of v over <a>;
            "powers" multiplies until the identity appears.
    """
    G._check(x)
    if method == "powers":
        n, y = 1, x
        while not G.is_identity(y):
            y = G.mul(y, x)
            n += 1
        return n
    if method != "norm":
        raise InvalidParameterError(f"unknown order method {method!r}")
    m = G.A.element_order(x.a)
    return m if norm_map(G.B, x.v, x.a).is_zero() else m * G.p


def enumerate_group(G: SdGroup, *, max_enum: int | None = None) -> tuple[TableGroup, ElementIndex]:
    """
    Enumerate G as a TableGroup indexed by rank.

    Dense table up to ``dense_table_limit``; above it the TableGroup
    multiplies through the vectorised rank arithmetic.

    Raises:
        LimitExceededError: order above max_enum
    """
    n = G.require_enumerable(max_enum)
    index = ElementIndex(G.rank, G.unrank)
    if G._table_group is not None:
        return G._table_group, index
    gens = sorted({G.rank(g) for g in G.generators})
    if n <= get_settings().dense_table_limit:
        table = np.empty((n, n), dtype=np.int64)
        X = np.arange(n)
        for y in range(n):
            table[:, y] = G.mul_many(X, np.full(n, y))
        tg = TableGroup(n, gens, table, name=G.name)
    else:

        def mul_fn(x: int, y: int) -> int:
            return int(G.mul_many(np.array([x]), np.array([y]))[0])

        def inv_fn(x: int) -> int:
            return int(G.inv_many(np.array([x]))[0])

        tg = TableGroup(n, gens, mul_fn=mul_fn, inv_fn=inv_fn, name=G.name)
    G._table_group = tg
    logger.debug("enumerated %s: %d elements (%s)", G.name, n, "dense" if tg.is_dense else "callback")
    return tg, index


def build_saksonov(A: TableGroup, *, name: str | None = None) -> tuple[SakDescriptor, list[SdGroup]]:
    """
    G_{p1}(G_{p2}(...G_{pn}(A)...)) over the primes of |A|.

    Primes are sorted ascending; the largest is applied innermost, so the
    returned chain lists levels innermost first and the last entry is the
    whole group.

    Raises:
        InvalidParameterError: trivial A
    """
    if A.order < 2:
        raise InvalidParameterError("Sak needs a nontrivial base group")
    chain_primes = [int(q) for q in primefactors(A.order)]
    levels: list[SakLevel] = []
    chain: list[SdGroup] = []
    current: Any = A
    for q in reversed(chain_primes):
        current = SdGroup(current, q)
        chain.append(current)
        inner = group_order_of(current.A)
        dim = (
            str(current.B.dim)
            if inner.exact is not None
            else f"{current.r}*({inner.compact()}-1)"
        )
        levels.append(
            SakLevel(prime=q, r=current.r, dimension=dim, order=current.order_info.render())
        )
    top = chain[-1]
    descriptor = SakDescriptor(
        base=name or A.name,
        base_order=A.order,
        prime_chain=chain_primes,
        levels=levels,
        order=top.order_info.render(),
        enumerable=top.enumerable,
    )
    return descriptor, chain
