"""
Enumerated finite groups and the algorithms that run on them.

A TableGroup indexes its elements 0..order-1 with the identity at index 0.
Small groups carry a dense multiplication table (numpy, int32); larger
enumerable groups multiply through a callback so that they never allocate an
order x order array.

Algorithms:
    - element orders, subgroup closure, normal closure
    - conjugacy classes (orbits under conjugation by generators)
    - derived series, solvability, centre and centralizers
    - normal 2-complements and quotients
    - brute-force automorphism groups (generator-image backtracking)
    - PermSubgroup: explicit permutation groups on element indices

Conventions:
    - Commutators are [x, y] = x^-1 y^-1 x y.
    - Conjugation is on the right: x^g = g^-1 x g.
    - Permutations act on element indices; compose(f, g) = f o g = f[g].

Version: 0.4.0
License: MIT
"""

import logging
from collections import deque
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass, field

import numpy as np

# mypy: disable-error-code="no-redef"
try:
    from .config import get_settings
    from .errors import InvalidParameterError, LimitExceededError, NotAGroupError, NotNormalError
except ImportError:
    from config import get_settings
    from errors import InvalidParameterError, LimitExceededError, NotAGroupError, NotNormalError

logger = logging.getLogger(__name__)

ElementSet = frozenset[int]


# =============================================================================
# TableGroup
# =============================================================================


class TableGroup:
    """
    A fully enumerated finite group with multiplication by index.

    Attributes:
        order: Number of elements
        generators: Canonical generating indices (never empty)
        labels: Optional printable names, one per element
        name: Display name (catalog atom or construction)

    Modes:
        Dense: ``table[x, y]`` is the index of x*y. Inverses are precomputed.
        Callback: ``mul_fn(x, y)`` and ``inv_fn(x)`` compute products on demand.
        ``is_dense`` tells which; ``table`` raises in callback mode.
    """

    def __init__(
        self,
        order: int,
        generators: Sequence[int],
        table: np.ndarray | None = None,
        *,
        mul_fn: Callable[[int, int], int] | None = None,
        inv_fn: Callable[[int], int] | None = None,
        labels: Sequence[str] | None = None,
        name: str = "group",
    ):
        if order < 1:
            raise NotAGroupError("a group has at least one element")
        if table is None and (mul_fn is None or inv_fn is None):
            raise NotAGroupError("either a dense table or mul_fn/inv_fn is required")
        self.order = int(order)
        self.generators = [int(g) for g in generators] or [0]
        self.labels = list(labels) if labels is not None else None
        self.name = name
        self._mul_fn = mul_fn
        self._inv_fn = inv_fn
        self._table: np.ndarray | None = None
        self._inv: np.ndarray | None = None
        self._orders: np.ndarray | None = None
        if table is not None:
            table = np.asarray(table, dtype=np.int32)
            if table.shape != (order, order):
                raise NotAGroupError(f"table shape {table.shape} does not match order {order}")
            if not np.array_equal(table[0], np.arange(order)) or not np.array_equal(
                table[:, 0], np.arange(order)
            ):
                raise NotAGroupError("index 0 is not a two-sided identity")
            is_unit = table == 0
            if not (is_unit.any(axis=1).all() and is_unit.any(axis=0).all()):
                raise NotAGroupError("some element has no inverse")
            self._table = table
            self._inv = np.argmax(is_unit, axis=1).astype(np.int32)

    def __repr__(self) -> str:
        mode = "dense" if self.is_dense else "callback"
        return f"TableGroup({self.name}, order={self.order}, {mode})"

    def __len__(self) -> int:
        return self.order

    # -------------------------------------------------------------------------
    # Basic arithmetic
    # -------------------------------------------------------------------------

    @property
    def is_dense(self) -> bool:
        return self._table is not None

    @property
    def table(self) -> np.ndarray:
        if self._table is None:
            raise LimitExceededError("dense multiplication table", self.order, self.order - 1)
        return self._table

    @property
    def inverses(self) -> np.ndarray:
        if self._inv is None:
            self._inv = np.array([self.inv(x) for x in range(self.order)], dtype=np.int64)
        return self._inv

    def identity(self) -> int:
        return 0

    def mul(self, x: int, y: int) -> int:
        if self._table is not None:
            return int(self._table[x, y])
        assert self._mul_fn is not None
        return self._mul_fn(x, y)

    def inv(self, x: int) -> int:
        if self._inv is not None:
            return int(self._inv[x])
        assert self._inv_fn is not None
        return self._inv_fn(x)

    def power(self, x: int, k: int) -> int:
        if k < 0:
            x, k = self.inv(x), -k
        result, base = 0, x
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def conj(self, x: int, g: int) -> int:
        """x^g = g^-1 x g."""
        return self.mul(self.mul(self.inv(g), x), g)

    def element_order(self, x: int) -> int:
        """Least n >= 1 with x^n = identity."""
        if self._orders is not None:
            return int(self._orders[x])
        n, y = 1, x
        while y != 0:
            y = self.mul(y, x)
            n += 1
        return n

    def element_orders(self) -> np.ndarray:
        """Orders of all elements (vectorised over the dense table)."""
        if self._orders is None:
            if self._table is not None:
                idx = np.arange(self.order)
                orders = np.zeros(self.order, dtype=np.int64)
                cur = idx.copy()
                k = 1
                while True:
                    orders[(cur == 0) & (orders == 0)] = k
                    if orders.all():
                        break
                    cur = self._table[cur, idx]
                    k += 1
                self._orders = orders
            else:
                self._orders = np.array(
                    [self.element_order(x) for x in range(self.order)], dtype=np.int64
                )
        return self._orders

    # -------------------------------------------------------------------------
    # Element bookkeeping shared with SdGroup
    # -------------------------------------------------------------------------

    def rank(self, x: int) -> int:
        return x

    def unrank(self, i: int) -> int:
        return i

    def encode(self, x: int) -> int:
        return x

    def decode(self, obj: int | str) -> int:
        """Element from an index or a label."""
        if isinstance(obj, str):
            return self.index_of(obj)
        if isinstance(obj, bool) or not isinstance(obj, int | np.integer) or not 0 <= obj < self.order:
            raise InvalidParameterError(f"{obj!r} is not an element index of {self.name}")
        return int(obj)

    def elements(self) -> range:
        return range(self.order)

    def mul_many(self, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
        """Element-wise products of index arrays."""
        X, Y = np.broadcast_arrays(np.asarray(X, dtype=np.int64), np.asarray(Y, dtype=np.int64))
        if self._table is not None:
            return self._table[X, Y].astype(np.int64)
        flat = [self.mul(int(x), int(y)) for x, y in zip(X.ravel(), Y.ravel(), strict=True)]
        return np.array(flat, dtype=np.int64).reshape(X.shape)

    def inv_many(self, X: np.ndarray) -> np.ndarray:
        return np.asarray(self.inverses, dtype=np.int64)[np.asarray(X, dtype=np.int64)]

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels is not None else str(x)

    def index_of(self, label: str) -> int:
        if self.labels is None or label not in self.labels:
            raise InvalidParameterError(f"{label!r} is not an element label of {self.name}")
        return self.labels.index(label)

    def right_column(self, g: int) -> np.ndarray:
        """Array of x*g for every x."""
        if self._table is not None:
            return self._table[:, g]
        return np.array([self.mul(x, g) for x in range(self.order)], dtype=np.int64)

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(self.mul(a, b) == self.mul(b, a) for a in gens for b in gens)

    def exponent(self) -> int:
        return int(np.lcm.reduce(self.element_orders()))

    def verify(self) -> None:
        """
        Exhaustively check associativity and generation.

        Intended for small orders (tests and catalog sanity); cost is order^3
        on the dense table.

        Raises:
            NotAGroupError: if an axiom fails
        """
        t = self.table
        left = t[t[:, :, None], np.arange(self.order)[None, None, :]]
        right = t[np.arange(self.order)[:, None, None], t[None, :, :]]
        if not np.array_equal(left, right):
            raise NotAGroupError(f"{self.name}: multiplication is not associative")
        if len(subgroup_closure(self, self.generators)) != self.order:
            raise NotAGroupError(f"{self.name}: generators do not generate the group")


# =============================================================================
# Subgroups
# =============================================================================


def subgroup_closure(G: TableGroup, gens: Iterable[int]) -> ElementSet:
    """
    Smallest subgroup containing ``gens``.

    Closes {identity} under right multiplication by the generators; in a finite
    group positive words already give every element of the subgroup.

    Raises:
        NotAGroupError: if the closure size does not divide |G| (corrupt table)
    """
    gens = sorted({int(g) for g in gens if g != 0})
    seen = np.zeros(G.order, dtype=bool)
    seen[0] = True
    frontier = np.array([0], dtype=np.int64)
    while frontier.size and gens:
        if G.is_dense:
            new = G.table[np.ix_(frontier, gens)].ravel()
        else:
            new = np.array([G.mul(int(x), s) for x in frontier for s in gens], dtype=np.int64)
        new = np.unique(new[~seen[new]])
        seen[new] = True
        frontier = new
    members = frozenset(np.flatnonzero(seen).tolist())
    if G.order % len(members):
        raise NotAGroupError(f"closure of size {len(members)} does not divide {G.order}")
    return members


def generating_set(G: TableGroup, H: Iterable[int]) -> list[int]:
    """
    Greedy generating set of the subgroup H, preferring high element orders.

    The result is irredundant in the order elements were added.
    """
    members = sorted(set(H))
    orders = G.element_orders() if G.is_dense else None
    if orders is not None:
        members.sort(key=lambda x: (-int(orders[x]), x))
    gens: list[int] = []
    span: ElementSet = frozenset({0})
    for x in members:
        if len(span) == len(members):
            break
        if x not in span:
            gens.append(x)
            span = subgroup_closure(G, gens)
    return gens or [0]


def minimal_generating_set(G: TableGroup) -> list[int]:
    return generating_set(G, range(G.order))


def normal_closure(G: TableGroup, S: Iterable[int], within: Sequence[int] | None = None) -> ElementSet:
    """Smallest subgroup containing S that is normalised by ``within`` (default: G's generators)."""
    conj_by = list(within) if within is not None else G.generators
    gens = set(S)
    while True:
        H = subgroup_closure(G, gens)
        extra = {G.conj(h, g) for h in gens for g in conj_by} - H
        if not extra:
            return H
        gens |= extra


def is_normal(G: TableGroup, N: Iterable[int]) -> bool:
    """Conjugating N's generators by G's generators stays inside N (sufficient by closure)."""
    N = frozenset(N)
    return all(G.conj(n, g) in N for n in generating_set(G, N) for g in G.generators)


def centralizer(G: TableGroup, x: int) -> ElementSet:
    if G.is_dense:
        return frozenset(np.flatnonzero(G.table[x, :] == G.table[:, x]).tolist())
    return frozenset(y for y in range(G.order) if G.mul(x, y) == G.mul(y, x))


def center(G: TableGroup) -> ElementSet:
    members = set(range(G.order))
    for g in G.generators:
        members &= centralizer(G, g)
    return frozenset(members)


# =============================================================================
# Conjugacy
# =============================================================================


@dataclass(frozen=True)
class ConjPartition:
    """
    Conjugacy classes of a group.

    Attributes:
        class_of: class id per element index
        classes: element arrays, ordered by their smallest element (class 0 = {identity})
    """

    class_of: np.ndarray
    classes: list[np.ndarray] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.classes)

    def sizes(self) -> list[int]:
        return [len(c) for c in self.classes]


def orbit_labels(n: int, images: Callable[[int], Iterable[int]], points: Iterable[int] | None = None) -> dict[int, int]:
    """
    Label each point by the smallest point of its orbit.

    ``images(x)`` yields the images of x under every generator. Points are
    scanned in increasing order, so labels do not depend on generator order.
    """
    label: dict[int, int] = {}
    for start in sorted(points) if points is not None else range(n):
        if start in label:
            continue
        label[start] = start
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in images(x):
                if y not in label:
                    label[y] = start
                    queue.append(y)
    return label


def conjugacy_classes(G: TableGroup) -> ConjPartition:
    """Orbit partition of G under conjugation by its generators."""
    if G.is_dense:
        t, inv = G.table, G.inverses
        perms = [t[t[inv[g], :], g] for g in G.generators]

        def images(x: int) -> list[int]:
            return [int(p[x]) for p in perms]
    else:

        def images(x: int) -> list[int]:
            return [G.conj(x, g) for g in G.generators]

    label = orbit_labels(G.order, images)
    class_of = np.array([label[x] for x in range(G.order)], dtype=np.int64)
    reps, class_ids = np.unique(class_of, return_inverse=True)
    classes = [np.flatnonzero(class_ids == k) for k in range(len(reps))]
    logger.debug("%s: %d conjugacy classes", G.name, len(classes))
    return ConjPartition(class_of=class_ids.astype(np.int64), classes=classes)


# =============================================================================
# Derived series and solvability
# =============================================================================


def derived_subgroup(G: TableGroup, H: Iterable[int] | None = None, *, pairwise_limit: int | None = None) -> ElementSet:
    """
    Commutator subgroup [H, H] of a subgroup H (default G).

    All pairs are used when |H| <= pairwise_limit and the table is dense;
    otherwise commutators of H's generators plus normal closure within H.
    """
    limit = pairwise_limit if pairwise_limit is not None else get_settings().derived_pairwise_limit
    members = np.array(sorted(H), dtype=np.int64) if H is not None else np.arange(G.order)
    if G.is_dense and len(members) <= limit:
        t, inv = G.table, G.inverses
        xi = inv[members]
        a = t[xi[:, None], xi[None, :]]
        b = t[a, members[:, None]]
        comms = np.unique(t[b, members[None, :]])
        return subgroup_closure(G, comms.tolist())
    gens = generating_set(G, members.tolist())
    comms = {G.mul(G.mul(G.inv(x), G.inv(y)), G.mul(x, y)) for x in gens for y in gens}
    return normal_closure(G, comms, within=gens)


def derived_series(G: TableGroup) -> list[ElementSet]:
    """G, G', G'', ... ending at the first term equal to its own derived subgroup."""
    series = [frozenset(range(G.order))]
    while len(series[-1]) > 1:
        nxt = derived_subgroup(G, series[-1])
        if len(nxt) == len(series[-1]):
            break
        series.append(nxt)
    return series


def is_solvable(G: TableGroup) -> bool:
    return len(derived_series(G)[-1]) == 1


# =============================================================================
# Normal 2-complements and quotients
# =============================================================================


def normal_2_complement(G: TableGroup) -> ElementSet | None:
    """
    The normal 2-complement K, if it exists.

    K is generated by all odd-order elements; G has a normal 2-complement iff
    that subgroup has odd order, and then [G:K] is a power of 2.
    """
    orders = G.element_orders()
    K = subgroup_closure(G, np.flatnonzero(orders % 2 == 1).tolist())
    if len(K) % 2 == 0:
        return None
    index = G.order // len(K)
    assert index & (index - 1) == 0, f"index {index} of odd-order closure is not a power of 2"
    return K


def has_normal_2_complement(G: TableGroup) -> bool:
    return normal_2_complement(G) is not None


def quotient(G: TableGroup, N: Iterable[int]) -> tuple[TableGroup, np.ndarray]:
    """
    G/N as a TableGroup on cosets, with the natural projection.

    Coset ids follow the smallest element of each coset, so the identity coset
    is 0.

    Raises:
        NotAGroupError: N is not closed
        NotNormalError: N is not normal
    """
    N = frozenset(N) | {0}
    if subgroup_closure(G, N) != N:
        raise NotAGroupError("N is not a subgroup")
    if not is_normal(G, N):
        raise NotNormalError("N is not normal in G")
    members = sorted(N)
    projection = np.full(G.order, -1, dtype=np.int64)
    reps: list[int] = []
    for x in range(G.order):
        if projection[x] >= 0:
            continue
        projection[[G.mul(x, n) for n in members]] = len(reps)
        reps.append(x)
    q = len(reps)
    if G.is_dense and q <= get_settings().dense_table_limit:
        reps_arr = np.array(reps)
        table = projection[G.table[reps_arr[:, None], reps_arr[None, :]]]
        Q = TableGroup(
            q,
            sorted({int(projection[g]) for g in G.generators if projection[g]}),
            table,
            name=f"{G.name}/N",
        )
    else:
        Q = TableGroup(
            q,
            sorted({int(projection[g]) for g in G.generators if projection[g]}),
            mul_fn=lambda i, j: int(projection[G.mul(reps[i], reps[j])]),
            inv_fn=lambda i: int(projection[G.inv(reps[i])]),
            name=f"{G.name}/N",
        )
    return Q, projection


def direct_product(G: TableGroup, H: TableGroup, *, dense_limit: int | None = None) -> TableGroup:
    """G x H with (g, h) stored at index g*|H| + h."""
    limit = dense_limit if dense_limit is not None else get_settings().dense_table_limit
    n, m = G.order, H.order
    gens = [g * m for g in G.generators if g] + [h for h in H.generators if h]
    labels = None
    if G.labels is not None or H.labels is not None:
        labels = [f"({G.label(a)}, {H.label(b)})" for a in range(n) for b in range(m)]
    name = f"{G.name} x {H.name}"
    if n * m <= limit and G.is_dense and H.is_dense:
        idx = np.arange(n * m)
        a, b = idx // m, idx % m
        table = G.table[a[:, None], a[None, :]].astype(np.int64) * m + H.table[b[:, None], b[None, :]]
        return TableGroup(n * m, gens, table, labels=labels, name=name)
    return TableGroup(
        n * m,
        gens,
        mul_fn=lambda x, y: G.mul(x // m, y // m) * m + H.mul(x % m, y % m),
        inv_fn=lambda x: G.inv(x // m) * m + H.inv(x % m),
        labels=labels,
        name=name,
    )


# =============================================================================
# Permutation groups on element indices
# =============================================================================


class PermSubgroup:
    """
    An explicit group of permutations of 0..degree-1.

    Elements are stored as rows of an int array, sorted lexicographically, so
    the identity permutation is always row 0.
    """

    def __init__(self, degree: int, elements: np.ndarray, generators: np.ndarray):
        elements = np.asarray(elements, dtype=np.int64).reshape(-1, degree)
        order = np.lexsort(elements.T[::-1])
        self.degree = degree
        self.elements = elements[order]
        self.generators = np.asarray(generators, dtype=np.int64).reshape(-1, degree)
        self._index = {row.tobytes(): i for i, row in enumerate(self.elements)}
        if not np.array_equal(self.elements[0], np.arange(degree)):
            raise NotAGroupError("permutation set does not contain the identity")

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, perm: object) -> bool:
        return np.asarray(perm, dtype=np.int64).tobytes() in self._index

    def index(self, perm: np.ndarray) -> int:
        return self._index[np.asarray(perm, dtype=np.int64).tobytes()]

    def keys(self) -> Iterable[bytes]:
        return self._index.keys()

    def __repr__(self) -> str:
        return f"PermSubgroup(degree={self.degree}, order={len(self)})"


def compose(f: np.ndarray, g: np.ndarray) -> np.ndarray:
    """f o g: apply g first."""
    return f[g]


def invert_perm(f: np.ndarray) -> np.ndarray:
    out = np.empty_like(f)
    out[f] = np.arange(len(f))
    return out


def perm_closure(degree: int, gens: Sequence[np.ndarray], *, limit: int | None = None) -> PermSubgroup:
    """
    Close a set of permutations under composition.

    Raises:
        LimitExceededError: more than ``limit`` permutations were produced
    """
    limit = limit if limit is not None else get_settings().perm_closure_limit
    ident = np.arange(degree, dtype=np.int64)
    gens = [np.asarray(g, dtype=np.int64) for g in gens]
    seen = {ident.tobytes(): ident}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = g[x]
            key = y.tobytes()
            if key not in seen:
                seen[key] = y
                if len(seen) > limit:
                    raise LimitExceededError("permutation closure", len(seen), limit)
                queue.append(y)
    gen_arr = np.array(gens) if gens else ident[None, :]
    return PermSubgroup(degree, np.array(list(seen.values())), gen_arr)


def inner_automorphism(G: TableGroup, g: int) -> np.ndarray:
    """Permutation x -> g^-1 x g."""
    if G.is_dense:
        return G.table[G.table[G.inverses[g], :], g].astype(np.int64)
    return np.array([G.conj(x, g) for x in range(G.order)], dtype=np.int64)


def inner_automorphisms(G: TableGroup, *, limit: int | None = None) -> PermSubgroup:
    return perm_closure(G.order, [inner_automorphism(G, g) for g in G.generators], limit=limit)


def is_automorphism(G: TableGroup, perm: np.ndarray) -> bool:
    """Bijective and f(xs) = f(x)f(s) for every x and generator s."""
    perm = np.asarray(perm, dtype=np.int64)
    if perm.shape != (G.order,) or len(np.unique(perm)) != G.order:
        return False
    t = G.table
    for s in G.generators:
        if not np.array_equal(perm[t[:, s]], t[perm, perm[s]]):
            return False
    return True


# =============================================================================
# Automorphisms by generator images
# =============================================================================


def _word_tree(G: TableGroup, gens: Sequence[int]) -> list[tuple[int, int, int]]:
    """BFS spanning tree of <gens>: (element, parent, generator position), root excluded."""
    tree: list[tuple[int, int, int]] = []
    seen = {0}
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for j, s in enumerate(gens):
            y = G.mul(x, s)
            if y not in seen:
                seen.add(y)
                tree.append((y, x, j))
                queue.append(y)
    return tree


def _extend_on_tree(
    G: TableGroup, tree: list[tuple[int, int, int]], gens: Sequence[int], images: Sequence[int]
) -> np.ndarray | None:
    """Extend gens -> images along the tree; None unless injective and multiplicative there."""
    f = np.full(G.order, -1, dtype=np.int64)
    f[0] = 0
    for y, parent, j in tree:
        f[y] = G.mul(int(f[parent]), images[j])
    domain = np.array([0] + [y for y, _, _ in tree], dtype=np.int64)
    values = f[domain]
    if len(np.unique(values)) != len(domain):
        return None
    t = G.table
    for s, img in zip(gens, images, strict=True):
        if not np.array_equal(f[t[domain, s]], t[values, img]):
            return None
    return f


def extend_generator_images(G: TableGroup, images: Sequence[int], gens: Sequence[int] | None = None) -> np.ndarray | None:
    """
    Extend an assignment of generator images to an automorphism of G.

    Args:
        G: dense group
        images: image of each generator (same order as ``gens``)
        gens: generators (default G.generators); must generate G

    Returns:
        The automorphism as a permutation of indices, or None when the
        assignment does not define a bijective homomorphism.
    """
    gens = list(gens) if gens is not None else G.generators
    tree = _word_tree(G, gens)
    if len(tree) + 1 != G.order:
        raise NotAGroupError("given generators do not generate the group")
    f = _extend_on_tree(G, tree, gens, list(images))
    if f is None or (f < 0).any():
        return None
    return f


def brute_force_aut(G: TableGroup, *, limit: int | None = None) -> PermSubgroup:
    """
    The full automorphism group of G as permutations of element indices.

    Uses a greedy generating set (high element orders first) and backtracks
    over candidate images with matching element orders, checking injectivity
    and multiplicativity on each intermediate subgroup <g1..gk>.

    Raises:
        LimitExceededError: |G| above the brute-force limit
    """
    limit = limit if limit is not None else get_settings().brute_aut_limit
    if G.order > limit:
        raise LimitExceededError("brute-force Aut", G.order, limit)
    gens = minimal_generating_set(G)
    if gens == [0]:
        ident = np.arange(G.order)[None, :]
        return PermSubgroup(G.order, ident, ident)
    orders = G.element_orders()
    trees = [_word_tree(G, gens[: k + 1]) for k in range(len(gens))]
    candidates = [np.flatnonzero(orders == orders[g]).tolist() for g in gens]
    found: list[np.ndarray] = []

    def search(k: int, images: list[int], covered: set[int]) -> None:
        # g_k lies outside <g_0..g_{k-1}>, so its image must avoid that image set
        for y in candidates[k]:
            if y in covered:
                continue
            trial = images + [y]
            f = _extend_on_tree(G, trees[k], gens[: k + 1], trial)
            if f is None:
                continue
            if k + 1 == len(gens):
                found.append(f)
            else:
                search(k + 1, trial, set(f[f >= 0].tolist()))

    search(0, [], {0})
    logger.debug("%s: |Aut| = %d via %d generators", G.name, len(found), len(gens))
    elements = np.array(found)
    return PermSubgroup(G.order, elements, perm_generating_set(elements))


def perm_generating_set(perms: np.ndarray) -> np.ndarray:
    """Greedy generating set of an explicit permutation group given as rows."""
    perms = np.asarray(perms, dtype=np.int64)
    degree = perms.shape[1]
    gens: list[np.ndarray] = []
    span: set[bytes] = {np.arange(degree, dtype=np.int64).tobytes()}
    for row in perms:
        if len(span) == len(perms):
            break
        if row.tobytes() in span:
            continue
        gens.append(row)
        span = set(perm_closure(degree, gens).keys())
    if not gens:
        gens = [np.arange(degree, dtype=np.int64)]
    return np.array(gens)
