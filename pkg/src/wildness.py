"""
Wildness predicates as decision procedures.

<p>-wildness:
    G is <p>-wild when no cyclic subgroup <x> of order p has a characteristic
    conjugacy class. p_cyclic_classes() inventories the classes of such
    subgroups; verify_p_wild() decides wildness either by searching for
    automorphism words that move every class (witness mode) or by the action
    of the brute-forced automorphism group (exact mode).

Triplets:
    (G, D0, D1) with D0 normal in D1 <= Aut(G) and Inn(G) <= D0 is wild when no
    D0-orbit of involutions is invariant under D1. check_triplet() decides this
    by orbits and cross-checks it against |C_D1(a) D0| < |D1| per involution.

Harnesses:
    theorem1_harness() flags any wild triplet with D1/D0 having a normal
    2-complement over a nonsolvable G, and any such triplet whose quotients by
    characteristic subgroups stop being wild. corollary1_check() searches the
    involution witness over a normal subgroup.

Class ids:
    Elements are identified by rank (TableGroup index or SdGroup rank). A
    conjugacy class id is the smallest rank in the class; a subgroup class id
    is the smallest class id among x, x^2, .., x^(p-1).

Version: 0.4.0
License: MIT
"""

import logging
import time
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any

import numpy as np
from sympy import isprime, primefactors

# mypy: disable-error-code="no-redef"
try:
    from .autos import AutMap, default_generators, from_word
    from .config import get_settings
    from .errors import (
        GroupError,
        InvalidParameterError,
        LimitExceededError,
        NotNormalError,
        TripletError,
    )
    from .groups import (
        ElementSet,
        PermSubgroup,
        TableGroup,
        brute_force_aut,
        center,
        centralizer,
        compose as compose_perm,
        conjugacy_classes,
        derived_series,
        extend_generator_images,
        has_normal_2_complement,
        inner_automorphism,
        inner_automorphisms,
        invert_perm,
        is_automorphism,
        is_normal,
        is_solvable,
        orbit_labels,
        perm_closure,
        quotient,
    )
    from .models import (
        ClassWitness,
        CorollaryResult,
        HarnessReport,
        HarnessViolation,
        PrimitiveSpec,
        TripletReport,
        WildReport,
        WildStats,
        WildStatus,
        XiReport,
    )
    from .semidirect import SdGroup, enumerate_group, group_order_of
except ImportError:
    from autos import AutMap, default_generators, from_word
    from config import get_settings
    from errors import (
        GroupError,
        InvalidParameterError,
        LimitExceededError,
        NotNormalError,
        TripletError,
    )
    from groups import (
        ElementSet,
        PermSubgroup,
        TableGroup,
        brute_force_aut,
        center,
        centralizer,
        compose as compose_perm,
        conjugacy_classes,
        derived_series,
        extend_generator_images,
        has_normal_2_complement,
        inner_automorphism,
        inner_automorphisms,
        invert_perm,
        is_automorphism,
        is_normal,
        is_solvable,
        orbit_labels,
        perm_closure,
        quotient,
    )
    from models import (
        ClassWitness,
        CorollaryResult,
        HarnessReport,
        HarnessViolation,
        PrimitiveSpec,
        TripletReport,
        WildReport,
        WildStats,
        WildStatus,
        XiReport,
    )
    from semidirect import SdGroup, enumerate_group, group_order_of

logger = logging.getLogger(__name__)


# =============================================================================
# Enumerable groups
# =============================================================================


def _order_checked(G: Any, max_enum: int | None = None) -> int:
    limit = max_enum if max_enum is not None else get_settings().max_enum
    if isinstance(G, SdGroup):
        return G.require_enumerable(limit)
    if G.order > limit:
        raise LimitExceededError(f"enumeration of {G.name}", G.order, limit)
    return G.order


def _elements_of_order(G: Any, p: int) -> np.ndarray:
    if isinstance(G, SdGroup):
        return G.elements_of_order(p)
    return np.flatnonzero(G.element_orders() == p).astype(np.int64)


def _conj_images(G: Any, points: np.ndarray, y: Any) -> np.ndarray:
    """Ranks of y^-1 x y for every rank x in points."""
    ry = G.rank(y)
    yi = G.inv_many(np.array([ry]))[0]
    left = G.mul_many(np.full(len(points), yi), points)
    return G.mul_many(left, np.full(len(points), ry))


# =============================================================================
# Conjugacy classes of cyclic p-subgroups
# =============================================================================


@dataclass(frozen=True)
class PCyclicClasses:
    """
    Conjugacy classes of cyclic subgroups of order p.

    Attributes:
        p: The prime
        points: Sorted ranks of all elements of order p
        element_class: Class id (smallest rank in the class) per point
        subgroup_id: Subgroup class id per point
        reps: Sorted subgroup class ids; each is the rank of a generator of a
            subgroup in that class
    """

    p: int
    points: np.ndarray
    element_class: np.ndarray
    subgroup_id: np.ndarray
    reps: list[int]

    @property
    def element_classes(self) -> int:
        return len(np.unique(self.element_class))

    @property
    def subgroup_classes(self) -> int:
        return len(self.reps)

    def subgroup_of(self, rank: int) -> int:
        """Subgroup class id of an element of order p given by rank."""
        pos = int(np.searchsorted(self.points, rank))
        if pos >= len(self.points) or self.points[pos] != rank:
            raise InvalidParameterError(f"rank {rank} is not an element of order {self.p}")
        return int(self.subgroup_id[pos])


def p_cyclic_classes(G: Any, p: int, *, max_enum: int | None = None) -> PCyclicClasses:
    """
    Partition the order-p elements of G into conjugacy classes and assign
    subgroup class ids.

    Raises:
        InvalidParameterError: p not prime
        LimitExceededError: G too large to enumerate
    """
    if not isprime(p):
        raise InvalidParameterError(f"{p} is not prime")
    _order_checked(G, max_enum)
    points = _elements_of_order(G, p)
    m = len(points)
    if m == 0:
        empty = np.zeros(0, dtype=np.int64)
        return PCyclicClasses(p, empty, empty, empty, [])
    perms = [np.searchsorted(points, _conj_images(G, points, y)) for y in G.generators]

    def images(i: int) -> list[int]:
        return [int(perm[i]) for perm in perms]

    label = orbit_labels(m, images)
    pos_class = np.array([label[i] for i in range(m)], dtype=np.int64)
    element_class = points[pos_class]
    subgroup = element_class.copy()
    cur = points
    for _ in range(2, p):
        cur = G.mul_many(cur, points)
        subgroup = np.minimum(subgroup, element_class[np.searchsorted(points, cur)])
    reps = sorted(int(s) for s in np.unique(subgroup))
    logger.debug(
        "%s, p=%d: %d elements, %d classes, %d subgroup classes",
        G.name, p, m, len(np.unique(element_class)), len(reps),
    )
    return PCyclicClasses(p, points, element_class, subgroup, reps)


# =============================================================================
# <p>-wildness
# =============================================================================


def _witness_search(
    G: Any, classes: PCyclicClasses, rep: int, gens: list[AutMap], depth: int
) -> ClassWitness | None:
    """Breadth-first search over words of length <= depth for one class."""
    start = G.unrank(rep)
    seen = {rep}
    queue: deque[tuple[Any, tuple[int, ...]]] = deque([(start, ())])
    while queue:
        x, word = queue.popleft()
        if len(word) == depth:
            continue
        for k, f in enumerate(gens):
            y = f(x)
            ry = G.rank(y)
            if ry in seen:
                continue
            seen.add(ry)
            sid = classes.subgroup_of(ry)
            path = word + (k,)
            if sid != rep:
                letters = [letter for j in path for letter in gens[j].word]
                return ClassWitness(
                    class_id=rep, representative=G.encode(start), word=letters, image_class=sid
                )
            queue.append((y, path))
    return None


def _search_auts(G: Any) -> np.ndarray | None:
    """Aut generators feeding the witness search: Aut(A) for G_p(A), Aut(G) for small tables when enabled."""
    settings = get_settings()
    if not isinstance(G, SdGroup) and not settings.witness_table_aut:
        return None
    H = G.A if isinstance(G, SdGroup) else G
    if isinstance(H, TableGroup) and H.is_dense and H.order <= settings.brute_aut_limit:
        return brute_force_aut(H).generators
    return None


def verify_witness(G: Any, classes: PCyclicClasses, witness: ClassWitness) -> bool:
    """Rebuild the word from its letters and check that it moves the class."""
    f = from_word(G, witness.word)
    image = G.rank(f(G.decode(witness.representative)))
    return classes.subgroup_of(image) == witness.image_class != witness.class_id


def verify_p_wild(
    G: Any,
    p: int,
    *,
    mode: str = "witness",
    depth: int | None = None,
    gens: list[AutMap] | None = None,
    threads: int | None = None,
    classes: PCyclicClasses | None = None,
) -> WildReport:
    """
    Decide whether G is <p>-wild.

    Args:
        G: TableGroup or enumerable SdGroup
        p: Prime
        mode: "witness" (BFS over words in ``gens``) or "exact" (brute-force Aut)
        depth: Word length bound for witness mode (default from settings)
        gens: Search generators (default_generators(G) when omitted)
        threads: Workers for the per-class searches
        classes: Precomputed (or cached) class inventory

    Returns:
        WildReport. No elements of order p gives wild-exact; a single subgroup
        class gives not-wild-exact without any search.

    Raises:
        InvalidParameterError: unknown mode, negative depth or fewer than one thread
        LimitExceededError: enumeration or brute-force limits
    """
    settings = get_settings()
    if mode not in ("witness", "exact"):
        raise InvalidParameterError(f"unknown mode {mode!r}")
    if depth is not None and depth < 0:
        raise InvalidParameterError(f"witness depth must be >= 0, got {depth}")
    started = time.perf_counter()
    classes = classes if classes is not None else p_cyclic_classes(G, p)
    stats = WildStats(
        order_p_elements=len(classes.points),
        element_classes=classes.element_classes,
        subgroup_classes=classes.subgroup_classes,
    )

    def finish(report: WildReport) -> WildReport:
        if settings.report_timings:
            report.stats.seconds = round(time.perf_counter() - started, 6)
        return report

    if classes.subgroup_classes == 0:
        return finish(WildReport(prime=p, mode=mode, status=WildStatus.WILD_EXACT, stats=stats))
    if classes.subgroup_classes == 1:
        return finish(
            WildReport(
                prime=p, mode=mode, status=WildStatus.NOT_WILD_EXACT,
                fixed_class=classes.reps[0], stats=stats,
            )
        )
    if mode == "exact":
        return finish(_exact_wild(G, classes, stats))

    if isinstance(G, SdGroup) and G.nA % p:
        assert not (classes.points % G.nA).any(), f"order-{p} elements of {G.name} outside B"
    depth = depth if depth is not None else settings.witness_depth
    if gens is None:
        gens = default_generators(G, _search_auts(G))
    stats.depth = depth
    stats.generators = len(gens)
    workers = threads if threads is not None else settings.threads
    if workers < 1:
        raise InvalidParameterError(f"threads must be >= 1, got {workers}")
    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(lambda rep: _witness_search(G, classes, rep, gens, depth), classes.reps))
    witnesses = [w for w in results if w is not None]
    unresolved = [rep for rep, w in zip(classes.reps, results, strict=True) if w is None]
    status = WildStatus.WILD_WITNESSED if not unresolved else WildStatus.INCONCLUSIVE
    logger.info("%s, p=%d: %d/%d classes witnessed", G.name, p, len(witnesses), len(classes.reps))
    return finish(
        WildReport(
            prime=p, mode=mode, status=status, witnesses=witnesses,
            unresolved=unresolved, stats=stats,
        )
    )


def _exact_wild(G: Any, classes: PCyclicClasses, stats: WildStats) -> WildReport:
    table = enumerate_group(G)[0] if isinstance(G, SdGroup) else G
    aut = brute_force_aut(table)
    stats.aut_order = len(aut)
    witnesses: list[ClassWitness] = []
    for rep in classes.reps:
        images = aut.elements[:, rep]
        sids = classes.subgroup_id[np.searchsorted(classes.points, images)]
        moved = np.flatnonzero(sids != rep)
        if moved.size == 0:
            return WildReport(
                prime=classes.p, mode="exact", status=WildStatus.NOT_WILD_EXACT,
                fixed_class=rep, stats=stats,
            )
        k = int(moved[0])
        witnesses.append(
            ClassWitness(
                class_id=rep,
                representative=G.encode(G.unrank(rep)),
                word=[PrimitiveSpec(kind="perm", images=aut.elements[k].tolist())],
                image_class=int(sids[k]),
            )
        )
    return WildReport(
        prime=classes.p, mode="exact", status=WildStatus.WILD_EXACT, witnesses=witnesses, stats=stats
    )


def xi(G: Any, *, mode: str = "witness", depth: int | None = None, threads: int | None = None) -> XiReport:
    """pi(G), xi(G) and one WildReport per prime of |G|."""
    primes = list(group_order_of(G).primes)
    reports = [verify_p_wild(G, q, mode=mode, depth=depth, threads=threads) for q in primes]
    wild = [r.prime for r in reports if r.status.is_wild]
    return XiReport(pi=primes, xi=wild, reports=reports)


def has_characteristic_involution_class(G: TableGroup) -> bool:
    """Some conjugacy class of involutions is invariant under all of Aut(G)."""
    partition = conjugacy_classes(G)
    aut = brute_force_aut(G)
    involutions = np.flatnonzero(G.element_orders() == 2)
    for cid in np.unique(partition.class_of[involutions]):
        rep = int(partition.classes[cid][0])
        if (partition.class_of[aut.elements[:, rep]] == cid).all():
            return True
    return False


# =============================================================================
# Triplets
# =============================================================================


@dataclass(frozen=True)
class TripletSpec:
    """
    An ordinary triplet candidate (G, D0, D1).

    D0 and D1 are permutation groups on G's element indices.
    """

    G: TableGroup
    D0: PermSubgroup
    D1: PermSubgroup
    d0_name: str = "D0"
    d1_name: str = "D1"


def trivial_perms(G: TableGroup) -> PermSubgroup:
    ident = np.arange(G.order)[None, :]
    return PermSubgroup(G.order, ident, ident)


def named_perm_group(G: TableGroup, spec: Any) -> PermSubgroup:
    """
    D0 / D1 from a name or explicit automorphisms.

    Args:
        spec: "inn", "aut", "1" (trivial), or a list of generator-image
            lists (images of G.generators, indices or labels)
    """
    if isinstance(spec, str):
        key = spec.strip().lower()
        if key == "inn":
            return inner_automorphisms(G)
        if key == "aut":
            return brute_force_aut(G)
        if key in ("1", "triv", "trivial"):
            return trivial_perms(G)
        raise InvalidParameterError(f"unknown automorphism group {spec!r} (inn, aut, 1)")
    if not isinstance(spec, list | tuple) or not all(isinstance(images, list | tuple) for images in spec):
        raise InvalidParameterError(f"automorphism group {spec!r} is neither a name nor a list of image lists")
    perms = []
    for images in spec:
        idx = [G.decode(v) for v in images]
        perm = extend_generator_images(G, idx)
        if perm is None:
            raise InvalidParameterError(f"images {images} do not define an automorphism of {G.name}")
        perms.append(perm)
    return perm_closure(G.order, perms)


def build_triplet(G: TableGroup, d0: Any, d1: Any) -> TripletSpec:
    """Triplet with D1 enlarged to contain D0 when both are given by generators."""
    D0 = named_perm_group(G, d0)
    D1 = named_perm_group(G, d1)
    if not all(g in D1 for g in D0.generators):
        D1 = perm_closure(G.order, list(D0.generators) + list(D1.generators))
    return TripletSpec(G, D0, D1, _spec_name(d0), _spec_name(d1))


def _spec_name(spec: Any) -> str:
    return spec if isinstance(spec, str) else f"<{len(spec)} generators>"


def _coset_quotient(D1: PermSubgroup, D0: PermSubgroup) -> TableGroup:
    """D1/D0 as a TableGroup on left cosets h D0."""
    coset = np.full(len(D1), -1, dtype=np.int64)
    reps: list[int] = []
    for h in range(len(D1)):
        if coset[h] >= 0:
            continue
        for k in D0.elements:
            coset[D1.index(compose_perm(D1.elements[h], k))] = len(reps)
        reps.append(h)
    q = len(reps)
    table = np.empty((q, q), dtype=np.int64)
    for i, a in enumerate(reps):
        for j, b in enumerate(reps):
            table[i, j] = coset[D1.index(compose_perm(D1.elements[a], D1.elements[b]))]
    gens = sorted({int(coset[D1.index(g)]) for g in D1.generators} - {0})
    return TableGroup(q, gens, table, name="D1/D0")


def check_triplet(t: TripletSpec, *, strict: bool = True) -> TripletReport:
    """
    Ordinary-ness, wildness (two ways) and whether D1/D0 has a normal 2-complement.

    Raises:
        TripletError: D0 not inside D1, a generator not an automorphism, or
            (strict) D0 missing an inner automorphism; ``missing`` names it
        NotNormalError: D0 not normal in D1
        AssertionError: orbit and centralizer forms of wildness disagree
    """
    G, D0, D1 = t.G, t.D0, t.D1
    for name, D in (("D0", D0), ("D1", D1)):
        for g in D.generators:
            if not is_automorphism(G, g):
                raise TripletError(f"a generator of {name} is not an automorphism of {G.name}")
    if not all(g in D1 for g in D0.generators):
        raise TripletError("D0 is not contained in D1")
    for h in D1.generators:
        hi = invert_perm(h)
        for k in D0.generators:
            if compose_perm(compose_perm(hi, k), h) not in D0:
                raise NotNormalError("D0 is not normal in D1")
    ordinary = True
    for g in G.generators:
        if inner_automorphism(G, g) not in D0:
            ordinary = False
            if strict:
                raise TripletError(
                    f"D0 lacks conjugation by generator {G.label(g)}", missing={"inner": int(g)}
                )
            break

    involutions = np.flatnonzero(G.element_orders() == 2)
    if involutions.size:
        pos = {int(a): i for i, a in enumerate(involutions)}
        labels = orbit_labels(
            len(involutions), lambda i: [pos[int(k[involutions[i]])] for k in D0.generators]
        )
        orbit_of = np.array([labels[i] for i in range(len(involutions))])
        orbits = sorted(set(orbit_of.tolist()))
        fixed = [
            o for o in orbits
            if all(orbit_of[pos[int(h[involutions[o]])]] == o for h in D1.generators)
        ]
        wild = not fixed
        in_d0 = np.array([row in D0 for row in D1.elements])
        centralizer_wild = True
        for a in involutions:
            stab = D1.elements[:, a] == a
            product = int(stab.sum()) * len(D0) // int((stab & in_d0).sum())
            if product == len(D1):
                centralizer_wild = False
                break
    else:
        orbits, wild, centralizer_wild = [], True, True
    assert wild == centralizer_wild, "orbit and centralizer forms of wildness disagree"

    n2c = has_normal_2_complement(_coset_quotient(D1, D0))
    return TripletReport(
        group=G.name,
        ordinary=ordinary,
        wild=wild,
        wild_centralizer_form=centralizer_wild,
        d1_mod_d0_n2c=n2c,
        d0_order=len(D0),
        d1_order=len(D1),
        involution_orbits=len(orbits),
    )


def _induced(G: TableGroup, projection: np.ndarray, perm: np.ndarray, q: int) -> np.ndarray:
    out = np.empty(q, dtype=np.int64)
    out[projection] = projection[perm]
    return out


def quotient_triplet(t: TripletSpec, N: ElementSet) -> TripletSpec:
    """
    (G/N, D0, D1) with the induced actions.

    Raises:
        NotNormalError: N not normal in G
        TripletError: N not invariant under D1
    """
    G = t.G
    if not is_normal(G, N):
        raise NotNormalError("N is not normal in G")
    for h in t.D1.generators:
        if not all(int(h[n]) in N for n in N):
            raise TripletError("N is not D1-invariant")
    Q, projection = quotient(G, N)
    d0 = [_induced(G, projection, g, Q.order) for g in t.D0.generators]
    d1 = [_induced(G, projection, g, Q.order) for g in t.D1.generators]
    return TripletSpec(Q, perm_closure(Q.order, d0), perm_closure(Q.order, d1), t.d0_name, t.d1_name)


def random_intermediate_triplets(G: TableGroup, count: int, *, seed: int | None = None) -> list[TripletSpec]:
    """Triplets (G, Inn, D1) with Inn <= D1 <= Aut, D1 generated by Inn and random automorphisms."""
    rng = np.random.default_rng(seed if seed is not None else get_settings().seed)
    inn = inner_automorphisms(G)
    aut = brute_force_aut(G)
    specs = []
    for _ in range(count):
        extra = rng.integers(0, len(aut), size=int(rng.integers(0, 3)))
        D1 = perm_closure(G.order, list(inn.generators) + [aut.elements[int(k)] for k in extra])
        specs.append(TripletSpec(G, inn, D1, "inn", f"inn+{len(extra)}"))
    return specs


# =============================================================================
# Harnesses
# =============================================================================


def _characteristic_quotients(G: TableGroup) -> list[ElementSet]:
    series = derived_series(G)
    candidates = series[1:] + [center(G)]
    return [N for N in candidates if 1 < len(N) < G.order]


def _check_spec(t: TripletSpec) -> tuple[TripletReport, list[HarnessViolation]]:
    report = check_triplet(t)
    report.solvable = is_solvable(t.G)
    violations = []
    if report.wild and report.d1_mod_d0_n2c:
        if not report.solvable:
            violations.append(
                HarnessViolation(
                    group=t.G.name, d0=t.d0_name, d1=t.d1_name,
                    reason="wild with N2C quotient over a nonsolvable group", triplet=report,
                )
            )
        for N in _characteristic_quotients(t.G):
            if not check_triplet(quotient_triplet(t, N)).wild:
                violations.append(
                    HarnessViolation(
                        group=t.G.name, d0=t.d0_name, d1=t.d1_name,
                        reason=f"quotient by a characteristic subgroup of order {len(N)} is not wild",
                        triplet=report,
                    )
                )
    return report, violations


def theorem1_harness(specs: list[TripletSpec], *, threads: int | None = None) -> HarnessReport:
    """
    Check every triplet; errors are recorded per spec and never abort the run.

    A nonempty violation list contradicts the solvability criterion and
    points at an implementation bug.
    """
    workers = threads if threads is not None else get_settings().threads
    if workers < 1:
        raise InvalidParameterError(f"threads must be >= 1, got {workers}")

    def run(t: TripletSpec) -> tuple[TripletReport | None, list[HarnessViolation], str | None]:
        try:
            report, violations = _check_spec(t)
            return report, violations, None
        except GroupError as exc:
            return None, [], f"{t.G.name} ({t.d0_name}, {t.d1_name}): {exc}"

    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(run, specs))
    reports = [r for r, _, _ in results if r is not None]
    return HarnessReport(
        checked=len(reports),
        wild=sum(r.wild for r in reports),
        wild_with_n2c=sum(r.wild and r.d1_mod_d0_n2c for r in reports),
        violations=[v for _, vs, _ in results for v in vs],
        errors=[e for _, _, e in results if e is not None],
    )


def corollary1_check(G: TableGroup, N: ElementSet) -> CorollaryResult:
    """
    An involution a in N with C_G(a) N = G.

    Unmet preconditions (G solvable, N not normal, G/N without a normal
    2-complement) are reported with ``preconditions_met=False`` and a reason;
    no search is made then.
    """
    N = frozenset(N)
    reason = None
    if is_solvable(G):
        reason = f"{G.name} is solvable"
    elif not is_normal(G, N):
        reason = "N is not normal in G"
    elif not has_normal_2_complement(quotient(G, N)[0]):
        reason = "G/N has no normal 2-complement"
    if reason is not None:
        return CorollaryResult(group=G.name, normal_order=len(N), preconditions_met=False, reason=reason)
    orders = G.element_orders()
    for a in sorted(N):
        if orders[a] != 2:
            continue
        C = centralizer(G, a)
        product = len(C) * len(N) // len(C & N)
        if product == G.order:
            return CorollaryResult(
                group=G.name, normal_order=len(N), involution=int(a), product_order=product
            )
    return CorollaryResult(group=G.name, normal_order=len(N), refuted=True)


def builtin_catalog_triplets(samples: int = 20, *, seed: int | None = None) -> list[TripletSpec]:
    """(Inn, Inn), (Inn, Aut) and random intermediate triplets over A5, S5 and A5 x C2."""
    try:
        from .catalog import catalog_group
    except ImportError:
        from catalog import catalog_group
    specs: list[TripletSpec] = []
    for name in ("A5", "S5", "A5 x C2"):
        G = catalog_group(name)
        inn = inner_automorphisms(G)
        specs.append(TripletSpec(G, inn, inn, "inn", "inn"))
        specs.append(TripletSpec(G, inn, brute_force_aut(G), "inn", "aut"))
        specs.extend(random_intermediate_triplets(G, samples, seed=seed))
    return specs


__all__ = [
    "PCyclicClasses",
    "TripletSpec",
    "build_triplet",
    "check_triplet",
    "corollary1_check",
    "has_characteristic_involution_class",
    "p_cyclic_classes",
    "quotient_triplet",
    "random_intermediate_triplets",
    "theorem1_harness",
    "verify_p_wild",
    "verify_witness",
    "xi",
]
