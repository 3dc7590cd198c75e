"""
Pydantic models for grpwild reports.

Every CLI run prints exactly one Report as a single JSON line. The models in
this module define that schema; the computing modules return them directly so
the CLI only wraps and serialises.

Model Categories:
    1. Automorphism words - PrimitiveSpec letters and per-class witnesses
    2. Wildness - WildStatus, WildStats, WildReport
    3. Triplets and harnesses - TripletReport, HarnessViolation, CorollaryResult
    4. Constructions - SakLevel, SakDescriptor, Lemma5Result
    5. Envelope - Report, ErrorBody

Element encoding:
    Elements of catalog groups are their table index (int). Elements of
    G_p(A) are {"a": <A element>, "v": {coordinate: residue}} with the sparse
    nonzero coordinates of the vector part; nested constructions nest "a".

Version: 0.4.0
License: MIT
"""

from enum import Enum
from typing import Any, Literal

from pydantic import BaseModel, Field

SCHEMA_VERSION = 1
TOOL_VERSION = "0.4.0"


# =============================================================================
# Automorphism Words
# =============================================================================


class PrimitiveSpec(BaseModel):
    """
    One letter of an automorphism word.

    Attributes:
        kind: Primitive family
            - "psi": cyclic shift of the blocks B_1 -> B_2 -> ... -> B_r -> B_1
            - "phi": v^r_g -> v^r_g - v^1_g, identity on the other blocks
            - "psi_i": (a, v) -> (a, v + v^i_a)
            - "lift": automorphism F of A lifted to (a, v^i_g) -> (F(a), v^i_F(g))
            - "inner": y -> x^-1 y x
            - "linear": A-equivariant linear map on B, identity on A
            - "perm": explicit permutation of a TableGroup's indices
        power: Exponent applied to the primitive (negative = inverse)
        index: Block number for psi_i (1-based)
        images: Images of A's generators (lift) or the full permutation (perm)
        element: Encoded conjugating element (inner)
        matrix: Row-major matrix over GF(p) acting on coordinate vectors (linear)

    Example:
        {"kind": "psi_i", "power": -1, "index": 1}
    """

    kind: Literal["psi", "phi", "psi_i", "lift", "inner", "linear", "perm"]
    power: int = 1
    index: int | None = None
    images: list[int] | None = None
    element: Any = None
    matrix: list[list[int]] | None = None


class ClassWitness(BaseModel):
    """
    Certificate that a conjugacy class of cyclic subgroups is not characteristic.

    Attributes:
        class_id: Canonical id of the class
        representative: Encoded element generating a subgroup in the class
        word: Automorphism word, applied left to right
        image_class: Class id of the image subgroup (differs from class_id)
    """

    class_id: int
    representative: Any
    word: list[PrimitiveSpec]
    image_class: int


# =============================================================================
# Wildness
# =============================================================================


class WildStatus(str, Enum):
    """Outcome of a <p>-wildness decision."""

    WILD_EXACT = "wild-exact"
    WILD_WITNESSED = "wild-witnessed"
    NOT_WILD_EXACT = "not-wild-exact"
    INCONCLUSIVE = "inconclusive"

    @property
    def is_wild(self) -> bool:
        return self in (WildStatus.WILD_EXACT, WildStatus.WILD_WITNESSED)


class WildStats(BaseModel):
    """
    Counters gathered while deciding <p>-wildness.

    Attributes:
        order_p_elements: Number of elements of order p
        element_classes: Conjugacy classes among those elements
        subgroup_classes: Conjugacy classes of the cyclic subgroups they generate
        depth: Witness search depth (witness mode only)
        generators: Number of primitive automorphisms searched over
        aut_order: |Aut(G)| (exact mode only)
        seconds: Wall-clock time (only with report_timings)
    """

    order_p_elements: int = 0
    element_classes: int = 0
    subgroup_classes: int = 0
    depth: int | None = None
    generators: int | None = None
    aut_order: int | None = None
    seconds: float | None = None


class WildReport(BaseModel):
    """
    Verdict for one prime.

    Invariants:
        - wild-witnessed carries one witness per subgroup class
        - not-wild-exact carries the fixed class in ``fixed_class``
    """

    prime: int
    mode: Literal["witness", "exact"]
    status: WildStatus
    witnesses: list[ClassWitness] = Field(default_factory=list)
    fixed_class: int | None = None
    unresolved: list[int] = Field(default_factory=list)
    stats: WildStats = Field(default_factory=WildStats)


class XiReport(BaseModel):
    """pi(G), xi(G) and the per-prime reports behind xi."""

    pi: list[int]
    xi: list[int]
    reports: list[WildReport]


# =============================================================================
# Triplets and Harnesses
# =============================================================================


class TripletReport(BaseModel):
    """
    Result of checking an ordinary triplet (G, D0, D1).

    Attributes:
        ordinary: Every inner automorphism of G lies in D0
        wild: No D0-orbit of involutions is invariant under D1
        wild_centralizer_form: The same predicate via |C_D1(a) D0| < |D1|
        d1_mod_d0_n2c: D1/D0 has a normal 2-complement
        d0_order: |D0|
        d1_order: |D1|
        involution_orbits: Number of D0-orbits of involutions
        solvable: Whether G is solvable (filled by the harness)
    """

    group: str = ""
    ordinary: bool
    wild: bool
    wild_centralizer_form: bool
    d1_mod_d0_n2c: bool
    d0_order: int
    d1_order: int
    involution_orbits: int
    solvable: bool | None = None


class HarnessViolation(BaseModel):
    """A triplet that would contradict the solvability criterion."""

    group: str
    d0: str
    d1: str
    reason: str
    triplet: TripletReport | None = None


class HarnessReport(BaseModel):
    """Summary of a solvability-criterion harness run."""

    checked: int
    wild: int
    wild_with_n2c: int
    violations: list[HarnessViolation] = Field(default_factory=list)
    errors: list[str] = Field(default_factory=list)
    corollary: list["CorollaryResult"] = Field(default_factory=list)


class CorollaryResult(BaseModel):
    """
    Involution witness for a nonsolvable G over a normal N with G/N N2C.

    Attributes:
        involution: Index of a in N with C_G(a) N = G, or None
        product_order: |C_G(a) N| for the witness
        refuted: True when no involution works (would contradict the criterion)
        preconditions_met: False when G is solvable, N is not normal or G/N
            has no normal 2-complement; ``reason`` says which
    """

    group: str
    normal_order: int
    involution: int | None = None
    product_order: int | None = None
    refuted: bool = False
    preconditions_met: bool = True
    reason: str | None = None


HarnessReport.model_rebuild()


# =============================================================================
# Constructions
# =============================================================================


class SakLevel(BaseModel):
    """
    One level of an iterated construction G_p(...).

    Attributes:
        prime: p of this level
        r: Minimal wild prime for this level
        dimension: r * (|inner| - 1), the GF(p)-rank of B
        order: Order of the group at this level (decimal or factor tower)
    """

    prime: int
    r: int
    dimension: str
    order: str


class SakDescriptor(BaseModel):
    """
    Iterated construction over the prime divisors of a base group.

    prime_chain lists primes outermost first; levels are listed innermost
    first, matching construction order.
    """

    base: str
    base_order: int
    prime_chain: list[int]
    levels: list[SakLevel]
    order: str
    enumerable: bool


class Lemma5Result(BaseModel):
    """
    Conjugator moving x = (g, t) of order p to (g, 0).

    Attributes:
        element: Encoded x
        u: Sparse vector with inner((0, u)) the conjugating inner automorphism
        exps: Exponents e_i; psi_1^e_1 ... psi_r^e_r is applied after inner
        word: The full automorphism word
        verified: The composite was evaluated on x and returned (g, 0)
    """

    element: Any
    u: dict[int, int]
    exps: list[int]
    word: list[PrimitiveSpec]
    verified: bool


# =============================================================================
# Envelope
# =============================================================================


class Report(BaseModel):
    """
    Top-level report printed once per CLI run.

    Example:
        {"schema_version": 1, "tool_version": "0.4.0", "command": "xi",
         "expression": "Sak(C2)", "order": "16", "exit_code": 0, ...}
    """

    schema_version: int = SCHEMA_VERSION
    tool_version: str = TOOL_VERSION
    command: str
    expression: str | None = None
    order: str | None = None
    exit_code: int
    result: dict[str, Any] = Field(default_factory=dict)
    config: dict[str, Any] = Field(default_factory=dict)
    timings: dict[str, float] | None = None


class ErrorDetail(BaseModel):
    message: str
    type: str
    code: int


class ErrorBody(BaseModel):
    """Structured error printed on stderr: {"error": {"message", "type", "code"}}."""

    error: ErrorDetail
