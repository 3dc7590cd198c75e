"""
Catalog of standard small groups as TableGroups.

Atoms:
    Cn  cyclic of order n               (generator 1)
    Dn  dihedral of order 2n            (index k + n*s for r^k s^s)
    Sn  symmetric, n <= 6               (sympy permutation groups)
    An  alternating, n <= 6
    Q8  quaternion group                (index 2*unit + sign)

Direct products are written with "x" ("C2 x C2", "A5xC2").

Version: 0.4.0
License: MIT
"""

import logging
import re
from functools import lru_cache, reduce

import numpy as np
from sympy.combinatorics import Permutation
from sympy.combinatorics.named_groups import AlternatingGroup, SymmetricGroup

# mypy: disable-error-code="no-redef"
try:
    from .config import get_settings
    from .errors import LimitExceededError, UnknownAtomError
    from .groups import TableGroup, direct_product
except ImportError:
    from config import get_settings
    from errors import LimitExceededError, UnknownAtomError
    from groups import TableGroup, direct_product

logger = logging.getLogger(__name__)

ATOM_PATTERN = re.compile(r"^(?:([CDSA])(\d+)|Q8)$")
MAX_PERM_DEGREE = 6


# =============================================================================
# Atoms
# =============================================================================


def cyclic(n: int) -> TableGroup:
    idx = np.arange(n)
    table = np.add.outer(idx, idx) % n
    return TableGroup(n, [1] if n > 1 else [0], table, labels=[f"g^{k}" for k in idx], name=f"C{n}")


def dihedral(n: int) -> TableGroup:
    """D_n of order 2n: r^k s^e stored at k + n*e, with s r s = r^-1."""
    idx = np.arange(2 * n)
    k, e = idx % n, idx // n
    sign = np.where(e == 1, -1, 1)
    rot = (k[:, None] + sign[:, None] * k[None, :]) % n
    refl = e[:, None] ^ e[None, :]
    table = rot + n * refl
    gens = [g for g in ((1 % n), n) if g]
    labels = [f"r^{a}" + ("s" if b else "") for a, b in zip(k, e, strict=True)]
    return TableGroup(2 * n, gens, table, labels=labels, name=f"D{n}")


_Q8_UNITS = ["1", "i", "j", "k"]
# unit product (a, b) -> (sign, unit), sign 1 means negative
_Q8_RULES = {
    (1, 1): (1, 0), (2, 2): (1, 0), (3, 3): (1, 0),
    (1, 2): (0, 3), (2, 3): (0, 1), (3, 1): (0, 2),
    (2, 1): (1, 3), (3, 2): (1, 1), (1, 3): (1, 2),
}


def quaternion() -> TableGroup:
    table = np.zeros((8, 8), dtype=np.int64)
    for x in range(8):
        for y in range(8):
            ux, sx = divmod(x, 2)
            uy, sy = divmod(y, 2)
            if ux == 0 or uy == 0:
                sign, unit = 0, ux or uy
            else:
                sign, unit = _Q8_RULES[(ux, uy)]
            table[x, y] = 2 * unit + (sx ^ sy ^ sign)
    labels = [("-" if s else "") + u for u in _Q8_UNITS for s in (0, 1)]
    return TableGroup(8, [2, 4], table, labels=labels, name="Q8")


def _perm_table_group(perms: list[list[int]], gens: list[list[int]], degree: int, name: str) -> TableGroup:
    """Table of a permutation group; x*y applies x first (sympy's convention)."""
    E = np.array(sorted(perms), dtype=np.int64)
    weights = degree ** np.arange(degree - 1, -1, -1, dtype=np.int64)
    keys = E @ weights
    n = len(E)
    table = np.empty((n, n), dtype=np.int64)
    for i in range(n):
        table[i] = np.searchsorted(keys, E[:, E[i]] @ weights)
    gen_idx = sorted({int(np.searchsorted(keys, np.array(g) @ weights)) for g in gens} - {0})
    labels = [_cycle_label(row) for row in E.tolist()]
    return TableGroup(n, gen_idx, table, labels=labels, name=name)


def _cycle_label(array_form: list[int]) -> str:
    cycles = Permutation(array_form).cyclic_form
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles) or "()"


def _pad(array_form: list[int], degree: int) -> list[int]:
    return list(array_form) + list(range(len(array_form), degree))


def symmetric(n: int) -> TableGroup:
    if n <= 1:
        return _trivial(f"S{n}")
    group = SymmetricGroup(n)
    perms = [_pad(p, n) for p in group.generate(af=True)]
    gens = [_pad(g.array_form, n) for g in group.generators]
    return _perm_table_group(perms, gens, n, f"S{n}")


def alternating(n: int) -> TableGroup:
    if n <= 2:
        return _trivial(f"A{n}")
    group = AlternatingGroup(n)
    perms = [_pad(p, n) for p in group.generate(af=True)]
    gens = [_pad(g.array_form, n) for g in group.generators]
    return _perm_table_group(perms, gens, n, f"A{n}")


def _trivial(name: str) -> TableGroup:
    return TableGroup(1, [0], np.zeros((1, 1), dtype=np.int64), labels=["()"], name=name)


# =============================================================================
# Lookup
# =============================================================================


def atom_order(name: str) -> int:
    """Order of a catalog atom without building it."""
    match = ATOM_PATTERN.match(name.strip())
    if match is None:
        raise UnknownAtomError(f"unknown group atom {name!r}")
    if match.group(1) is None:
        return 8
    kind, n = match.group(1), int(match.group(2))
    _check_atom(kind, n, name)
    return {"C": n, "D": 2 * n, "S": _factorial(n), "A": max(1, _factorial(n) // 2)}[kind]


def _factorial(n: int) -> int:
    return reduce(lambda a, b: a * b, range(1, n + 1), 1)


def _check_atom(kind: str, n: int, name: str) -> None:
    if n < 1:
        raise UnknownAtomError(f"{name}: parameter must be positive")
    if kind in "SA" and n > MAX_PERM_DEGREE:
        raise UnknownAtomError(f"{name}: degree above {MAX_PERM_DEGREE} is not in the catalog")


@lru_cache(maxsize=64)
def _atom(name: str) -> TableGroup:
    match = ATOM_PATTERN.match(name)
    assert match is not None
    if match.group(1) is None:
        return quaternion()
    kind, n = match.group(1), int(match.group(2))
    builders = {"C": cyclic, "D": dihedral, "S": symmetric, "A": alternating}
    return builders[kind](n)


def catalog_group(name: str, *, max_enum: int | None = None) -> TableGroup:
    """
    Build a catalog group or a direct product of catalog atoms.

    Args:
        name: Atom ("C6", "D5", "S4", "A5", "Q8") or product ("A5 x C2")
        max_enum: Enumeration limit (default from settings)

    Raises:
        UnknownAtomError: unrecognised atom or out-of-range parameter
        LimitExceededError: resulting order above max_enum
    """
    limit = max_enum if max_enum is not None else get_settings().max_enum
    atoms = [a for a in re.split(r"\s*x\s*", name.strip())]
    if any(not a for a in atoms):
        raise UnknownAtomError(f"malformed product {name!r}")
    total = 1
    for a in atoms:
        total *= atom_order(a)
    if total > limit:
        raise LimitExceededError(f"catalog group {name}", total, limit)
    group = _atom(atoms[0])
    for a in atoms[1:]:
        group = direct_product(group, _atom(a))
    logger.debug("catalog %s: order %d", name, group.order)
    return group
