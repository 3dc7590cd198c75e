"""
Exact linear algebra over GF(p) and the A-module B.

B = B_1 + ... + B_r with basis v^i_h (h a non-identity element of A) and the
right action

    (v^i_h)^g = v^i_{hg} - v^i_g,      v^i_0 = 0.

Coordinates:
    Block i (1-based) and h with rank(h) >= 1 map to
    j = (i - 1) * (|A| - 1) + rank(h) - 1.

Vectors are dense numpy arrays up to ``sparse_threshold`` coordinates and
sparse {coordinate: residue} dicts above it. Both forms compare and hash
equal when they hold the same nonzero entries.

Version: 0.4.0
License: MIT
"""

import logging
from collections.abc import Iterable
from dataclasses import dataclass
from typing import Any

import numpy as np

# mypy: disable-error-code="no-redef"
try:
    from .config import get_settings
    from .errors import InvalidParameterError, ParentMismatchError
except ImportError:
    from config import get_settings
    from errors import InvalidParameterError, ParentMismatchError

logger = logging.getLogger(__name__)


# =============================================================================
# Vectors
# =============================================================================


class GfpVector:
    """
    Element of GF(p)^dim.

    Exactly one of ``dense`` (int64 array of residues) or ``sparse`` (dict of
    nonzero residues) is set. Arithmetic between two dense vectors stays
    dense; anything involving a sparse vector is sparse.
    """

    __slots__ = ("p", "dim", "dense", "sparse")

    def __init__(
        self,
        p: int,
        dim: int,
        *,
        dense: np.ndarray | None = None,
        sparse: dict[int, int] | None = None,
    ):
        self.p = p
        self.dim = dim
        self.dense = None if dense is None else np.mod(np.asarray(dense, dtype=np.int64), p)
        self.sparse = None
        if dense is None:
            self.sparse = {j: c % p for j, c in (sparse or {}).items() if c % p}
        elif self.dense.shape != (dim,):
            raise ParentMismatchError(f"dense vector of shape {self.dense.shape}, expected ({dim},)")

    # -------------------------------------------------------------------------
    # Construction
    # -------------------------------------------------------------------------

    @classmethod
    def zeros(cls, p: int, dim: int, *, sparse: bool | None = None) -> "GfpVector":
        if sparse is None:
            sparse = dim > get_settings().sparse_threshold
        if sparse:
            return cls(p, dim, sparse={})
        return cls(p, dim, dense=np.zeros(dim, dtype=np.int64))

    @classmethod
    def from_items(
        cls, p: int, dim: int, items: Iterable[tuple[int, int]], *, sparse: bool | None = None
    ) -> "GfpVector":
        out: dict[int, int] = {}
        for j, c in items:
            if not 0 <= j < dim:
                raise ParentMismatchError(f"coordinate {j} outside dimension {dim}")
            out[j] = (out.get(j, 0) + c) % p
        vec = cls(p, dim, sparse=out)
        if sparse is None:
            sparse = dim > get_settings().sparse_threshold
        return vec if sparse else vec.to_dense()

    # -------------------------------------------------------------------------
    # Views
    # -------------------------------------------------------------------------

    @property
    def is_sparse(self) -> bool:
        return self.dense is None

    def items(self) -> list[tuple[int, int]]:
        """Nonzero (coordinate, residue) pairs in coordinate order."""
        if self.dense is not None:
            nz = np.flatnonzero(self.dense)
            return list(zip(nz.tolist(), self.dense[nz].tolist(), strict=True))
        return sorted(self.sparse.items())  # type: ignore[union-attr]

    def to_dense(self) -> "GfpVector":
        if self.dense is not None:
            return self
        arr = np.zeros(self.dim, dtype=np.int64)
        for j, c in self.sparse.items():  # type: ignore[union-attr]
            arr[j] = c
        return GfpVector(self.p, self.dim, dense=arr)

    def to_sparse(self) -> "GfpVector":
        if self.sparse is not None:
            return self
        return GfpVector(self.p, self.dim, sparse=dict(self.items()))

    def to_array(self) -> np.ndarray:
        return self.to_dense().dense  # type: ignore[return-value]

    def __getitem__(self, j: int) -> int:
        if self.dense is not None:
            return int(self.dense[j])
        return self.sparse.get(j, 0)  # type: ignore[union-attr]

    def is_zero(self) -> bool:
        if self.dense is not None:
            return not self.dense.any()
        return not self.sparse

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -------------------------------------------------------------------------
    # Arithmetic
    # -------------------------------------------------------------------------

    def _check(self, other: "GfpVector") -> None:
        if self.p != other.p or self.dim != other.dim:
            raise ParentMismatchError(
                f"GF({self.p})^{self.dim} and GF({other.p})^{other.dim} vectors combined"
            )

    def __add__(self, other: "GfpVector") -> "GfpVector":
        self._check(other)
        if self.dense is not None and other.dense is not None:
            return GfpVector(self.p, self.dim, dense=self.dense + other.dense)
        out = dict(self.items())
        for j, c in other.items():
            out[j] = out.get(j, 0) + c
        return GfpVector(self.p, self.dim, sparse=out)

    def __neg__(self) -> "GfpVector":
        return self.scale(-1)

    def __sub__(self, other: "GfpVector") -> "GfpVector":
        return self + (-other)

    def scale(self, k: int) -> "GfpVector":
        k %= self.p
        if self.dense is not None:
            return GfpVector(self.p, self.dim, dense=self.dense * k)
        return GfpVector(self.p, self.dim, sparse={j: c * k for j, c in self.sparse.items()})  # type: ignore[union-attr]

    def __rmul__(self, k: int) -> "GfpVector":
        return self.scale(k)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GfpVector):
            return NotImplemented
        return self.p == other.p and self.dim == other.dim and self.items() == other.items()

    def __hash__(self) -> int:
        return hash((self.p, self.dim, tuple(self.items())))

    def __repr__(self) -> str:
        kind = "sparse" if self.is_sparse else "dense"
        return f"GfpVector(p={self.p}, dim={self.dim}, {kind}, {dict(self.items())})"


# =============================================================================
# The module B
# =============================================================================


class ModuleB:
    """
    The GF(p)[A]-module B = B_1 + ... + B_r.

    Attributes:
        p: Prime modulus
        r: Number of blocks
        A: Acting group (TableGroup or SdGroup)
        n: |A|
        block_dim: |A| - 1
        dim: r * (|A| - 1)
        sparse: Whether vectors default to the sparse form
    """

    def __init__(self, p: int, r: int, A: Any, *, sparse: bool | None = None):
        n = int(A.order)
        if n < 2:
            raise InvalidParameterError("the acting group must be nontrivial")
        self.p = p
        self.r = r
        self.A = A
        self.n = n
        self.block_dim = n - 1
        self.dim = r * (n - 1)
        self.sparse = sparse if sparse is not None else self.dim > get_settings().sparse_threshold
        self._columns: dict[int, np.ndarray] = {}

    def __repr__(self) -> str:
        return f"ModuleB(p={self.p}, r={self.r}, |A|={self.n}, dim={self.dim})"

    # -------------------------------------------------------------------------
    # Basis bookkeeping
    # -------------------------------------------------------------------------

    def coord(self, i: int, h: Any) -> int:
        """Coordinate of v^i_h; h must not be the identity."""
        if not 1 <= i <= self.r:
            raise InvalidParameterError(f"block {i} outside 1..{self.r}")
        k = self.A.rank(h)
        if k == 0:
            raise InvalidParameterError("v^i_0 is the zero vector and has no coordinate")
        return (i - 1) * self.block_dim + k - 1

    def basis_of(self, j: int) -> tuple[int, Any]:
        """Inverse of coord: (block, element)."""
        i, k = divmod(j, self.block_dim)
        return i + 1, self.A.unrank(k + 1)

    def zero(self) -> GfpVector:
        return GfpVector.zeros(self.p, self.dim, sparse=self.sparse)

    def basis(self, i: int, h: Any) -> GfpVector:
        """v^i_h, the zero vector when h is the identity."""
        if self.A.rank(h) == 0:
            return self.zero()
        return GfpVector.from_items(self.p, self.dim, [(self.coord(i, h), 1)], sparse=self.sparse)

    def vector(self, items: Iterable[tuple[int, int]] | np.ndarray) -> GfpVector:
        if isinstance(items, np.ndarray):
            return GfpVector.from_items(
                self.p, self.dim, [(int(j), int(items[j])) for j in np.flatnonzero(items)], sparse=self.sparse
            )
        return GfpVector.from_items(self.p, self.dim, items, sparse=self.sparse)

    def block(self, v: GfpVector, i: int) -> GfpVector:
        """Component t_i of v in B_i (as a vector of B)."""
        lo, hi = (i - 1) * self.block_dim, i * self.block_dim
        if v.dense is not None:
            arr = np.zeros(self.dim, dtype=np.int64)
            arr[lo:hi] = v.dense[lo:hi]
            return GfpVector(self.p, self.dim, dense=arr)
        return GfpVector(self.p, self.dim, sparse={j: c for j, c in v.items() if lo <= j < hi})

    def local(self, v: GfpVector, i: int) -> np.ndarray:
        """Block-local coordinates of v's i-th component (dense, length |A| - 1)."""
        lo, hi = (i - 1) * self.block_dim, i * self.block_dim
        if v.dense is not None:
            return v.dense[lo:hi].copy()
        out = np.zeros(self.block_dim, dtype=np.int64)
        for j, c in v.items():
            if lo <= j < hi:
                out[j - lo] = c
        return out

    def embed(self, local: np.ndarray, i: int) -> GfpVector:
        """Vector of B whose i-th component has the given block-local coordinates."""
        lo = (i - 1) * self.block_dim
        nz = np.flatnonzero(np.mod(local, self.p))
        return GfpVector.from_items(
            self.p, self.dim, [(lo + int(k), int(local[k])) for k in nz], sparse=self.sparse
        )

    def _check(self, v: GfpVector) -> None:
        if v.p != self.p or v.dim != self.dim:
            raise ParentMismatchError(f"vector GF({v.p})^{v.dim} does not belong to {self!r}")

    def column(self, g: Any) -> np.ndarray:
        """rank(h * g) for every h in rank order; cached per g."""
        key = self.A.rank(g)
        col = self._columns.get(key)
        if col is None:
            col = np.asarray(self.A.right_column(g), dtype=np.int64)
            self._columns[key] = col
        return col


# =============================================================================
# Action
# =============================================================================


def act(B: ModuleB, v: GfpVector, g: Any) -> GfpVector:
    """
    Right action v^g, linear extension of (v^i_h)^g = v^i_{hg} - v^i_g.

    Raises:
        ParentMismatchError: v is not a vector of B
    """
    B._check(v)
    rg = B.A.rank(g)
    if rg == 0:
        return v
    if v.dense is not None:
        return GfpVector(B.p, B.dim, dense=act_batch(B, v.dense[None, :], g)[0])
    out: dict[int, int] = {}
    for j, c in v.items():
        i, k = divmod(j, B.block_dim)
        base = i * B.block_dim
        hg = B.A.rank(B.A.mul(B.A.unrank(k + 1), g))
        if hg:
            out[base + hg - 1] = out.get(base + hg - 1, 0) + c
        out[base + rg - 1] = out.get(base + rg - 1, 0) - c
    return GfpVector(B.p, B.dim, sparse=out)


def act_batch(B: ModuleB, V: np.ndarray, g: Any) -> np.ndarray:
    """Action of g on every row of a (m, dim) array of dense vectors."""
    V = np.asarray(V, dtype=np.int64)
    rg = B.A.rank(g)
    if rg == 0:
        return V % B.p
    col = B.column(g)
    m = V.shape[0]
    W = V.reshape(m, B.r, B.block_dim)
    full = np.zeros((m, B.r, B.n), dtype=np.int64)
    full[:, :, col[1:]] = W
    full[:, :, rg] -= W.sum(axis=2)
    return np.mod(full[:, :, 1:], B.p).reshape(m, B.dim)


def block_matrix(B: ModuleB, g: Any) -> np.ndarray:
    """
    Matrix of act(., g) on one block in block-local coordinates.

    Column k holds the image of v_h with rank(h) = k + 1, so that
    ``block_matrix(B, g) @ x`` acts on a local coordinate column x.
    """
    d = B.block_dim
    M = np.zeros((d, d), dtype=np.int64)
    rg = B.A.rank(g)
    if rg == 0:
        return np.eye(d, dtype=np.int64)
    col = B.column(g)
    h = np.arange(1, B.n)
    hg = col[1:]
    keep = hg != 0
    M[hg[keep] - 1, h[keep] - 1] += 1
    M[rg - 1, :] -= 1
    return np.mod(M, B.p)


def norm_matrix(B: ModuleB, g: Any) -> np.ndarray:
    """Block-local matrix of v -> sum_{k < ord(g)} v^(g^k)."""
    d = B.block_dim
    total = np.zeros((d, d), dtype=np.int64)
    x = B.A.identity()
    for _ in range(B.A.element_order(g)):
        total += block_matrix(B, x)
        x = B.A.mul(x, g)
    return np.mod(total, B.p)


def norm_map(B: ModuleB, v: GfpVector, g: Any) -> GfpVector:
    """N_g(v) = sum_{k < ord(g)} act(v, g^k); x = (g, v) has order ord(g) iff N_g(v) = 0."""
    total = GfpVector.zeros(B.p, B.dim, sparse=v.is_sparse)
    x = B.A.identity()
    for _ in range(B.A.element_order(g)):
        total = total + act(B, v, x)
        x = B.A.mul(x, g)
    return total


# =============================================================================
# Gaussian elimination
# =============================================================================


@dataclass(frozen=True)
class LinearSolution:
    """
    Result of solving M x = b over GF(p).

    Attributes:
        x: One solution, or None when the system is inconsistent
        kernel: Basis of the null space of M (rows)
        rank: Rank of M
        pivots: Pivot columns of the reduced M
    """

    x: np.ndarray | None
    kernel: np.ndarray
    rank: int
    pivots: tuple[int, ...]

    @property
    def solvable(self) -> bool:
        return self.x is not None


def row_reduce(p: int, M: np.ndarray, *, ncols: int | None = None) -> tuple[np.ndarray, list[int]]:
    """
    Reduced row echelon form over GF(p).

    Pivots are searched left to right among the first ``ncols`` columns and
    the pivot row is the first remaining row with a nonzero entry there.
    """
    R = np.mod(np.array(M, dtype=np.int64), p)
    rows, cols = R.shape
    ncols = cols if ncols is None else ncols
    pivots: list[int] = []
    row = 0
    for c in range(ncols):
        if row == rows:
            break
        nz = np.flatnonzero(R[row:, c])
        if nz.size == 0:
            continue
        pr = row + int(nz[0])
        if pr != row:
            R[[row, pr]] = R[[pr, row]]
        R[row] = (R[row] * pow(int(R[row, c]), -1, p)) % p
        factors = R[:, c].copy()
        factors[row] = 0
        R = (R - np.outer(factors, R[row])) % p
        pivots.append(c)
        row += 1
    return R, pivots


def solve_linear(p: int, M: np.ndarray, b: np.ndarray | GfpVector) -> LinearSolution:
    """
    Solve M x = b over GF(p) by elimination.

    Raises:
        ParentMismatchError: b's length differs from M's row count
    """
    M = np.atleast_2d(np.asarray(M, dtype=np.int64))
    rhs = b.to_array() if isinstance(b, GfpVector) else np.asarray(b, dtype=np.int64)
    rows, cols = M.shape
    if rhs.shape != (rows,):
        raise ParentMismatchError(f"right-hand side of length {rhs.shape[0]} for {rows} equations")
    R, pivots = row_reduce(p, np.hstack([M, rhs[:, None]]), ncols=cols)
    rank = len(pivots)
    x: np.ndarray | None = None
    if not R[rank:, cols].any():
        x = np.zeros(cols, dtype=np.int64)
        for k, c in enumerate(pivots):
            x[c] = R[k, cols]
    free = [c for c in range(cols) if c not in pivots]
    kernel = np.zeros((len(free), cols), dtype=np.int64)
    for n, f in enumerate(free):
        kernel[n, f] = 1
        for k, c in enumerate(pivots):
            kernel[n, c] = (-R[k, f]) % p
    return LinearSolution(x=x, kernel=kernel, rank=rank, pivots=tuple(pivots))


def image_basis(p: int, M: np.ndarray) -> np.ndarray:
    """Row-reduced basis (rows) of the column space of M."""
    R, pivots = row_reduce(p, np.asarray(M, dtype=np.int64).T)
    return R[: len(pivots)]


def commutator_image(B: ModuleB, g: Any, i: int = 1) -> np.ndarray:
    """
    Basis of [g, B_i] = {act(v, g) - v : v in B_i} in block-local coordinates.

    The action preserves each block, so the subspace is the same for every i;
    ``i`` is validated for range only.
    """
    if not 1 <= i <= B.r:
        raise InvalidParameterError(f"block {i} outside 1..{B.r}")
    d = B.block_dim
    return image_basis(B.p, block_matrix(B, g) - np.eye(d, dtype=np.int64))
