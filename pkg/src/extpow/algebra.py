"""Exact integer linear algebra for the algebraic exterior power.

Matrices are sparse int64 (scipy CSR). Every product and sum is bounded
before it is formed, so a result that could overflow int64 raises
``OverflowError`` instead of wrapping. The anti-symmetrizer's ``1/sqrt(k!)``
is never materialized: it is kept as the integer matrix ``N`` with a
declared denominator ``k!`` for ``N N^T`` style products.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from math import comb, factorial
from typing import Sequence

import numpy as np
import scipy.sparse as sp

from .combinat import all_permutations, subsets
from .exterior import wedge_power
from .signed import SignedGraph

DEFAULT_MAX_ROWS = 10**6
MAX_ROWS_ENV = "EXTPOW_MAX_ROWS"
_INT64_LIMIT = 2**62


class SizeLimitError(ValueError):
    pass


class UnsupportedPartitionError(ValueError):
    pass


def max_rows() -> int:
    value = os.environ.get(MAX_ROWS_ENV)
    return int(value) if value else DEFAULT_MAX_ROWS


def _check_rows(rows: int, what: str) -> None:
    limit = max_rows()
    if rows > limit:
        raise SizeLimitError(f"{what} needs {rows} rows, above the limit {limit} (set {MAX_ROWS_ENV})")


class IntMatrix:
    """Sparse exact-integer matrix with overflow-checked arithmetic."""

    __slots__ = ("data",)

    def __init__(self, data):
        m = sp.csr_matrix(data, dtype=np.int64)
        m.eliminate_zeros()
        m.sort_indices()
        self.data = m

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls(sp.csr_matrix((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(sp.identity(n, dtype=np.int64, format="csr"))

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape

    @property
    def nnz(self) -> int:
        return self.data.nnz

    def max_abs(self) -> int:
        return int(abs(self.data).max()) if self.data.nnz else 0

    def _max_abs_row_sum(self) -> int:
        if not self.data.nnz:
            return 0
        return int(abs(self.data).sum(axis=1).max())

    @property
    def T(self) -> IntMatrix:
        return IntMatrix(self.data.T)

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.shape[1] != other.shape[0]:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        if self._max_abs_row_sum() * other.max_abs() >= _INT64_LIMIT:
            raise OverflowError("integer matrix product could overflow int64")
        return IntMatrix(self.data @ other.data)

    def __add__(self, other: IntMatrix) -> IntMatrix:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} + {other.shape}")
        if self.max_abs() + other.max_abs() >= _INT64_LIMIT:
            raise OverflowError("integer matrix sum could overflow int64")
        return IntMatrix(self.data + other.data)

    def __sub__(self, other: IntMatrix) -> IntMatrix:
        return self + other.scale(-1)

    def scale(self, c: int) -> IntMatrix:
        if self.max_abs() * abs(c) >= _INT64_LIMIT:
            raise OverflowError("integer matrix scaling could overflow int64")
        return IntMatrix(self.data * c)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self.shape != other.shape:
            return False
        return (self.data != other.data).nnz == 0

    __hash__ = None

    def is_symmetric(self) -> bool:
        return self == self.T

    def to_dense(self) -> np.ndarray:
        return self.data.toarray()

    def tolist(self) -> list[list[int]]:
        return self.to_dense().tolist()

    def row_sums(self) -> list[int]:
        return [int(x) for x in np.asarray(self.data.sum(axis=1)).ravel()]

    def __repr__(self) -> str:
        return f"IntMatrix(shape={self.shape}, nnz={self.nnz})"


@dataclass(frozen=True)
class ScaledMatrix:
    """The rational matrix ``mat / denom``."""

    mat: IntMatrix
    denom: int = 1

    def __post_init__(self):
        if self.denom < 1:
            raise ValueError("denominator must be a positive integer")

    def exact(self) -> IntMatrix:
        """``mat / denom`` as an integer matrix; raises if not divisible."""
        if self.denom == 1:
            return self.mat
        data = self.mat.data
        if np.any(data.data % self.denom):
            raise ValueError(f"matrix entries are not divisible by {self.denom}")
        return IntMatrix(sp.csr_matrix((data.data // self.denom, data.indices, data.indptr), shape=data.shape))


def adjacency_matrix(g: SignedGraph) -> IntMatrix:
    rows, cols, vals = [], [], []
    for u, v, s in g.edges():
        rows += [u, v]
        cols += [v, u]
        vals += [s, s]
    return IntMatrix(sp.csr_matrix((vals, (rows, cols)), shape=(g.n, g.n), dtype=np.int64))


def tuple_index(t: Sequence[int], n: int) -> int:
    """Mixed-radix index of a k-tuple, leftmost coordinate most significant."""
    i = 0
    for x in t:
        i = i * n + x
    return i


def cartesian_power(g: SignedGraph, k: int) -> IntMatrix:
    """``sum_j I^(j-1) (x) A (x) I^(k-j)``, rows in mixed-radix tuple order."""
    if k < 1:
        raise ValueError("k must be at least 1")
    n = g.n
    _check_rows(n**k, "cartesian power")
    a = adjacency_matrix(g).data
    total = sp.csr_matrix((n**k, n**k), dtype=np.int64)
    for j in range(k):
        left = sp.identity(n**j, dtype=np.int64, format="csr")
        right = sp.identity(n ** (k - 1 - j), dtype=np.int64, format="csr")
        total = total + sp.kron(sp.kron(left, a, format="csr"), right, format="csr")
    return IntMatrix(total)


def alternator(n: int, k: int) -> ScaledMatrix:
    """Unnormalized anti-symmetrizer ``N`` (``n**k`` x ``C(n, k)``) over ``k!``.

    Column ``c`` (the c-th k-subset ``v``) carries ``sgn(pi)`` at the row of
    ``pi(v)`` for every ``pi`` in S_k.
    """
    if not (1 <= k <= n):
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    _check_rows(n**k * comb(n, k), "anti-symmetrizer")
    perms = all_permutations(k)
    rows, cols, vals = [], [], []
    for c, v in enumerate(subsets(n, k)):
        for p in perms:
            rows.append(tuple_index(p.act(v), n))
            cols.append(c)
            vals.append(p.sign)
    mat = sp.csr_matrix((vals, (rows, cols)), shape=(n**k, comb(n, k)), dtype=np.int64)
    return ScaledMatrix(IntMatrix(mat), factorial(k))


@dataclass(frozen=True)
class IdentityReport:
    orthogonality: bool
    commutation: bool
    quotient_equal: bool

    @property
    def ok(self) -> bool:
        return self.orthogonality and self.commutation and self.quotient_equal

    def failed(self) -> list[str]:
        return [name for name in ("orthogonality", "commutation", "quotient_equal") if not getattr(self, name)]


def verify_exterior_identities(g: SignedGraph, k: int) -> IdentityReport:
    """Check the three anti-symmetrizer identities in integer form.

    With ``N = sqrt(k!) * Alt``: ``N^T N == k! I``, ``N N^T`` commutes with
    ``A(g^k)``, and ``N^T A(g^k) N == k! A(wedge_power(g, k))``.
    """
    scaled = alternator(g.n, k)
    nmat, kf = scaled.mat, scaled.denom
    cart = cartesian_power(g, k)
    nt = nmat.T
    orthogonality = nt @ nmat == IntMatrix.identity(nmat.shape[1]).scale(kf)
    proj = nmat @ nt
    commutation = proj @ cart == cart @ proj
    wedge = adjacency_matrix(wedge_power(g, k).graph)
    quotient_equal = nt @ cart @ nmat == wedge.scale(kf)
    return IdentityReport(bool(orthogonality), bool(commutation), bool(quotient_equal))


def quotient_by_uniform_partition(a: IntMatrix, cells: Sequence[Sequence[int]], cell_size: int) -> ScaledMatrix:
    """``Q^T A Q`` for the normalized indicator ``Q`` of equal-size cells.

    Returned as block sums over ``cell_size``. Cells must be disjoint and
    all of size ``cell_size``; indices outside every cell are dropped.
    """
    if cell_size < 1:
        raise ValueError("cell size must be positive")
    seen: set[int] = set()
    for cell in cells:
        if len(cell) != cell_size:
            raise UnsupportedPartitionError(
                f"cell of size {len(cell)} in a partition declared uniform with size {cell_size}"
            )
        for x in cell:
            if not (0 <= x < a.shape[0]) or x in seen:
                raise ValueError(f"index {x} is out of range or in two cells")
            seen.add(x)
    rows = [x for cell in cells for x in cell]
    cols = [j for j, cell in enumerate(cells) for _ in cell]
    indicator = IntMatrix(
        sp.csr_matrix(([1] * len(rows), (rows, cols)), shape=(a.shape[0], len(cells)), dtype=np.int64)
    )
    if indicator.T @ indicator != IntMatrix.identity(len(cells)).scale(cell_size):
        raise UnsupportedPartitionError("cell indicator is not orthogonal")
    return ScaledMatrix(indicator.T @ a @ indicator, cell_size)


def orbit_cells(n: int, k: int) -> list[list[int]]:
    """Cells ``{pi(v) : pi in S_k}`` of repeated-free k-tuples, one per k-subset."""
    perms = all_permutations(k)
    return [[tuple_index(p.act(v), n) for p in perms] for v in subsets(n, k)]
