"""
Exact linear algebra over prime fields

All matrices are numpy int64 arrays with entries reduced into [0, p).
Subspaces are stored by their canonical reduced row-echelon basis, so two
subspaces are equal exactly when their bases are entry-wise equal.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .errors import DimensionError, PresentationError

logger = logging.getLogger(__name__)

Mat = np.ndarray

MAX_PRIME = 65521


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


@lru_cache(maxsize=None)
def inverse_table(p: int) -> np.ndarray:
    """Multiplicative inverses mod p (entry 0 maps to 0)"""
    table = np.zeros(p, dtype=np.int64)
    for x in range(1, p):
        table[x] = pow(x, p - 2, p)
    return table


@dataclass(frozen=True)
class FieldSpec:
    """A prime field F_p"""

    p: int = 2

    def __post_init__(self):
        if not _is_prime(self.p):
            raise PresentationError(f"Field characteristic must be prime, got {self.p}")
        if self.p > MAX_PRIME:
            raise PresentationError(f"Prime {self.p} too large (max {MAX_PRIME})")

    def inv(self, x: int) -> int:
        x %= self.p
        if x == 0:
            raise ZeroDivisionError("0 has no inverse")
        return int(inverse_table(self.p)[x])

    def reduce(self, m) -> Mat:
        return np.asarray(m, dtype=np.int64) % self.p


def as_mat(m, p: int) -> Mat:
    """Coerce to a 2-D reduced int64 array"""
    a = np.array(m, dtype=np.int64) % p
    if a.ndim != 2:
        raise DimensionError(f"Expected a 2-D matrix, got shape {a.shape}")
    return a


def mul(a: Mat, b: Mat, p: int) -> Mat:
    return (a @ b) % p


def rref(m, p: int) -> Tuple[Mat, int, List[int]]:
    """
    Reduced row-echelon form over F_p

    Args:
        m: Matrix (any integer array-like, 2-D)
        p: Prime modulus

    Returns:
        (R, rank, pivot columns); R has the same shape as m
    """
    a = as_mat(m, p)
    rows, cols = a.shape
    inv = inverse_table(p)
    pivots: List[int] = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            a[[r, k]] = a[[k, r]]
        a[r] = (a[r] * inv[a[r, c]]) % p
        col = a[:, c].copy()
        col[r] = 0
        hit = np.nonzero(col)[0]
        if hit.size:
            a[hit] = (a[hit] - np.outer(col[hit], a[r])) % p
        pivots.append(c)
        r += 1
    return a, r, pivots


def matrix_rank(m, p: int) -> int:
    return rref(m, p)[1]


def kernel(m, p: int) -> "Subspace":
    """Right null space {x : m x = 0}"""
    a = as_mat(m, p)
    cols = a.shape[1]
    reduced, rank, pivots = rref(a, p)
    pivot_set = set(pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    vecs = np.zeros((len(free), cols), dtype=np.int64)
    for t, f in enumerate(free):
        vecs[t, f] = 1
        for i, pc in enumerate(pivots):
            vecs[t, pc] = (-reduced[i, f]) % p
    return Subspace.span(vecs, cols, p)


def image(m, p: int) -> "Subspace":
    """Column space of m"""
    a = as_mat(m, p)
    return Subspace.span(a.T, a.shape[0], p)


def solve(m, b, p: int) -> Optional[Mat]:
    """
    Solve m X = b over F_p

    Args:
        m: r x c matrix
        b: r x k matrix, or a length-r vector

    Returns:
        One solution X (c x k, or length c), or None when inconsistent

    Raises:
        DimensionError: If row counts differ
    """
    a = as_mat(m, p)
    vector = np.ndim(b) == 1
    rhs = np.array(b, dtype=np.int64).reshape(len(b), -1) % p if vector else as_mat(b, p)
    if rhs.shape[0] != a.shape[0]:
        raise DimensionError(f"solve: m has {a.shape[0]} rows but b has {rhs.shape[0]}")
    cols = a.shape[1]
    reduced, rank, pivots = rref(np.hstack([a, rhs]), p)
    if any(pc >= cols for pc in pivots):
        return None
    x = np.zeros((cols, rhs.shape[1]), dtype=np.int64)
    for i, pc in enumerate(pivots):
        x[pc] = reduced[i, cols:]
    return x[:, 0] if vector else x


def inverse(m, p: int) -> Mat:
    """Inverse of a square matrix; DimensionError if singular"""
    a = as_mat(m, p)
    n = a.shape[0]
    if a.shape != (n, n):
        raise DimensionError(f"inverse needs a square matrix, got {a.shape}")
    reduced, rank, pivots = rref(np.hstack([a, np.eye(n, dtype=np.int64)]), p)
    if list(pivots[:n]) != list(range(n)):
        raise DimensionError("Matrix is singular")
    return reduced[:, n:].copy()


def is_invertible(m, p: int) -> bool:
    a = as_mat(m, p)
    return a.shape[0] == a.shape[1] and matrix_rank(a, p) == a.shape[0]


def mat_power(m: Mat, k: int, p: int) -> Mat:
    """m^k by repeated squaring; works on (..., n, n) stacks"""
    a = np.asarray(m, dtype=np.int64) % p
    n = a.shape[-1]
    result = np.broadcast_to(np.eye(n, dtype=np.int64), a.shape).copy()
    while k > 0:
        if k & 1:
            result = np.matmul(result, a) % p
        a = np.matmul(a, a) % p
        k >>= 1
    return result


def batch_rank(stack, p: int) -> np.ndarray:
    """Ranks of a (K, r, c) stack, eliminated in lockstep"""
    a = np.array(stack, dtype=np.int64) % p
    if a.ndim != 3:
        raise DimensionError(f"batch_rank needs a 3-D stack, got shape {a.shape}")
    count, rows, cols = a.shape
    rank = np.zeros(count, dtype=np.int64)
    if count == 0 or rows == 0 or cols == 0:
        return rank
    inv = inverse_table(p)
    row_ids = np.arange(rows)
    for c in range(cols):
        eligible = (a[:, :, c] != 0) & (row_ids[None, :] >= rank[:, None])
        has = eligible.any(axis=1)
        if not has.any():
            continue
        ks = np.nonzero(has)[0]
        prow = np.argmax(eligible[ks], axis=1)
        target = rank[ks]
        swap = a[ks, prow].copy()
        a[ks, prow] = a[ks, target]
        a[ks, target] = swap
        pivot_rows = (a[ks, target] * inv[a[ks, target, c]][:, None]) % p
        a[ks, target] = pivot_rows
        factors = a[ks, :, c].copy()
        factors[np.arange(len(ks)), target] = 0
        a[ks] = (a[ks] - factors[:, :, None] * pivot_rows[:, None, :]) % p
        rank[ks] += 1
        if (rank >= rows).all():
            break
    return rank


def batch_invertible(stack, p: int) -> np.ndarray:
    a = np.asarray(stack)
    if a.shape[0] == 0:
        return np.zeros(0, dtype=bool)
    return batch_rank(a, p) == a.shape[-1]


def all_vectors(length: int, p: int, chunk: int = 4096) -> Iterable[Mat]:
    """Every vector of F_p^length, yielded in (<=chunk, length) blocks"""
    total = p ** length
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        digits = np.zeros((idx.size, length), dtype=np.int64)
        for pos in range(length):
            digits[:, pos] = idx % p
            idx = idx // p
        yield digits


@dataclass(frozen=True, eq=False)
class Subspace:
    """A subspace of F_p^ambient_dim with canonical RREF basis (rows)"""

    ambient_dim: int
    basis: Mat
    p: int
    pivots: Tuple[int, ...] = ()

    @classmethod
    def span(cls, vectors, ambient_dim: int, p: int) -> "Subspace":
        if ambient_dim == 0:
            return cls.zero(0, p)
        arr = np.array(vectors, dtype=np.int64).reshape(-1, ambient_dim) % p
        reduced, rank, pivots = rref(arr, p)
        return cls(ambient_dim, reduced[:rank].copy(), p, tuple(pivots))

    @classmethod
    def zero(cls, ambient_dim: int, p: int) -> "Subspace":
        return cls(ambient_dim, np.zeros((0, ambient_dim), dtype=np.int64), p, ())

    @classmethod
    def full(cls, ambient_dim: int, p: int) -> "Subspace":
        return cls(ambient_dim, np.eye(ambient_dim, dtype=np.int64), p, tuple(range(ambient_dim)))

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    @property
    def key(self) -> bytes:
        return self.basis.tobytes() + bytes(str((self.ambient_dim, self.p)), "ascii")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.ambient_dim == other.ambient_dim
            and self.p == other.p
            and np.array_equal(self.basis, other.basis)
        )

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim}, p={self.p})"

    def _check(self, other: "Subspace"):
        if self.ambient_dim != other.ambient_dim or self.p != other.p:
            raise DimensionError(
                f"Ambient mismatch: F_{self.p}^{self.ambient_dim} vs F_{other.p}^{other.ambient_dim}"
            )

    def sum(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace.span(np.vstack([self.basis, other.basis]), self.ambient_dim, self.p)

    def intersection(self, other: "Subspace") -> "Subspace":
        self._check(other)
        k = self.dim
        if k == 0 or other.dim == 0:
            return Subspace.zero(self.ambient_dim, self.p)
        stacked = np.vstack([self.basis, other.basis])
        relations = kernel(stacked.T, self.p)
        return Subspace.span(mul(relations.basis[:, :k], self.basis, self.p), self.ambient_dim, self.p)

    def reduce(self, v) -> Mat:
        """Normal form of v (vector or rows) modulo the subspace"""
        arr = np.asarray(v, dtype=np.int64) % self.p
        if arr.shape[-1] != self.ambient_dim:
            raise DimensionError(f"Vector length {arr.shape[-1]} != ambient {self.ambient_dim}")
        if self.dim == 0:
            return arr
        coeffs = arr[..., list(self.pivots)]
        return (arr - coeffs @ self.basis) % self.p

    def contains(self, v) -> bool:
        return not self.reduce(v).any()

    def contains_space(self, other: "Subspace") -> bool:
        self._check(other)
        return other.dim == 0 or self.contains(other.basis)

    def coordinates(self, v) -> Mat:
        """Coordinates of v (assumed inside) in the RREF basis"""
        arr = np.asarray(v, dtype=np.int64) % self.p
        return arr[..., list(self.pivots)]

    @property
    def complement_indices(self) -> List[int]:
        piv = set(self.pivots)
        return [c for c in range(self.ambient_dim) if c not in piv]


def stack_rows(blocks: Sequence[Mat], width: int) -> Mat:
    """vstack that tolerates an empty sequence and zero width"""
    if width == 0:
        rows = sum(np.shape(b)[0] if np.ndim(b) == 2 else 0 for b in blocks)
        return np.zeros((rows, 0), dtype=np.int64)
    parts = [np.asarray(b, dtype=np.int64).reshape(-1, width) for b in blocks]
    if not parts:
        return np.zeros((0, width), dtype=np.int64)
    return np.vstack(parts)
