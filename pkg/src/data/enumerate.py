"""
Brute-force module enumeration

The oracle behind every hand-derived count: all arrow-matrix tuples of total
dimension <= D that satisfy the relations, reduced to indecomposables up to
isomorphism. It builds modules only from quiver representations and never
touches the projective/injective constructors, so agreement with those is a
real cross-check.
"""

import itertools
import logging
import math
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from tqdm import tqdm

from ..algebra import Algebra
from ..errors import FeasibilityError, PreconditionError, UndecidedError
from ..exactla import all_vectors
from ..modrep import (
    Iso,
    ModuleRep,
    compare_modules,
    decompose,
    direct_sum,
    hom_dim,
    module_from_representation,
    tau,
    zero_module,
)

logger = logging.getLogger(__name__)

BRUTE_FORCE_LIMIT_LOG2 = 22


def dimension_vectors(vertex_count: int, max_dim: int) -> List[Tuple[int, ...]]:
    """Nonzero dimension vectors with total <= max_dim, ordered by total then lexicographically"""
    out = [
        dv
        for dv in itertools.product(range(max_dim + 1), repeat=vertex_count)
        if 0 < sum(dv) <= max_dim
    ]
    return sorted(out, key=lambda dv: (sum(dv), dv))


def _entry_count(A: Algebra, dims: Dict[str, int]) -> int:
    return sum(dims[a.target] * dims[a.source] for a in A.quiver.arrows)


def estimate_cost(A: Algebra, max_dim: int) -> Dict[str, float]:
    """Number of candidate representations (log2) and the count of dimension vectors"""
    if A.quiver is None:
        raise PreconditionError(f"{A.name} is not given by a quiver")
    total = 0
    vectors = dimension_vectors(len(A.vertices), max_dim)
    for dv in vectors:
        dims = dict(zip(A.vertices, dv))
        total += A.p ** _entry_count(A, dims)
    return {
        "algebra": A.name,
        "max_dim": max_dim,
        "dimension_vectors": len(vectors),
        "candidates": total,
        "log2_candidates": round(math.log2(total), 2) if total else 0.0,
    }


def _satisfying(A: Algebra, dims: Dict[str, int], block: np.ndarray) -> np.ndarray:
    """Mask of rows of `block` (flattened arrow matrices) that kill every relation"""
    p = A.p
    mats: Dict[str, np.ndarray] = {}
    offset = 0
    for a in A.quiver.arrows:
        shape = (dims[a.target], dims[a.source])
        size = shape[0] * shape[1]
        mats[a.name] = block[:, offset:offset + size].reshape(len(block), *shape)
        offset += size
    keep = np.ones(len(block), dtype=bool)
    for rel in A.quiver.relations:
        first = rel.terms[0][1]
        total = np.zeros((len(block), dims[first.target], dims[first.source]), dtype=np.int64)
        for coeff, path in rel.terms:
            m = np.broadcast_to(np.eye(dims[path.source], dtype=np.int64), (len(block), dims[path.source], dims[path.source]))
            for name in path.arrows:
                m = np.matmul(mats[name], m) % p
            total = (total + coeff * m) % p
        keep &= ~total.reshape(len(block), -1).any(axis=1)
    return keep


def _unpack(A: Algebra, dims: Dict[str, int], row: np.ndarray) -> Dict[str, np.ndarray]:
    maps, offset = {}, 0
    for a in A.quiver.arrows:
        shape = (dims[a.target], dims[a.source])
        size = shape[0] * shape[1]
        maps[a.name] = row[offset:offset + size].reshape(shape)
        offset += size
    return maps


def enumerate_modules(
    A: Algebra,
    max_dim: int,
    limit_log2: int = BRUTE_FORCE_LIMIT_LOG2,
    seed: int = 0,
    progress: bool = False,
) -> List[ModuleRep]:
    """
    All indecomposable left A-modules of dimension <= max_dim, up to isomorphism

    Args:
        A: Quiver-presented algebra
        max_dim: Total dimension cap D
        limit_log2: Refuse when the number of candidate representations exceeds 2^limit_log2
        seed: Seed for isomorphism and decomposition search
        progress: Show a tqdm bar over dimension vectors

    Returns:
        Indecomposables ordered by dimension vector, named "M<k>"

    Raises:
        FeasibilityError: With the cost estimate, when the guard trips
        UndecidedError: If an isomorphism or decomposition test stays undecided
    """
    estimate = estimate_cost(A, max_dim)
    if estimate["log2_candidates"] > limit_log2:
        raise FeasibilityError(
            f"Enumerating {A.name} up to dimension {max_dim} needs ~2^{estimate['log2_candidates']} "
            f"candidates (limit 2^{limit_log2})",
            estimate=estimate,
        )
    logger.info(f"Enumerating {A.name} modules up to dimension {max_dim} ({estimate['candidates']} candidates)")

    classes: Dict[tuple, List[ModuleRep]] = {}
    vectors = dimension_vectors(len(A.vertices), max_dim)
    for dv in tqdm(vectors, desc=f"enumerate {A.name}", disable=not progress, leave=False):
        dims = dict(zip(A.vertices, dv))
        entries = _entry_count(A, dims)
        for block in all_vectors(entries, A.p):
            for row in block[_satisfying(A, dims, block)]:
                M = module_from_representation(A, dims, _unpack(A, dims, row))
                bucket = classes.setdefault(M.invariant, [])
                if not any(_same(M, N, seed) for N in bucket):
                    bucket.append(M)

    pool = []
    for bucket in classes.values():
        for M in bucket:
            dec = decompose(M, seed=seed)
            if not dec.certain:
                raise UndecidedError(f"Indecomposability of {M!r} is undecided")
            if dec.total_multiplicity == 1:
                pool.append(M)
    pool.sort(key=lambda M: (M.dim, M.dimension_vector))
    named = [M.with_name(f"M{k}") for k, M in enumerate(pool)]
    logger.info(f"Found {len(named)} indecomposables over {A.name} up to dimension {max_dim}")
    return named


def _same(M: ModuleRep, N: ModuleRep, seed: int) -> bool:
    outcome = compare_modules(M, N, seed=seed)
    if outcome is Iso.UNKNOWN:
        raise UndecidedError(f"Could not decide whether {M!r} ≅ {N!r}")
    return outcome is Iso.ISO


# --- τ-tilting enumeration -------------------------------------------------


def compatibility(pool: Sequence[ModuleRep]) -> np.ndarray:
    """
    ok[i, j] = Hom(X_i, τX_j) = 0

    A direct sum of pool members is τ-rigid exactly when every ordered pair
    (including i = j) is compatible.
    """
    taus = [tau(X) for X in pool]
    n = len(pool)
    ok = np.zeros((n, n), dtype=bool)
    for i, j in itertools.product(range(n), repeat=2):
        ok[i, j] = hom_dim(pool[i], taus[j]) == 0
    return ok


def _rigid_sets(ok: np.ndarray, size: Optional[int]) -> List[Tuple[int, ...]]:
    """Index sets that are pairwise compatible; of exactly `size` members when given"""
    n = len(ok)
    rigid = [i for i in range(n) if ok[i, i]]
    found: List[Tuple[int, ...]] = []

    def extend(chosen: Tuple[int, ...], start: int):
        if size is None or len(chosen) == size:
            found.append(chosen)
            if size is not None:
                return
        for idx in range(start, len(rigid)):
            i = rigid[idx]
            if all(ok[i, j] and ok[j, i] for j in chosen):
                extend(chosen + (i,), idx + 1)

    extend((), 0)
    return found


def _assemble(A: Algebra, pool: Sequence[ModuleRep], chosen: Tuple[int, ...]) -> ModuleRep:
    if not chosen:
        return zero_module(A).with_name("0")
    name = "⊕".join(pool[i].name for i in chosen)
    return direct_sum(*(pool[i] for i in chosen), name=name)


def enumerate_tau_tilting(A: Algebra, pool: Sequence[ModuleRep]) -> List[ModuleRep]:
    """Basic τ-tilting modules: τ-rigid direct sums of |A| distinct pool members"""
    ok = compatibility(pool)
    sets = _rigid_sets(ok, A.simple_count)
    logger.info(f"{len(sets)} basic τ-tilting modules over {A.name}")
    return [_assemble(A, pool, s) for s in sets]


def support_rank(A: Algebra, pool: Sequence[ModuleRep], chosen: Sequence[int]) -> int:
    """|A / Ann(T)| for T the sum of the chosen pool members, via the vertices T is supported on"""
    support = set()
    for i in chosen:
        support.update(v for v, d in enumerate(pool[i].dimension_vector) if d)
    return len(support)


def enumerate_support_tau_tilting(A: Algebra, pool: Sequence[ModuleRep]) -> List[ModuleRep]:
    """
    Basic support τ-tilting modules (the zero module included)

    A τ-rigid T is support τ-tilting when |T| equals the number of simple
    modules of A / ⟨e⟩, e the idempotent of the vertices outside supp T.
    """
    ok = compatibility(pool)
    found = []
    for chosen in _rigid_sets(ok, None):
        if len(chosen) == support_rank(A, pool, chosen):
            found.append(_assemble(A, pool, chosen))
    logger.info(f"{len(found)} basic support τ-tilting modules over {A.name}")
    return found