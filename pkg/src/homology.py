"""
Resolutions, Ext and Tor

Ext and Tor dimensions come from minimal projective resolutions through the
short exact sequences 0 -> Ω^i M -> P_{i-1} -> Ω^{i-1} M -> 0, so only Hom
and tensor dimensions are ever computed.
"""

import logging
import threading
from dataclasses import dataclass, field
from typing import List, Literal, NamedTuple, Optional

import numpy as np
from pydantic import BaseModel

from .algebra import Algebra
from .errors import PreconditionError
from .exactla import Mat, Subspace
from .modrep import (
    Iso,
    ModuleRep,
    ProjectiveCover,
    compare_modules,
    dual,
    hom_dim,
    regular_module,
    syzygy_inclusion,
)

logger = logging.getLogger(__name__)

DEFAULT_HORIZON = 20

_cache_lock = threading.Lock()


@dataclass
class Resolution:
    """Minimal projective resolution, grown on demand"""

    module: ModuleRep
    syzygies: List[ModuleRep] = field(default_factory=list)  # Ω^0 = M, Ω^1, ...
    covers: List[ProjectiveCover] = field(default_factory=list)  # covers[i]: P_i -> Ω^i
    stabilized_at: Optional[int] = None  # first i with Ω^i = 0

    def __post_init__(self):
        if not self.syzygies:
            self.syzygies.append(self.module)

    def extend(self, length: int) -> "Resolution":
        """Make Ω^0 .. Ω^length available"""
        while len(self.syzygies) <= length:
            last = self.syzygies[-1]
            if last.dim == 0:
                if self.stabilized_at is None:
                    self.stabilized_at = len(self.syzygies) - 1
                self.syzygies.append(last)
                continue
            cover, inc = syzygy_inclusion(last)
            self.covers.append(cover)
            self.syzygies.append(inc.source.with_name(f"Ω^{len(self.syzygies)}({self.module.name})"))
        return self

    def syzygy(self, i: int) -> ModuleRep:
        return self.extend(i).syzygies[i]

    def term_vertices(self, i: int) -> tuple:
        """Vertices of the indecomposable summands of P_i"""
        self.extend(i + 1)
        if i < len(self.covers):
            return self.covers[i].vertices
        return ()


def projective_resolution(M: ModuleRep, length: int = 0) -> Resolution:
    """Cached minimal resolution of M with at least `length` syzygies"""
    cache = M.parent.cache.setdefault("resolutions", {})
    key = M.key
    res = cache.get(key)
    if res is None:
        with _cache_lock:
            res = cache.get(key)
            if res is None:
                res = Resolution(M)
                cache[key] = res
    return res.extend(length)


def _hom_from_projective(vertices, N: ModuleRep) -> int:
    """dim Hom(⊕ A e_v, N) = Σ dim e_v N"""
    return sum(N.dimension_vector[v] for v in vertices)


def ext(M: ModuleRep, N: ModuleRep, i: int) -> int:
    """
    dim Ext^i(M, N) for left modules over the same algebra

    For i >= 1 this is dim Hom(Ω^i M, N) - dim Hom(P_{i-1}, N) + dim Hom(Ω^{i-1} M, N).
    """
    if i < 0:
        raise ValueError(f"Ext degree must be >= 0, got {i}")
    if M.side != "left" or N.side != "left":
        raise PreconditionError("ext expects left modules")
    if i == 0:
        return hom_dim(M, N)
    res = projective_resolution(M, i)
    top_syz = res.syzygy(i - 1)
    if top_syz.dim == 0:
        return 0
    return (
        hom_dim(res.syzygy(i), N)
        - _hom_from_projective(res.term_vertices(i - 1), N)
        + hom_dim(top_syz, N)
    )


class TensorResult(NamedTuple):
    dim: int
    representatives: Mat  # rows: vectors in X ⊗_k M (row-major kron coordinates)


def tensor_over_A(X: ModuleRep, M: ModuleRep) -> TensorResult:
    """
    X ⊗_A M for a right module X and a left module M

    Works on ⊕_v X e_v ⊗ e_v M and divides out (x·g) ⊗ m - x ⊗ (g·m) for the
    algebra generators g.
    """
    if X.parent is not M.parent:
        raise PreconditionError("tensor_over_A: modules over different algebras")
    if X.side != "right" or M.side != "left":
        raise PreconditionError("tensor_over_A expects (right module, left module)")
    p = M.p
    nx, nm = X.dim, M.dim
    if nx == 0 or nm == 0:
        return TensorResult(0, np.zeros((0, nx * nm), dtype=np.int64))
    gx, gm = X.grading, M.grading
    positions = []
    for v in range(M.parent.simple_count):
        for a in range(gx.offsets[v], gx.offsets[v + 1]):
            for b in range(gm.offsets[v], gm.offsets[v + 1]):
                positions.append(a * nm + b)
    if not positions:
        return TensorResult(0, np.zeros((0, nx * nm), dtype=np.int64))
    relations = []
    for g in M.parent.generators:
        ax = X.graded_action(g)
        am = M.graded_action(g)
        rel = (np.kron(ax.T, np.eye(nm, dtype=np.int64)) - np.kron(np.eye(nx, dtype=np.int64), am.T)) % p
        rel = rel[:, positions]
        relations.append(rel[rel.any(axis=1)])
    width = len(positions)
    rel_space = Subspace.span(np.vstack(relations) if relations else np.zeros((0, width)), width, p)
    free = rel_space.complement_indices
    reps = np.zeros((len(free), nx * nm), dtype=np.int64)
    for t, c in enumerate(free):
        pos = positions[c]
        a, b = divmod(pos, nm)
        reps[t] = np.kron(gx.basis[:, a], gm.basis[:, b]) % p
    return TensorResult(len(free), reps)


def tor(X: ModuleRep, M: ModuleRep, i: int) -> int:
    """dim Tor_i^A(X, M) for right X and left M"""
    if i < 0:
        raise ValueError(f"Tor degree must be >= 0, got {i}")
    if i == 0:
        return tensor_over_A(X, M).dim
    res = projective_resolution(M, i)
    top_syz = res.syzygy(i - 1)
    if top_syz.dim == 0:
        return 0
    from_projective = sum(X.dimension_vector[v] for v in res.term_vertices(i - 1))
    return (
        tensor_over_A(X, res.syzygy(i)).dim
        - from_projective
        + tensor_over_A(X, top_syz).dim
    )


class ProjectiveDimension(BaseModel):
    """Finite(value) or AtLeast(value)"""

    finite: bool
    value: int

    def __str__(self) -> str:
        return f"Finite({self.value})" if self.finite else f"AtLeast({self.value})"


def pd_up_to(M: ModuleRep, horizon: int = DEFAULT_HORIZON) -> ProjectiveDimension:
    """Least n <= horizon with Ω^{n+1} M = 0, else AtLeast(horizon)"""
    if horizon < 0:
        raise ValueError("horizon must be >= 0")
    res = projective_resolution(M)
    for n in range(horizon + 1):
        if res.syzygy(n + 1).dim == 0:
            return ProjectiveDimension(finite=True, value=n)
    return ProjectiveDimension(finite=False, value=horizon)


def injective_dimension_up_to(M: ModuleRep, horizon: int = DEFAULT_HORIZON) -> ProjectiveDimension:
    """id M = pd of D M as a module over the opposite algebra"""
    DM = dual(M)
    left_over_op = ModuleRep(M.parent.op, DM.action, "left", DM.name, check=False)
    return pd_up_to(left_over_op, horizon)


def is_gorenstein_up_to(A: Algebra, horizon: int = DEFAULT_HORIZON) -> Optional[int]:
    """Common bound d on both self-injective dimensions, or None within the horizon"""
    left = injective_dimension_up_to(regular_module(A), horizon)
    right = injective_dimension_up_to(regular_module(A.op), horizon)
    if left.finite and right.finite:
        return max(left.value, right.value)
    return None


class VanishingVerdict(BaseModel):
    """Outcome of an Ext^i(M, M) = 0 (i >= 1) check"""

    status: Literal["holds", "fails", "unknown"]
    certificate: Optional[Literal["finite_pd", "periodicity"]] = None
    degree: Optional[int] = None
    dimension: Optional[int] = None
    period: Optional[List[int]] = None
    horizon: int

    @property
    def holds(self) -> bool:
        return self.status == "holds"

    @property
    def fails(self) -> bool:
        return self.status == "fails"

    @property
    def unknown(self) -> bool:
        return self.status == "unknown"

    def __str__(self) -> str:
        if self.holds:
            return f"Holds({self.certificate})"
        if self.fails:
            return f"Fails({self.degree})"
        return f"UnknownBeyondHorizon({self.horizon})"


def is_self_orthogonal(M: ModuleRep, horizon: int = DEFAULT_HORIZON, seed: int = 0) -> VanishingVerdict:
    """
    Ext^i(M, M) = 0 for all i >= 1, certified or refuted within the horizon

    Holds needs either a finite projective dimension or a repeat Ω^j ≅ Ω^k
    (j < k) with degrees 1..k all vanishing.
    """
    if horizon < 1:
        raise ValueError("horizon must be >= 1")
    res = projective_resolution(M)
    for i in range(1, horizon + 1):
        if res.syzygy(i).dim == 0:
            return VanishingVerdict(status="holds", certificate="finite_pd", degree=i - 1, horizon=horizon)
        e = ext(M, M, i)
        if e:
            return VanishingVerdict(status="fails", degree=i, dimension=e, horizon=horizon)
        current = res.syzygy(i)
        for j in range(i):
            earlier = res.syzygy(j)
            if earlier.dim != current.dim:
                continue
            if compare_modules(earlier, current, seed=seed) is Iso.ISO:
                logger.debug(f"Ω^{j} ≅ Ω^{i} for {M!r}")
                return VanishingVerdict(
                    status="holds", certificate="periodicity", degree=i, period=[j, i], horizon=horizon
                )
    return VanishingVerdict(status="unknown", horizon=horizon)


