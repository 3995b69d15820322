"""
Modules as action-matrix representations

A ModuleRep carries one d x d matrix per algebra basis element. Elements act
on column vectors. A right A-module stores rho(a) with m·a = rho(a) m, which
makes it a left module over A^op with the same matrices; every computation
below runs over that "acting" algebra.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from .algebra import Algebra, projective_space
from .errors import (
    DimensionError,
    PreconditionError,
    PresentationError,
    UndecidedError,
    UnsupportedAlgebraError,
)
from .exactla import (
    Mat,
    Subspace,
    all_vectors,
    batch_invertible,
    batch_rank,
    inverse,
    kernel,
    mat_power,
    matrix_rank,
    mul,
    stack_rows,
)

logger = logging.getLogger(__name__)

ISO_EXHAUSTIVE_LOG2 = 16
ISO_SAMPLES = 64
DECOMPOSE_EXHAUSTIVE_DIM = 12
DECOMPOSE_SAMPLES = 64


def set_search_limits(
    iso_exhaustive_log2: int, iso_samples: int, decompose_exhaustive_dim: int, decompose_samples: int
) -> None:
    """Process-wide budgets for isomorphism and decomposition search (from ModrepConfig)"""
    global ISO_EXHAUSTIVE_LOG2, ISO_SAMPLES, DECOMPOSE_EXHAUSTIVE_DIM, DECOMPOSE_SAMPLES
    ISO_EXHAUSTIVE_LOG2 = iso_exhaustive_log2
    ISO_SAMPLES = iso_samples
    DECOMPOSE_EXHAUSTIVE_DIM = decompose_exhaustive_dim
    DECOMPOSE_SAMPLES = decompose_samples


class Grading(NamedTuple):
    basis: Mat  # columns: homogeneous basis vectors, grouped by vertex
    basis_inv: Mat
    dims: Tuple[int, ...]
    offsets: Tuple[int, ...]


@dataclass(frozen=True, eq=False)
class ModuleRep:
    """Finite-dimensional module over parent, on the given side"""

    parent: Algebra
    action: Mat
    side: str = "left"
    name: str = ""
    check: bool = field(default=True, repr=False)

    def __post_init__(self):
        if self.side not in ("left", "right"):
            raise ValueError(f"side must be 'left' or 'right', got {self.side!r}")
        act = np.asarray(self.action, dtype=np.int64) % self.parent.p
        if act.ndim != 3 or act.shape[0] != self.parent.dim or act.shape[1] != act.shape[2]:
            raise DimensionError(
                f"Action of {self.name or 'module'} has shape {act.shape}; expected "
                f"({self.parent.dim}, n, n)"
            )
        object.__setattr__(self, "action", act)
        if self.check:
            _validate_action(self)

    @property
    def p(self) -> int:
        return self.parent.p

    @property
    def dim(self) -> int:
        return self.action.shape[1]

    @property
    def acting(self) -> Algebra:
        """The algebra this module is a left module over"""
        return self.parent if self.side == "left" else self.parent.op

    def rho(self, x) -> Mat:
        """Action matrix of an algebra element (coordinate vector)"""
        return np.tensordot(np.asarray(x, dtype=np.int64), self.action, axes=1) % self.p

    @cached_property
    def grading(self) -> Grading:
        columns, dims = [], []
        for e in self.parent.idempotents:
            img = Subspace.span(self.rho(e).T, self.dim, self.p)
            columns.append(img.basis)
            dims.append(img.dim)
        basis = stack_rows(columns, self.dim).T.copy()
        if basis.shape[1] != self.dim:
            raise PresentationError(f"Idempotent images of {self.name or 'module'} do not span")
        offsets = tuple(int(x) for x in np.concatenate([[0], np.cumsum(dims)]))
        return Grading(basis, inverse(basis, self.p), tuple(dims), offsets)

    @property
    def dimension_vector(self) -> Tuple[int, ...]:
        return self.grading.dims

    def graded_action(self, x) -> Mat:
        g = self.grading
        return mul(mul(g.basis_inv, self.rho(x), self.p), g.basis, self.p)

    @cached_property
    def key(self) -> bytes:
        """Exact identity of the matrices (not an isomorphism invariant)"""
        return self.side.encode() + str(self.action.shape).encode() + self.action.tobytes()

    @cached_property
    def invariant(self) -> Tuple:
        """Isomorphism invariant: side, dimension vector, ranks of rho(b)"""
        ranks = tuple(int(r) for r in batch_rank(self.action, self.p)) if self.dim else ()
        return (self.side, self.dimension_vector, ranks)

    @cached_property
    def endomorphisms(self) -> "HomSpace":
        return hom_space(self, self)

    def with_name(self, name: str) -> "ModuleRep":
        m = ModuleRep(self.parent, self.action, self.side, name, check=False)
        m.__dict__.update({k: v for k, v in self.__dict__.items() if k in ("grading", "invariant")})
        return m

    def __repr__(self) -> str:
        label = self.name or "M"
        return f"ModuleRep({label}, {self.side}, dim={self.dim}, over {self.parent.name})"


def _validate_action(M: ModuleRep):
    A, act, p = M.acting, M.action, M.p
    n = M.dim
    if n == 0:
        return
    if not np.array_equal(M.rho(A.one), np.eye(n, dtype=np.int64)):
        raise PresentationError(f"{M.name or 'module'}: the unit does not act as the identity")
    lhs = np.einsum("iab,jbc->ijac", act, act) % p
    rhs = np.einsum("ijk,kac->ijac", A.mult, act) % p
    bad = np.argwhere((lhs != rhs).reshape(A.dim, A.dim, -1).any(axis=2))
    if bad.size:
        i, j = (int(x) for x in bad[0])
        pair = (A.basis_labels[i], A.basis_labels[j])
        raise PresentationError(
            f"{M.name or 'module'}: action violates the product {pair[0]}·{pair[1]}",
            basis_pair=pair,
        )


@dataclass(frozen=True, eq=False)
class ModuleMorphism:
    source: ModuleRep
    target: ModuleRep
    matrix: Mat

    @property
    def rank(self) -> int:
        return matrix_rank(self.matrix, self.source.p) if self.matrix.size else 0

    def is_zero(self) -> bool:
        return not np.asarray(self.matrix).any()

    def is_injective(self) -> bool:
        return self.rank == self.source.dim

    def is_surjective(self) -> bool:
        return self.rank == self.target.dim

    def compose(self, other: "ModuleMorphism") -> "ModuleMorphism":
        """self ∘ other"""
        return ModuleMorphism(other.source, self.target, mul(self.matrix, other.matrix, self.source.p))

    def is_homomorphism(self) -> bool:
        lhs = np.matmul(self.matrix, self.source.action) % self.source.p
        rhs = np.matmul(self.target.action, self.matrix) % self.source.p
        return np.array_equal(lhs, rhs)


@dataclass(frozen=True, eq=False)
class HomSpace:
    source: ModuleRep
    target: ModuleRep
    basis: Mat  # (h, dim target, dim source)

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def element(self, coeffs) -> Mat:
        return np.tensordot(np.asarray(coeffs, dtype=np.int64), self.basis, axes=1) % self.source.p

    def morphisms(self) -> List[ModuleMorphism]:
        return [ModuleMorphism(self.source, self.target, f) for f in self.basis]


def _check_compatible(M: ModuleRep, N: ModuleRep):
    if M.parent is not N.parent or M.side != N.side:
        raise PreconditionError(
            f"Modules live over different algebras or sides: {M!r} vs {N!r}"
        )


def hom_space(M: ModuleRep, N: ModuleRep) -> HomSpace:
    """
    Basis of Hom(M, N)

    Unknowns are the vertex-diagonal blocks in graded coordinates; each algebra
    generator cuts the solution space down in turn.
    """
    _check_compatible(M, N)
    p = M.p
    nm, nn = M.dim, N.dim
    if nm == 0 or nn == 0:
        return HomSpace(M, N, np.zeros((0, nn, nm), dtype=np.int64))
    gm, gn = M.grading, N.grading
    rows, cols = [], []
    for v in range(M.parent.simple_count):
        for r in range(gn.offsets[v], gn.offsets[v + 1]):
            for c in range(gm.offsets[v], gm.offsets[v + 1]):
                rows.append(r)
                cols.append(c)
    nv = len(rows)
    if nv == 0:
        return HomSpace(M, N, np.zeros((0, nn, nm), dtype=np.int64))
    rv, cv = np.array(rows), np.array(cols)
    idx = np.arange(nv)
    solutions = np.eye(nv, dtype=np.int64)
    for g in M.acting.generators:
        a = M.graded_action(g)
        b = N.graded_action(g)
        # X A - B X for X supported on the variable positions
        constraint = np.zeros((nn, nm, nv), dtype=np.int64)
        constraint[rv, :, idx] = a[cv, :]
        constraint[:, cv, idx] -= b[:, rv]
        reduced = mul(constraint.reshape(nn * nm, nv) % p, solutions.T, p)
        reduced = reduced[reduced.any(axis=1)]
        if reduced.shape[0] == 0:
            continue
        solutions = mul(kernel(reduced, p).basis, solutions, p)
        if solutions.shape[0] == 0:
            break
    h = solutions.shape[0]
    graded = np.zeros((h, nn, nm), dtype=np.int64)
    graded[:, rv, cv] = solutions
    basis = np.matmul(np.matmul(gn.basis, graded) % p, gm.basis_inv) % p
    return HomSpace(M, N, basis)


def hom_dim(M: ModuleRep, N: ModuleRep) -> int:
    return hom_space(M, N).dim


class Iso(Enum):
    """Outcome of an isomorphism test"""
    ISO = "iso"
    NOT_ISO = "not_iso"
    UNKNOWN = "unknown"


def compare_modules(
    M: ModuleRep,
    N: ModuleRep,
    seed: int = 0,
    exhaustive_log2: Optional[int] = None,
    samples: Optional[int] = None,
) -> Iso:
    """
    Decide M ≅ N, or report UNKNOWN when the budget runs out

    Args:
        M, N: Modules over the same algebra and side
        seed: Seed for the random invertibility trials
        exhaustive_log2: Enumerate Hom(M, N) when p^dim Hom <= 2^exhaustive_log2
        samples: Number of random trials before enumeration
    """
    exhaustive_log2 = ISO_EXHAUSTIVE_LOG2 if exhaustive_log2 is None else exhaustive_log2
    samples = ISO_SAMPLES if samples is None else samples
    _check_compatible(M, N)
    if M.dim != N.dim or M.invariant != N.invariant:
        return Iso.NOT_ISO
    if M.dim == 0:
        return Iso.ISO
    homs = hom_space(M, N)
    h = homs.dim
    if h == 0 or h != M.endomorphisms.dim or h != N.endomorphisms.dim:
        return Iso.NOT_ISO
    p = M.p
    rng = np.random.default_rng(seed)
    if samples:
        coeffs = rng.integers(0, p, size=(samples, h), dtype=np.int64)
        if batch_invertible(np.tensordot(coeffs, homs.basis, axes=1) % p, p).any():
            return Iso.ISO
    if h * np.log2(p) <= exhaustive_log2:
        for block in all_vectors(h, p):
            if batch_invertible(np.tensordot(block, homs.basis, axes=1) % p, p).any():
                return Iso.ISO
        return Iso.NOT_ISO
    logger.warning(f"Isomorphism test undecided: dim Hom = {h} over F_{p}")
    return Iso.UNKNOWN


def is_isomorphic(M: ModuleRep, N: ModuleRep, seed: int = 0) -> bool:
    """
    Raises:
        UndecidedError: If the search budget is exhausted
    """
    outcome = compare_modules(M, N, seed=seed)
    if outcome is Iso.UNKNOWN:
        raise UndecidedError(f"Could not decide whether {M!r} ≅ {N!r}")
    return outcome is Iso.ISO


# --- constructions ---------------------------------------------------------


def zero_module(A: Algebra, side: str = "left") -> ModuleRep:
    return ModuleRep(A, np.zeros((A.dim, 0, 0), dtype=np.int64), side, "0")


def direct_sum(*modules: ModuleRep, name: str = "") -> ModuleRep:
    if not modules:
        raise ValueError("direct_sum needs at least one module")
    first = modules[0]
    for other in modules[1:]:
        _check_compatible(first, other)
    total = sum(m.dim for m in modules)
    act = np.zeros((first.parent.dim, total, total), dtype=np.int64)
    offset = 0
    for m in modules:
        act[:, offset:offset + m.dim, offset:offset + m.dim] = m.action
        offset += m.dim
    label = name or "⊕".join(m.name or "?" for m in modules)
    return ModuleRep(first.parent, act, first.side, label, check=False)


def power(M: ModuleRep, k: int) -> ModuleRep:
    if k == 0:
        return zero_module(M.parent, M.side)
    return direct_sum(*([M] * k), name=f"{M.name}^{k}" if k > 1 else M.name)


def submodule_inclusion(M: ModuleRep, W: Subspace, name: str = "") -> ModuleMorphism:
    """
    Inclusion of the submodule carried by W

    Raises:
        PreconditionError: If W is not stable under the action
    """
    basis = W.basis
    images = np.matmul(M.action, basis.T) % M.p  # (d, n, k)
    if W.dim and not W.contains(images.transpose(0, 2, 1).reshape(-1, M.dim)):
        raise PreconditionError("Subspace is not a submodule")
    restricted = W.coordinates(images.transpose(0, 2, 1)).transpose(0, 2, 1)
    sub = ModuleRep(M.parent, restricted, M.side, name, check=False)
    return ModuleMorphism(sub, M, basis.T.copy())


def submodule(M: ModuleRep, W: Subspace, name: str = "") -> ModuleRep:
    return submodule_inclusion(M, W, name).source


def quotient_projection(M: ModuleRep, W: Subspace, name: str = "") -> ModuleMorphism:
    """Projection M -> M/W onto the non-pivot coordinates of W"""
    comp = W.complement_indices
    eye = np.eye(M.dim, dtype=np.int64)
    proj = W.reduce(eye)[:, comp].T.copy()  # (n - k, n)
    act = (np.matmul(proj, M.action) % M.p)[:, :, comp]
    quo = ModuleRep(M.parent, act, M.side, name, check=False)
    return ModuleMorphism(M, quo, proj)


def quotient_module(M: ModuleRep, W: Subspace, name: str = "") -> ModuleRep:
    return quotient_projection(M, W, name).target


def generated_subspace(M: ModuleRep, vectors) -> Subspace:
    vecs = np.asarray(vectors, dtype=np.int64).reshape(-1, M.dim)
    moved = np.einsum("bij,vj->vbi", M.action, vecs) % M.p
    return Subspace.span(moved.reshape(-1, M.dim), M.dim, M.p)


def generated_submodule(M: ModuleRep, vectors) -> ModuleRep:
    return submodule(M, generated_subspace(M, vectors))


def kernel_of(f: ModuleMorphism) -> ModuleMorphism:
    """Inclusion of ker f"""
    return submodule_inclusion(f.source, kernel(f.matrix, f.source.p), name="ker")


def image_of(f: ModuleMorphism) -> Subspace:
    return Subspace.span(f.matrix.T, f.target.dim, f.source.p)


def cokernel_of(f: ModuleMorphism) -> ModuleMorphism:
    """Projection onto coker f"""
    return quotient_projection(f.target, image_of(f), name="coker")


def module_from_representation(
    A: Algebra, dims: Dict[str, int], maps: Dict[str, Mat], name: str = ""
) -> ModuleRep:
    """
    Build a left module from a quiver representation

    Args:
        A: Quiver-presented algebra (A.paths and A.quiver set)
        dims: Vertex label -> dimension (missing vertices get 0)
        maps: Arrow name -> matrix of shape (dims[target], dims[source])

    Raises:
        PresentationError: If maps have wrong shapes or violate the relations
    """
    if A.paths is None or A.quiver is None:
        raise PreconditionError(f"{A.name} is not given by a quiver")
    for v in dims:
        if v not in A.vertices:
            raise PresentationError(f"Unknown vertex '{v}' in dimension vector")
    sizes = [int(dims.get(v, 0)) for v in A.vertices]
    offsets = np.concatenate([[0], np.cumsum(sizes)]).astype(int)
    block = {v: (offsets[i], offsets[i + 1]) for i, v in enumerate(A.vertices)}
    arrow_maps: Dict[str, Mat] = {}
    for arrow in A.quiver.arrows:
        shape = (dims.get(arrow.target, 0), dims.get(arrow.source, 0))
        raw = maps.get(arrow.name)
        mat = np.zeros(shape, dtype=np.int64) if raw is None else np.asarray(raw, dtype=np.int64)
        if mat.size == 0 and shape[0] * shape[1] == 0:
            mat = np.zeros(shape, dtype=np.int64)
        if mat.shape != shape:
            raise DimensionError(
                f"Matrix for arrow {arrow.name} has shape {mat.shape}, expected {shape}"
            )
        arrow_maps[arrow.name] = mat % A.p
    for key in maps:
        if key not in arrow_maps:
            raise PresentationError(f"Unknown arrow '{key}'")
    n = int(offsets[-1])
    act = np.zeros((A.dim, n, n), dtype=np.int64)
    for k, path in enumerate(A.paths):
        s0, s1 = block[path.source]
        t0, t1 = block[path.target]
        mat = np.eye(s1 - s0, dtype=np.int64)
        for a in path.arrows:
            mat = mul(arrow_maps[a], mat, A.p)
        act[k, t0:t1, s0:s1] = mat
    return ModuleRep(A, act, "left", name)


# --- standard modules ------------------------------------------------------


def regular_module(A: Algebra, side: str = "left") -> ModuleRep:
    """A acting on itself by left (or right) multiplication"""
    key = ("regular", side)
    if key not in A.cache:
        act = A.mult.transpose(0, 2, 1) if side == "left" else A.mult.transpose(1, 2, 0)
        A.cache[key] = ModuleRep(A, act.copy(), side, "A" if side == "left" else "A_A", check=False)
    return A.cache[key]


def indecomposable_projective(A: Algebra, v: int) -> ModuleRep:
    key = ("P", v)
    if key not in A.cache:
        sub = submodule(regular_module(A), projective_space(A, v), name=f"P{A.vertices[v]}")
        A.cache[key] = sub
    return A.cache[key]


def right_projective(A: Algebra, v: int) -> ModuleRep:
    """e_v A as a right A-module"""
    P = indecomposable_projective(A.op, v)
    return ModuleRep(A, P.action, "right", f"e{A.vertices[v]}A", check=False)


def dual(M: ModuleRep) -> ModuleRep:
    """Vector-space dual; swaps sides"""
    side = "right" if M.side == "left" else "left"
    label = M.name[2:-1] if M.name.startswith("D(") and M.name.endswith(")") else f"D({M.name})"
    return ModuleRep(M.parent, M.action.transpose(0, 2, 1).copy(), side, label, check=False)


def indecomposable_injective(A: Algebra, v: int) -> ModuleRep:
    key = ("I", v)
    if key not in A.cache:
        A.cache[key] = dual(right_projective(A, v)).with_name(f"I{A.vertices[v]}")
    return A.cache[key]


def simple_module(A: Algebra, v: int) -> ModuleRep:
    key = ("S", v)
    if key not in A.cache:
        A.cache[key] = top(indecomposable_projective(A, v)).with_name(f"S{A.vertices[v]}")
    return A.cache[key]


class StandardModules(NamedTuple):
    simples: List[ModuleRep]
    projectives: List[ModuleRep]
    injectives: List[ModuleRep]


def standard_modules(A: Algebra) -> StandardModules:
    n = A.simple_count
    return StandardModules(
        [simple_module(A, v) for v in range(n)],
        [indecomposable_projective(A, v) for v in range(n)],
        [indecomposable_injective(A, v) for v in range(n)],
    )


# --- radical, covers, syzygies --------------------------------------------


def _radical_basis(M: ModuleRep) -> Mat:
    rad = M.parent.radical
    if rad is None:
        raise UnsupportedAlgebraError(f"No radical available for {M.parent.name}")
    return rad.basis


def radical_space(M: ModuleRep) -> Subspace:
    rad = _radical_basis(M)
    if M.dim == 0 or rad.shape[0] == 0:
        return Subspace.zero(M.dim, M.p)
    mats = np.tensordot(rad, M.action, axes=1) % M.p  # (r, n, n)
    return Subspace.span(mats.transpose(0, 2, 1).reshape(-1, M.dim), M.dim, M.p)


def radical_of_module(M: ModuleRep) -> ModuleRep:
    return submodule(M, radical_space(M), name=f"rad({M.name})")


def top(M: ModuleRep) -> ModuleRep:
    return quotient_module(M, radical_space(M), name=f"top({M.name})")


def socle_space(M: ModuleRep) -> Subspace:
    rad = _radical_basis(M)
    if M.dim == 0 or rad.shape[0] == 0:
        return Subspace.full(M.dim, M.p)
    mats = np.tensordot(rad, M.action, axes=1) % M.p
    return kernel(mats.reshape(-1, M.dim), M.p)


def socle(M: ModuleRep) -> ModuleRep:
    return submodule(M, socle_space(M), name=f"soc({M.name})")


@dataclass(frozen=True, eq=False)
class ProjectiveCover:
    morphism: ModuleMorphism  # P -> M, surjective
    vertices: Tuple[int, ...]  # vertex of each indecomposable summand of P

    @property
    def projective(self) -> ModuleRep:
        return self.morphism.source


def _as_left(M: ModuleRep) -> ModuleRep:
    if M.side == "left":
        return M
    return ModuleRep(M.parent.op, M.action, "left", M.name, check=False)


def _back_to(M: ModuleRep, like: ModuleRep) -> ModuleRep:
    if like.side == "left":
        return M
    return ModuleRep(like.parent, M.action, "right", M.name, check=False)


def projective_cover(M: ModuleRep) -> ProjectiveCover:
    """
    Minimal projective cover built from a homogeneous basis of top(M)

    Raises:
        UnsupportedAlgebraError: If the algebra has no radical available
    """
    L = _as_left(M)
    A = L.parent
    rad = radical_space(L)
    chosen: List[Tuple[int, Mat]] = []
    span = rad
    for v in range(A.simple_count):
        if span.dim == L.dim:
            break
        candidates = Subspace.span(L.rho(A.idempotents[v]).T, L.dim, L.p)
        for vec in candidates.basis:
            if not span.contains(vec):
                chosen.append((v, vec))
                span = Subspace.span(np.vstack([span.basis, vec]), L.dim, L.p)
    summands = [indecomposable_projective(A, v) for v, _ in chosen]
    if summands:
        P = direct_sum(*summands, name="⊕".join(s.name for s in summands))
    else:
        P = zero_module(A)
    blocks = []
    for (v, vec), proj in zip(chosen, summands):
        sub_basis = projective_space(A, v).basis  # rows: elements of A e_v
        mats = np.tensordot(sub_basis, L.action, axes=1) % L.p
        blocks.append((mats @ vec % L.p).T)
    matrix = np.hstack(blocks) if blocks else np.zeros((L.dim, 0), dtype=np.int64)
    P_out = _back_to(P, M)
    return ProjectiveCover(ModuleMorphism(P_out, M, matrix % M.p), tuple(v for v, _ in chosen))


def syzygy_inclusion(M: ModuleRep) -> Tuple[ProjectiveCover, ModuleMorphism]:
    cover = projective_cover(M)
    inc = kernel_of(cover.morphism)
    return cover, inc


def syzygy(M: ModuleRep) -> ModuleRep:
    """Kernel of the minimal projective cover"""
    return syzygy_inclusion(M)[1].source.with_name(f"Ω({M.name})")


class Presentation(NamedTuple):
    cover0: ProjectiveCover
    cover1: ProjectiveCover
    differential: Mat  # P1 -> P0


def min_proj_presentation(M: ModuleRep) -> Presentation:
    cover0, inc = syzygy_inclusion(M)
    cover1 = projective_cover(inc.source)
    d1 = mul(inc.matrix, cover1.morphism.matrix, M.p)
    return Presentation(cover0, cover1, d1)


def is_projective(M: ModuleRep) -> bool:
    return projective_cover(M).projective.dim == M.dim


def is_injective(M: ModuleRep) -> bool:
    return is_projective(dual(M))


def _projective_dual(P: ModuleRep):
    """Hom_A(P, A) as a right module: (basis matrices, Subspace of flattened maps, module)"""
    A = P.parent
    reg = regular_module(A)
    homs = hom_space(P, reg)
    flat = Subspace.span(homs.basis.reshape(homs.dim, -1), A.dim * P.dim, A.p)
    basis = flat.basis.reshape(-1, A.dim, P.dim)
    h = basis.shape[0]
    act = np.zeros((A.dim, h, h), dtype=np.int64)
    for i in range(A.dim):
        right = A.right_mult(A.unit(i))
        moved = np.matmul(right, basis) % A.p
        act[i] = flat.coordinates(moved.reshape(h, -1)).T
    module = ModuleRep(A, act, "right", f"Hom({P.name},A)", check=False)
    return basis, flat, module


def transpose(M: ModuleRep) -> ModuleRep:
    """Auslander–Bridger transpose Tr M (a right module)"""
    if M.side != "left":
        raise PreconditionError("transpose expects a left module")
    if M.dim == 0:
        return zero_module(M.parent, "right")
    pres = min_proj_presentation(M)
    P0, P1 = pres.cover0.projective, pres.cover1.projective
    if P1.dim == 0:
        return zero_module(M.parent, "right")
    _, flat1, dual1 = _projective_dual(P1)
    basis0, _, _ = _projective_dual(P0)
    images = np.matmul(basis0, pres.differential) % M.p  # F -> F ∘ d1
    image_coords = flat1.coordinates(images.reshape(images.shape[0], -1))
    W = Subspace.span(image_coords, dual1.dim, M.p)
    return quotient_module(dual1, W, name=f"Tr({M.name})")


def tau(M: ModuleRep) -> ModuleRep:
    """Auslander–Reiten translate D Tr M"""
    key = ("tau", M.key)
    cache = M.parent.cache
    if key not in cache:
        cache[key] = dual(transpose(M)).with_name(f"τ({M.name})")
    return cache[key]


# --- decomposition ---------------------------------------------------------


@dataclass
class Decomposition:
    """Indecomposable summands up to isomorphism, with multiplicities"""

    summands: List[Tuple[ModuleRep, int]]
    certain: bool = True

    @property
    def iso_class_count(self) -> int:
        return len(self.summands)

    @property
    def total_multiplicity(self) -> int:
        return sum(m for _, m in self.summands)

    def indecomposables(self) -> List[ModuleRep]:
        return [module for module, _ in self.summands]

    def module(self, A: Optional[Algebra] = None, side: str = "left") -> ModuleRep:
        parts = [m for m, k in self.summands for _ in range(k)]
        if not parts:
            if A is None:
                raise ValueError("Empty decomposition needs the algebra to build 0")
            return zero_module(A, side)
        return direct_sum(*parts)


def _cheaply_indecomposable(M: ModuleRep) -> bool:
    if M.dim == 1:
        return True
    if M.endomorphisms.dim == 1:
        return True
    if M.parent.radical is not None:
        if M.dim - radical_space(M).dim == 1:
            return True
        if socle_space(M).dim == 1:
            return True
    return False


def _fitting_split(M: ModuleRep, phis: Mat) -> Optional[Tuple[Subspace, Subspace]]:
    """First sampled endomorphism whose Fitting decomposition is nontrivial"""
    n, p = M.dim, M.p
    powers = mat_power(phis, n, p)
    ranks = batch_rank(powers, p)
    hits = np.nonzero((ranks > 0) & (ranks < n))[0]
    if hits.size == 0:
        return None
    psi = powers[hits[0]]
    return Subspace.span(psi.T, n, p), kernel(psi, p)


def _split(M: ModuleRep, rng, samples: int, exhaustive_dim: int) -> Tuple[List[ModuleRep], bool]:
    if M.dim == 0:
        return [], True
    if _cheaply_indecomposable(M):
        return [M], True
    ends = M.endomorphisms.basis
    h, p = ends.shape[0], M.p
    trials = [ends]
    if samples:
        coeffs = rng.integers(0, p, size=(samples, h), dtype=np.int64)
        trials.append(np.tensordot(coeffs, ends, axes=1) % p)
    found = None
    for batch in trials:
        found = _fitting_split(M, batch)
        if found:
            break
    exact = False
    if not found and h <= exhaustive_dim and h * np.log2(p) <= 20:
        exact = True
        for block in all_vectors(h, p):
            found = _fitting_split(M, np.tensordot(block, ends, axes=1) % p)
            if found:
                break
    if not found:
        if not exact:
            logger.warning(f"Decomposition of {M!r} uncertain: no splitting endomorphism sampled")
        return [M], exact
    img, ker = found
    left, c1 = _split(submodule(M, img), rng, samples, exhaustive_dim)
    right, c2 = _split(submodule(M, ker), rng, samples, exhaustive_dim)
    return left + right, c1 and c2


def group_by_isomorphism(
    modules: Sequence[ModuleRep], seed: int = 0
) -> Tuple[List[Tuple[ModuleRep, int]], bool]:
    groups: List[List] = []
    certain = True
    for m in modules:
        for g in groups:
            outcome = compare_modules(g[0], m, seed=seed)
            if outcome is Iso.ISO:
                g[1] += 1
                break
            if outcome is Iso.UNKNOWN:
                certain = False
        else:
            groups.append([m, 1])
    return [(g[0], g[1]) for g in groups], certain


def decompose(
    M: ModuleRep,
    seed: int = 0,
    samples: Optional[int] = None,
    exhaustive_dim: Optional[int] = None,
) -> Decomposition:
    """
    Split M into indecomposables via Fitting's lemma

    Sampled endomorphisms are raised to the power dim M; any with 0 < rank <
    dim M splits M as image ⊕ kernel. When End(M) is small every element is
    tried, which certifies indecomposability of what remains.
    """
    samples = DECOMPOSE_SAMPLES if samples is None else samples
    exhaustive_dim = DECOMPOSE_EXHAUSTIVE_DIM if exhaustive_dim is None else exhaustive_dim
    key = ("decompose", M.key, seed, samples, exhaustive_dim)
    cache = M.parent.cache
    if key in cache:
        return cache[key]
    rng = np.random.default_rng(seed)
    pieces, certain = _split(M, rng, samples, exhaustive_dim)
    named = [piece.with_name(f"{M.name}[{i}]" if M.name else "") for i, piece in enumerate(pieces)]
    groups, grouped = group_by_isomorphism(named, seed=seed)
    result = Decomposition(groups, certain and grouped)
    cache[key] = result
    return result


def count_summands(M: ModuleRep, seed: int = 0) -> int:
    return decompose(M, seed=seed).iso_class_count


def make_basic(M: ModuleRep, seed: int = 0) -> ModuleRep:
    dec = decompose(M, seed=seed)
    if not dec.summands:
        return zero_module(M.parent, M.side)
    return direct_sum(*dec.indecomposables(), name=f"basic({M.name})")


# --- endomorphism rings of indecomposables -------------------------------


def local_endomorphism_split(M: ModuleRep) -> Mat:
    """
    Basis of End(M) as [identity, radical basis...] for indecomposable M

    Each basis endomorphism φ is shifted to φ - λ·id with the unique λ that
    makes it nilpotent; those shifts span the radical of End(M).

    Raises:
        UnsupportedAlgebraError: If End(M)/rad is bigger than F_p
    """
    ends = M.endomorphisms.basis
    n, p = M.dim, M.p
    eye = np.eye(n, dtype=np.int64)
    shifted = []
    for phi in ends:
        for lam in range(p):
            candidate = (phi - lam * eye) % p
            if not mat_power(candidate, n, p).any():
                shifted.append(candidate)
                break
        else:
            raise UnsupportedAlgebraError(
                f"End({M.name or 'M'}) has a residue field larger than F_{p}"
            )
    flat = Subspace.span(stack_rows([s.reshape(-1) for s in shifted], n * n), n * n, p)
    if flat.dim != ends.shape[0] - 1:
        raise UnsupportedAlgebraError(f"End({M.name or 'M'}) is not local")
    return np.concatenate([eye[None], flat.basis.reshape(-1, n, n)], axis=0)


def endomorphism_radical(M: ModuleRep) -> Mat:
    """Basis of rad End(M) for indecomposable M"""
    return local_endomorphism_split(M)[1:]
