"""
Finite-dimensional algebras from bound quivers

Convention: paths compose right to left. The label "b*a" means traverse a,
then b, and equals the product b·a in the algebra. An arrow a: s -> t acts
as a map from the vertex-s component to the vertex-t component, so the left
projective A e_v is spanned by the paths starting at v.
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Any, Dict, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from .errors import DimensionError, PreconditionError, PresentationError
from .exactla import FieldSpec, Mat, Subspace, mul, stack_rows

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Path:
    """A path in a quiver; arrows listed in traversal order"""

    source: str
    target: str
    arrows: Tuple[str, ...] = ()

    @property
    def length(self) -> int:
        return len(self.arrows)

    @property
    def label(self) -> str:
        if not self.arrows:
            return f"e{self.source}"
        return "*".join(reversed(self.arrows))

    def then(self, other: "Path") -> Optional["Path"]:
        """This path followed by other (the product other·self), or None"""
        if self.target != other.source:
            return None
        return Path(self.source, other.target, self.arrows + other.arrows)


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str


@dataclass(frozen=True)
class Relation:
    """A linear combination of parallel paths, as (coefficient, Path) terms"""

    terms: Tuple[Tuple[int, Path], ...]


@dataclass(frozen=True)
class QuiverPresentation:
    """Vertices, arrows, relations and a nilpotency bound L for a bound quiver algebra"""

    name: str
    p: int
    vertices: Tuple[str, ...]
    arrows: Tuple[Arrow, ...]
    relations: Tuple[Relation, ...] = ()
    nilpotency_bound: int = 2

    def arrow(self, name: str) -> Arrow:
        for a in self.arrows:
            if a.name == name:
                return a
        raise PresentationError(f"Unknown arrow '{name}' in {self.name}")

    def parse_path(self, label: str) -> Path:
        """Parse 'c*b*a' (or 'e<v>') into a Path, checking composability"""
        label = label.strip()
        if label.startswith("e") and label[1:] in self.vertices:
            return Path(label[1:], label[1:])
        names = [s.strip() for s in label.split("*")][::-1]
        path: Optional[Path] = None
        for name in names:
            arrow = self.arrow(name)
            step = Path(arrow.source, arrow.target, (arrow.name,))
            path = step if path is None else path.then(step)
            if path is None:
                raise PresentationError(f"Path '{label}' is not composable in {self.name}")
        if path is None:
            raise PresentationError(f"Empty path in {self.name}")
        return path

    def validate(self):
        FieldSpec(self.p)
        if len(set(self.vertices)) != len(self.vertices):
            raise PresentationError(f"Duplicate vertices in {self.name}")
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise PresentationError(f"Duplicate arrow names in {self.name}")
        for a in self.arrows:
            if a.source not in self.vertices or a.target not in self.vertices:
                raise PresentationError(
                    f"Arrow {a.name}: {a.source}->{a.target} uses an unknown vertex"
                )
        if self.nilpotency_bound < 1:
            raise PresentationError("Nilpotency bound must be >= 1")
        if self.nilpotency_bound == 1 and self.arrows:
            raise PresentationError("Nilpotency bound 1 would kill the arrows themselves")
        for rel in self.relations:
            if not rel.terms:
                raise PresentationError("Empty relation")
            ends = {(path.source, path.target) for _, path in rel.terms}
            if len(ends) != 1:
                raise PresentationError(
                    f"Relation terms are not parallel: {[path.label for _, path in rel.terms]}"
                )
            for _, path in rel.terms:
                if path.length < 2:
                    raise PresentationError(
                        f"Relation term '{path.label}' has length {path.length}; admissible "
                        "relations live in the arrow ideal squared"
                    )

    def paths_up_to(self, length: int) -> List[Path]:
        """All paths of length <= length, grouped by length"""
        level = [Path(v, v) for v in self.vertices]
        paths = list(level)
        for _ in range(length):
            nxt = []
            for path in level:
                for a in self.arrows:
                    if a.source == path.target:
                        nxt.append(Path(path.source, a.target, path.arrows + (a.name,)))
            paths.extend(nxt)
            level = nxt
        return paths


@dataclass(frozen=True, eq=False)
class Algebra:
    """
    Associative unital algebra over F_p given by structure constants

    mult[i, j, :] holds the coordinates of basis_i · basis_j. Idempotents are
    stored as coordinate vectors (one row per primitive idempotent), so
    quotients whose idempotents are not basis elements fit the same type.
    """

    name: str
    p: int
    basis_labels: Tuple[str, ...]
    mult: Mat
    idempotents: Mat
    vertices: Tuple[str, ...]
    generators: Mat
    radical: Optional[Subspace] = None
    paths: Optional[Tuple[Path, ...]] = None
    quiver: Optional[QuiverPresentation] = None
    cache: Dict[Any, Any] = field(default_factory=dict, repr=False, compare=False)

    @property
    def dim(self) -> int:
        return len(self.basis_labels)

    @property
    def simple_count(self) -> int:
        return self.idempotents.shape[0]

    @property
    def one(self) -> Mat:
        return self.idempotents.sum(axis=0) % self.p

    def unit(self, index: int) -> Mat:
        v = np.zeros(self.dim, dtype=np.int64)
        v[index] = 1
        return v

    def element(self, label: str) -> Mat:
        """Coordinate vector of a basis label"""
        if label not in self.basis_labels:
            raise DimensionError(f"'{label}' is not a basis element of {self.name}")
        return self.unit(self.basis_labels.index(label))

    def vertex_index(self, vertex: str) -> int:
        return self.vertices.index(vertex)

    def multiply(self, x, y) -> Mat:
        d = self.dim
        left = (np.asarray(x, dtype=np.int64) @ self.mult.reshape(d, d * d)) % self.p
        return (np.asarray(y, dtype=np.int64) @ left.reshape(d, d)) % self.p

    def left_mult(self, x) -> Mat:
        """Matrix of y -> x·y"""
        d = self.dim
        rows = (np.asarray(x, dtype=np.int64) @ self.mult.reshape(d, d * d)) % self.p
        return rows.reshape(d, d).T.copy()

    def right_mult(self, x) -> Mat:
        """Matrix of y -> y·x"""
        x = np.asarray(x, dtype=np.int64)
        cols = np.einsum("j,ijk->ik", x, self.mult) % self.p
        return cols.T.copy()

    def products(self, xs: Mat, ys: Mat) -> Mat:
        """All products x·y for rows x of xs and y of ys, as rows"""
        d = self.dim
        xs = np.asarray(xs, dtype=np.int64).reshape(-1, d)
        ys = np.asarray(ys, dtype=np.int64).reshape(-1, d)
        left = (xs @ self.mult.reshape(d, d * d)) % self.p
        out = np.einsum("mjk,nj->mnk", left.reshape(-1, d, d), ys) % self.p
        return out.reshape(-1, d)

    @cached_property
    def op(self) -> "Algebra":
        """Opposite algebra; A.op.op is A"""
        opposite = Algebra(
            name=f"{self.name}^op",
            p=self.p,
            basis_labels=self.basis_labels,
            mult=self.mult.transpose(1, 0, 2).copy(),
            idempotents=self.idempotents,
            vertices=self.vertices,
            generators=self.generators,
            radical=self.radical,
            paths=self.paths,
        )
        opposite.__dict__["op"] = self
        return opposite

    def validate(self):
        """Check associativity, the unit law and idempotent orthogonality"""
        p, c, d = self.p, self.mult, self.dim
        if c.shape != (d, d, d):
            raise PresentationError(f"Structure constants have shape {c.shape}, expected {(d, d, d)}")
        lhs = np.einsum("ijm,mkl->ijkl", c, c) % p
        rhs = np.einsum("jkm,iml->ijkl", c, c) % p
        bad = np.argwhere((lhs != rhs).any(axis=3))
        if bad.size:
            i, j, k = bad[0]
            raise PresentationError(
                f"{self.name} is not associative on "
                f"({self.basis_labels[i]}, {self.basis_labels[j]}, {self.basis_labels[k]})"
            )
        one = self.one
        eye = np.eye(d, dtype=np.int64)
        if not (np.array_equal(self.left_mult(one), eye) and np.array_equal(self.right_mult(one), eye)):
            raise PresentationError(f"Idempotents of {self.name} do not sum to the unit")
        for u, ev in enumerate(self.idempotents):
            for w, ew in enumerate(self.idempotents):
                expected = ev if u == w else np.zeros(d, dtype=np.int64)
                if not np.array_equal(self.multiply(ev, ew), expected):
                    raise PresentationError(
                        f"Idempotents {self.vertices[u]}, {self.vertices[w]} are not orthogonal"
                    )


def algebra_from_structure_constants(
    name: str,
    p: int,
    basis_labels: Sequence[str],
    mult: Mat,
    idempotents: Mat,
    vertices: Sequence[str],
    generators: Optional[Mat] = None,
    radical: Optional[Subspace] = None,
    validate: bool = True,
) -> Algebra:
    """Build an Algebra from raw data (quotients, endomorphism algebras)"""
    d = len(basis_labels)
    mult = np.asarray(mult, dtype=np.int64) % p
    idempotents = np.asarray(idempotents, dtype=np.int64).reshape(-1, d) % p
    if generators is None:
        generators = np.eye(d, dtype=np.int64)
    algebra = Algebra(
        name=name,
        p=p,
        basis_labels=tuple(basis_labels),
        mult=mult,
        idempotents=idempotents,
        vertices=tuple(vertices),
        generators=np.asarray(generators, dtype=np.int64).reshape(-1, d) % p,
        radical=radical,
    )
    if validate:
        algebra.validate()
    return algebra


def build_algebra(q: QuiverPresentation) -> Algebra:
    """
    Realize kQ / (relations) with the path basis

    Args:
        q: Quiver presentation; every path of length L must lie in the ideal

    Returns:
        Algebra whose basis is the residue classes of paths of length < L

    Raises:
        PresentationError: On non-admissible relations, bad endpoints or a wrong bound
    """
    q.validate()
    p, bound = q.p, q.nilpotency_bound
    all_paths = q.paths_up_to(bound)
    # longest first, so that reduction prefers short paths as representatives
    all_paths.sort(key=lambda path: -path.length)
    index = {path: i for i, path in enumerate(all_paths)}
    width = len(all_paths)

    rows = []
    for rel in q.relations:
        shortest = min(path.length for _, path in rel.terms)
        source, target = rel.terms[0][1].source, rel.terms[0][1].target
        pre = [w for w in all_paths if w.target == source and w.length + shortest <= bound]
        post = [u for u in all_paths if u.source == target and u.length + shortest <= bound]
        for w, u in product(pre, post):
            vec = np.zeros(width, dtype=np.int64)
            for coeff, path in rel.terms:
                full = w.then(path).then(u)
                if full.length <= bound:
                    vec[index[full]] += coeff
            if (vec % p).any():
                rows.append(vec % p)
    ideal = Subspace.span(stack_rows(rows, width), width, p)

    for path in all_paths:
        if path.length == bound and not ideal.contains(np.eye(width, dtype=np.int64)[index[path]]):
            raise PresentationError(
                f"Path {path.label} of length {bound} is not in the relation ideal of {q.name}; "
                "increase the nilpotency bound"
            )
    long_rows = [np.eye(width, dtype=np.int64)[index[path]] for path in all_paths if path.length == bound]
    ideal = Subspace.span(stack_rows(rows + long_rows, width), width, p)

    basis_cols = ideal.complement_indices
    basis_paths = tuple(all_paths[c] for c in basis_cols)
    d = len(basis_cols)
    position = {path: k for k, path in enumerate(basis_paths)}

    def coords(path: Optional[Path]) -> Mat:
        out = np.zeros(d, dtype=np.int64)
        if path is None or path.length > bound:
            return out
        vec = np.zeros(width, dtype=np.int64)
        vec[index[path]] = 1
        return ideal.reduce(vec)[basis_cols]

    mult = np.zeros((d, d, d), dtype=np.int64)
    for i, x in enumerate(basis_paths):
        for j, y in enumerate(basis_paths):
            mult[i, j] = coords(y.then(x))

    idempotents = np.zeros((len(q.vertices), d), dtype=np.int64)
    for v_idx, v in enumerate(q.vertices):
        idempotents[v_idx, position[Path(v, v)]] = 1
    generators = stack_rows([coords(Path(a.source, a.target, (a.name,))) for a in q.arrows], d)
    generators = generators[generators.any(axis=1)]
    radical = Subspace.span(
        stack_rows([np.eye(d, dtype=np.int64)[k] for k, path in enumerate(basis_paths) if path.length > 0], d),
        d,
        p,
    )
    algebra = Algebra(
        name=q.name,
        p=p,
        basis_labels=tuple(path.label for path in basis_paths),
        mult=mult,
        idempotents=idempotents,
        vertices=q.vertices,
        generators=generators,
        radical=radical,
        paths=basis_paths,
        quiver=q,
    )
    algebra.validate()
    logger.debug(f"Built {q.name}: dim {d}, basis {algebra.basis_labels}")
    return algebra


@dataclass(frozen=True, eq=False)
class Ideal:
    """Two-sided ideal, stored extensionally as a subspace of the algebra"""

    parent: Algebra
    space: Subspace

    def __post_init__(self):
        if self.space.ambient_dim != self.parent.dim:
            raise DimensionError(
                f"Ideal lives in F^{self.space.ambient_dim}, algebra has dim {self.parent.dim}"
            )
        if self.space.dim:
            basis = np.eye(self.parent.dim, dtype=np.int64)
            left = self.parent.products(basis, self.space.basis)
            right = self.parent.products(self.space.basis, basis)
            if not (self.space.contains(left) and self.space.contains(right)):
                raise PreconditionError("Subspace is not closed under two-sided multiplication")

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def basis(self) -> Mat:
        return self.space.basis

    def is_zero(self) -> bool:
        return self.dim == 0

    def is_whole(self) -> bool:
        return self.dim == self.parent.dim

    def contains(self, x) -> bool:
        return self.space.contains(x)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.parent is other.parent and self.space == other.space

    def __hash__(self) -> int:
        return hash((id(self.parent), self.space.key))

    def __repr__(self) -> str:
        return f"Ideal(dim={self.dim} in {self.parent.name})"


def zero_ideal(A: Algebra) -> Ideal:
    return Ideal(A, Subspace.zero(A.dim, A.p))


def whole_ideal(A: Algebra) -> Ideal:
    return Ideal(A, Subspace.full(A.dim, A.p))


def ideal_from_generators(A: Algebra, gens) -> Ideal:
    """
    Smallest two-sided ideal containing gens

    Raises:
        DimensionError: If a generator is not a coordinate vector of A
    """
    gens = np.asarray(gens, dtype=np.int64)
    if gens.size and gens.shape[-1] != A.dim:
        raise DimensionError(f"Generators have length {gens.shape[-1]}, algebra has dim {A.dim}")
    space = Subspace.span(gens.reshape(-1, A.dim), A.dim, A.p)
    basis = np.eye(A.dim, dtype=np.int64)
    while True:
        grown = Subspace.span(
            np.vstack([space.basis, A.products(basis, space.basis), A.products(space.basis, basis)]),
            A.dim,
            A.p,
        )
        if grown.dim == space.dim:
            return Ideal(A, space)
        space = grown


def ideal_product(I: Ideal, J: Ideal) -> Ideal:
    if I.parent is not J.parent:
        raise PreconditionError("Ideals live in different algebras")
    A = I.parent
    return Ideal(A, Subspace.span(A.products(I.basis, J.basis), A.dim, A.p))


def ideal_power(I: Ideal, k: int) -> Ideal:
    if k < 0:
        raise ValueError(f"Ideal power must be non-negative, got {k}")
    if k == 0:
        return whole_ideal(I.parent)
    result = I
    for _ in range(k - 1):
        result = ideal_product(result, I)
    return result


def stable_part(I: Ideal) -> Ideal:
    """The eventual value of I^k, i.e. the largest idempotent ideal inside I"""
    current = I
    while True:
        nxt = ideal_product(current, I)
        if nxt.dim == current.dim:
            return current
        current = nxt


def is_nilpotent(I: Ideal) -> bool:
    return stable_part(I).is_zero()


def is_idempotent(I: Ideal) -> bool:
    return ideal_product(I, I).dim == I.dim


def projective_space(A: Algebra, v: int) -> Subspace:
    """A e_v as a subspace of A"""
    return Subspace.span(A.right_mult(A.idempotents[v]).T, A.dim, A.p)


def stable_index(I: Ideal) -> int:
    """Number of vertices v with I · A e_v = A e_v"""
    A = I.parent
    count = 0
    for v in range(A.simple_count):
        proj = projective_space(A, v)
        if proj.dim == 0:
            continue
        covered = Subspace.span(A.products(I.basis, proj.basis), A.dim, A.p)
        if covered.dim == proj.dim:
            count += 1
    return count


def trace_ideal(P) -> Ideal:
    """
    Sum of images of all maps P -> A (left regular module)

    Raises:
        PreconditionError: If P is not projective
    """
    from .modrep import hom_space, is_projective, regular_module

    if P.side != "left":
        raise PreconditionError("trace_ideal expects a left module")
    if not is_projective(P):
        raise PreconditionError(f"trace_ideal: module {P.name or '?'} is not projective")
    A = P.parent
    homs = hom_space(P, regular_module(A))
    columns = [f.T for f in homs.basis]
    space = Subspace.span(stack_rows(columns, A.dim), A.dim, A.p)
    return ideal_from_generators(A, space.basis)


class QuotientAlgebra(NamedTuple):
    algebra: Algebra
    projection: Mat
    section: Tuple[int, ...]
    ideal: Ideal


def quotient_algebra(A: Algebra, I: Ideal) -> QuotientAlgebra:
    """
    A / I on the complement basis of I's canonical echelon form

    Returns:
        (algebra, projection matrix dim(A/I) x dim A, section indices into A's basis, I)
    """
    if I.parent is not A:
        raise PreconditionError("Ideal does not belong to this algebra")
    section = tuple(I.space.complement_indices)
    eye = np.eye(A.dim, dtype=np.int64)
    projection = I.space.reduce(eye)[:, list(section)].T.copy()
    dq = len(section)
    mult = np.zeros((dq, dq, dq), dtype=np.int64)
    for a, i in enumerate(section):
        for b, j in enumerate(section):
            mult[a, b] = mul(projection, A.mult[i, j], A.p)
    idem_images = mul(A.idempotents, projection.T, A.p)
    keep = [v for v in range(A.simple_count) if idem_images[v].any()]
    gens = mul(A.generators, projection.T, A.p) if A.generators.size else np.zeros((0, dq), dtype=np.int64)
    gens = gens[gens.any(axis=1)] if gens.size else gens.reshape(0, dq)
    radical = None
    if A.radical is not None:
        radical = Subspace.span(mul(A.radical.basis, projection.T, A.p), dq, A.p)
    quotient = Algebra(
        name=f"{A.name}/I{I.dim}",
        p=A.p,
        basis_labels=tuple(A.basis_labels[i] for i in section),
        mult=mult,
        idempotents=idem_images[keep],
        vertices=tuple(A.vertices[v] for v in keep),
        generators=gens,
        radical=radical,
        paths=tuple(A.paths[i] for i in section) if A.paths is not None else None,
    )
    quotient.validate()
    return QuotientAlgebra(quotient, projection, section, I)


def opposite_algebra(A: Algebra) -> Algebra:
    return A.op
