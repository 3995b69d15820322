"""
.alg and .mod file formats

.alg (line oriented, '#' comments):
    name A3Z
    field p=2
    vertices 1 2 3
    arrow a 1 2
    arrow b 2 3
    relation 1 b*a
    nilpotency 2

.mod:
    module S1 over A3Z
    dim 1=1 2=0 3=0
    matrix a = []          rows = target dimension, ';' between rows
    matrix b = []

Algebras without a quiver (endomorphism algebras) use `dim <n>` and one
`action <basis-label> = [...]` line per basis element instead.
"""

import logging
import re
from pathlib import Path
from typing import Dict, List, Optional, Tuple

import numpy as np

from ..algebra import Algebra, Arrow, QuiverPresentation, Relation, build_algebra
from ..errors import FormatError, PreconditionError, PresentationError
from ..modrep import ModuleRep, module_from_representation

logger = logging.getLogger(__name__)

_MATRIX_LINE = re.compile(r"^(matrix|action)\s+(\S+)\s*=\s*\[(.*)\]\s*$")


def _lines(text: str):
    """Yield (line number, stripped content) for non-blank, non-comment lines"""
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line


def _int(token: str, path: Optional[str], line: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise FormatError(f"Expected an integer, got '{token}'", path=path, line=line) from None


def parse_matrix(body: str, path: Optional[str] = None, line: int = 0) -> np.ndarray:
    """'1 0 ; 0 1' -> 2x2 array; '' -> 0x0; trailing ';' allowed"""
    rows = [r.split() for r in body.split(";")]
    while rows and not rows[-1]:
        rows.pop()
    if not rows:
        return np.zeros((0, 0), dtype=np.int64)
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise FormatError("Ragged matrix rows", path=path, line=line)
    return np.array([[_int(t, path, line) for t in r] for r in rows], dtype=np.int64).reshape(len(rows), width)


def format_matrix(m: np.ndarray) -> str:
    if m.size == 0:
        return "[]"
    return "[" + " ; ".join(" ".join(str(int(x)) for x in row) for row in m) + "]"


# --- algebras ---------------------------------------------------------------


def parse_algebra(text: str, path: Optional[str] = None, name: Optional[str] = None) -> QuiverPresentation:
    """
    Parse .alg text into a QuiverPresentation

    Raises:
        FormatError: On unknown keywords, bad integers or missing sections
    """
    p = None
    vertices: Tuple[str, ...] = ()
    arrows: List[Arrow] = []
    raw_relations: List[Tuple[int, str]] = []
    bound = 2
    for number, line in _lines(text):
        keyword, _, rest = line.partition(" ")
        rest = rest.strip()
        if keyword == "name":
            name = rest
        elif keyword == "field":
            match = re.fullmatch(r"p\s*=\s*(\d+)", rest)
            if not match:
                raise FormatError(f"Expected 'field p=<prime>', got '{line}'", path=path, line=number)
            p = int(match.group(1))
        elif keyword == "vertices":
            vertices = tuple(rest.split())
        elif keyword == "arrow":
            parts = rest.split()
            if len(parts) != 3:
                raise FormatError("Expected 'arrow <name> <source> <target>'", path=path, line=number)
            arrows.append(Arrow(*parts))
        elif keyword == "relation":
            raw_relations.append((number, rest))
        elif keyword == "nilpotency":
            bound = _int(rest, path, number)
        else:
            raise FormatError(f"Unknown keyword '{keyword}'", path=path, line=number)
    if p is None:
        raise FormatError("Missing 'field p=<prime>' line", path=path)
    if not vertices:
        raise FormatError("Missing 'vertices' line", path=path)
    shell = QuiverPresentation(name or "A", p, vertices, tuple(arrows), (), bound)
    relations = []
    for number, body in raw_relations:
        terms = []
        for chunk in body.split("+"):
            parts = chunk.split()
            if len(parts) != 2:
                raise FormatError(f"Expected '<coeff> <path>' in relation, got '{chunk.strip()}'", path=path, line=number)
            try:
                terms.append((_int(parts[0], path, number) % p, shell.parse_path(parts[1])))
            except PresentationError as e:
                raise FormatError(str(e), path=path, line=number) from e
        relations.append(Relation(tuple(terms)))
    return QuiverPresentation(shell.name, p, vertices, tuple(arrows), tuple(relations), bound)


def dump_algebra(q: QuiverPresentation) -> str:
    lines = [f"name {q.name}", f"field p={q.p}", "vertices " + " ".join(q.vertices)]
    lines += [f"arrow {a.name} {a.source} {a.target}" for a in q.arrows]
    for rel in q.relations:
        lines.append("relation " + " + ".join(f"{c} {path.label}" for c, path in rel.terms))
    lines.append(f"nilpotency {q.nilpotency_bound}")
    return "\n".join(lines) + "\n"


def load_algebra(path) -> Algebra:
    """Read and build an .alg file (name defaults to the file stem)"""
    path = Path(path)
    if not path.exists():
        raise FormatError("File not found", path=str(path))
    q = parse_algebra(path.read_text(encoding="utf-8"), path=str(path), name=path.stem)
    logger.info(f"Loaded algebra {q.name} from {path}")
    return build_algebra(q)


# --- modules ----------------------------------------------------------------


def parse_module(text: str, A: Algebra, path: Optional[str] = None) -> ModuleRep:
    """
    Parse .mod text into a left module over A

    Raises:
        FormatError: On syntax errors (with line numbers)
        PresentationError: If the matrices violate the relations
        DimensionError: If a matrix has the wrong shape
    """
    name = ""
    dims: Dict[str, int] = {}
    total: Optional[int] = None
    maps: Dict[str, np.ndarray] = {}
    actions: Dict[str, np.ndarray] = {}
    for number, line in _lines(text):
        keyword = line.split()[0]
        if keyword == "module":
            match = re.fullmatch(r"module\s+(\S+)(?:\s+over\s+(\S+))?", line)
            if not match:
                raise FormatError("Expected 'module <name> over <algebra>'", path=path, line=number)
            name = match.group(1)
            if match.group(2) and match.group(2) != A.name:
                logger.warning(f"{path or '<input>'}:{number}: module declared over {match.group(2)}, using {A.name}")
        elif keyword == "dim":
            for token in line.split()[1:]:
                if "=" in token:
                    vertex, _, value = token.partition("=")
                    dims[vertex] = _int(value, path, number)
                else:
                    total = _int(token, path, number)
        elif keyword in ("matrix", "action"):
            match = _MATRIX_LINE.match(line)
            if not match:
                raise FormatError(f"Expected '{keyword} <label> = [...]'", path=path, line=number)
            target = maps if keyword == "matrix" else actions
            if match.group(2) in target:
                raise FormatError(f"Duplicate entry for '{match.group(2)}'", path=path, line=number)
            target[match.group(2)] = parse_matrix(match.group(3), path, number)
        else:
            raise FormatError(f"Unknown keyword '{keyword}'", path=path, line=number)

    if actions:
        return _module_from_actions(A, actions, total, name, path)
    if A.quiver is None:
        raise FormatError(f"{A.name} has no quiver; use 'action' lines", path=path)
    return module_from_representation(A, dims, maps, name=name)


def _module_from_actions(
    A: Algebra, actions: Dict[str, np.ndarray], total: Optional[int], name: str, path: Optional[str]
) -> ModuleRep:
    missing = [label for label in A.basis_labels if label not in actions]
    if missing:
        raise FormatError(f"Missing action lines for {missing}", path=path)
    unknown = [label for label in actions if label not in A.basis_labels]
    if unknown:
        raise FormatError(f"Unknown basis labels {unknown}", path=path)
    n = total if total is not None else actions[A.basis_labels[0]].shape[0]
    act = np.zeros((A.dim, n, n), dtype=np.int64)
    for k, label in enumerate(A.basis_labels):
        m = actions[label]
        if m.size == 0 and n == 0:
            continue
        if m.shape != (n, n):
            raise FormatError(f"Action of '{label}' has shape {m.shape}, expected {(n, n)}", path=path)
        act[k] = m
    return ModuleRep(A, act, "left", name)


def dump_module(M: ModuleRep) -> str:
    """.mod text for a left module (graded arrow blocks when A has a quiver)"""
    if M.side != "left":
        raise PreconditionError("Only left modules have a .mod form")
    A = M.parent
    lines = [f"module {M.name or 'M'} over {A.name}"]
    if A.quiver is None:
        lines.append(f"dim {M.dim}")
        for k, label in enumerate(A.basis_labels):
            lines.append(f"action {label} = {format_matrix(M.action[k])}")
        return "\n".join(lines) + "\n"
    g = M.grading
    lines.append("dim " + " ".join(f"{v}={d}" for v, d in zip(A.vertices, g.dims)))
    position = {v: i for i, v in enumerate(A.vertices)}
    for arrow in A.quiver.arrows:
        s, t = position[arrow.source], position[arrow.target]
        full = M.graded_action(A.element(arrow.name)) if arrow.name in A.basis_labels else None
        if full is None:
            block = np.zeros((g.dims[t], g.dims[s]), dtype=np.int64)
        else:
            block = full[g.offsets[t]:g.offsets[t + 1], g.offsets[s]:g.offsets[s + 1]]
        lines.append(f"matrix {arrow.name} = {format_matrix(block)}")
    return "\n".join(lines) + "\n"


def load_module(path, A: Algebra) -> ModuleRep:
    path = Path(path)
    if not path.exists():
        raise FormatError("File not found", path=str(path))
    return parse_module(path.read_text(encoding="utf-8"), A, path=str(path))
