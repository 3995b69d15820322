"""
Corpus Algebras

Parametrized families of bound quiver algebras used by the verification
suites, plus user-supplied .alg files.

Families:
    LinearA(n)            1 -> 2 -> ... -> n, no relations (hereditary)
    NakayamaCyclic(n, r)  cyclic quiver on n vertices, all paths of length r zero
    TruncatedLocal(n)     one loop x with x^n = 0 (local)
    ZeroRelationA3        1 -a-> 2 -b-> 3 with b*a = 0
    Kronecker             two arrows 1 -> 2 (representation-infinite sample)
    UserFile(path)        any .alg file
"""

import logging
import re
import string
from enum import Enum
from functools import lru_cache
from pathlib import Path as FilePath
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from ..algebra import Algebra, Arrow, Path, QuiverPresentation, Relation, build_algebra
from ..errors import FormatError, PresentationError
from .formats import parse_algebra

logger = logging.getLogger(__name__)


class CorpusFamily(str, Enum):
    LINEAR_A = "LinearA"
    NAKAYAMA_CYCLIC = "NakayamaCyclic"
    TRUNCATED_LOCAL = "TruncatedLocal"
    ZERO_RELATION_A3 = "ZeroRelationA3"
    KRONECKER = "Kronecker"
    USER_FILE = "UserFile"


ALIASES = {
    "A2": ("LinearA", (2,)),
    "A3Z": ("ZeroRelationA3", ()),
    "LOC2": ("TruncatedLocal", (2,)),
    "N32": ("NakayamaCyclic", (3, 2)),
    "K2": ("Kronecker", ()),
}

_CALL = re.compile(r"^\s*(\w+)\s*(?:\(\s*([\d\s,]*)\))?\s*$")


class CorpusSpec(BaseModel):
    """One corpus entry: a family with its parameters, a prime and an enumeration cap"""

    model_config = ConfigDict(frozen=True)

    family: CorpusFamily
    n: int = Field(1, ge=1)
    radical_power: int = Field(2, ge=2)
    p: int = 2
    max_dim: Optional[int] = None
    path: Optional[str] = None

    @classmethod
    def parse(cls, text: str, p: int = 2, max_dim: Optional[int] = None) -> "CorpusSpec":
        """
        Parse 'LinearA(3)', 'NakayamaCyclic(3,2)', an alias (A2, A3Z, LOC2, N32, K2)
        or a path to an .alg file

        Raises:
            FormatError: If the text names no known family
        """
        text = text.strip()
        if text.endswith(".alg"):
            return cls(family=CorpusFamily.USER_FILE, path=text, p=p, max_dim=max_dim)
        if text in ALIASES:
            family, args = ALIASES[text]
        else:
            match = _CALL.match(text)
            if not match:
                raise FormatError(f"Cannot parse corpus entry '{text}'")
            family = match.group(1)
            args = tuple(int(a) for a in (match.group(2) or "").replace(",", " ").split())
        try:
            fam = CorpusFamily(family)
        except ValueError:
            raise FormatError(f"Unknown corpus family '{family}'") from None
        fields = {"family": fam, "p": p, "max_dim": max_dim}
        if args:
            fields["n"] = args[0]
        if len(args) > 1:
            fields["radical_power"] = args[1]
        return cls(**fields)

    @property
    def label(self) -> str:
        if self.family is CorpusFamily.LINEAR_A:
            return f"LinearA({self.n})"
        if self.family is CorpusFamily.NAKAYAMA_CYCLIC:
            return f"NakayamaCyclic({self.n},{self.radical_power})"
        if self.family is CorpusFamily.TRUNCATED_LOCAL:
            return f"TruncatedLocal({self.n})"
        if self.family is CorpusFamily.USER_FILE:
            return f"UserFile({self.path})"
        return self.family.value

    @property
    def complete_bound(self) -> Optional[int]:
        """
        Dimension bound for indecomposables of finite-type families

        Enumerating up to this bound yields every indecomposable; None for
        families without one (Kronecker, user files).
        """
        if self.family is CorpusFamily.LINEAR_A:
            return self.n
        if self.family is CorpusFamily.NAKAYAMA_CYCLIC:
            return self.radical_power
        if self.family is CorpusFamily.TRUNCATED_LOCAL:
            return self.n
        if self.family is CorpusFamily.ZERO_RELATION_A3:
            return 2
        return None

    def enumeration_cap(self, default: int) -> int:
        """Explicit max_dim, else the completeness bound, else the default"""
        if self.max_dim is not None:
            return self.max_dim
        bound = self.complete_bound
        return bound if bound is not None else default

    def pool_is_complete(self, cap: int) -> bool:
        bound = self.complete_bound
        return bound is not None and cap >= bound

    @property
    def classes(self) -> List[str]:
        """Which of the structural classes (local, finite type, Gorenstein) the family sits in"""
        tags = []
        if self.family is CorpusFamily.TRUNCATED_LOCAL:
            tags.append("local")
        if self.complete_bound is not None:
            tags.append("finite_type")
        if self.family in (CorpusFamily.NAKAYAMA_CYCLIC, CorpusFamily.TRUNCATED_LOCAL):
            tags.append("self_injective")
        if self.family in (CorpusFamily.LINEAR_A, CorpusFamily.KRONECKER):
            tags.append("hereditary")
        return tags

    def presentation(self) -> QuiverPresentation:
        if self.family is CorpusFamily.USER_FILE:
            file = FilePath(self.path or "")
            if not file.exists():
                raise FormatError("File not found", path=str(file))
            return parse_algebra(file.read_text(encoding="utf-8"), path=str(file), name=file.stem)
        builder = _BUILDERS[self.family]
        return builder(self)

    def build(self) -> Algebra:
        return _build_cached(self)


@lru_cache(maxsize=None)
def _build_cached(spec: CorpusSpec) -> Algebra:
    q = spec.presentation()
    logger.debug(f"Building corpus algebra {spec.label} over F_{q.p}")
    return build_algebra(q)


def _arrow_names(count: int) -> List[str]:
    # avoid 'e', which is reserved for trivial paths
    letters = [c for c in string.ascii_lowercase if c != "e"]
    if count <= len(letters):
        return letters[:count]
    return [f"a{i}" for i in range(1, count + 1)]


def _zero_paths(q: QuiverPresentation, length: int) -> Tuple[Relation, ...]:
    return tuple(Relation(((1, path),)) for path in q.paths_up_to(length) if path.length == length)


def linear_a(spec: CorpusSpec) -> QuiverPresentation:
    n = spec.n
    vertices = tuple(str(i) for i in range(1, n + 1))
    names = _arrow_names(n - 1)
    arrows = tuple(Arrow(names[i], vertices[i], vertices[i + 1]) for i in range(n - 1))
    return QuiverPresentation(f"A{n}", spec.p, vertices, arrows, (), max(n, 2))


def nakayama_cyclic(spec: CorpusSpec) -> QuiverPresentation:
    n, r = spec.n, spec.radical_power
    vertices = tuple(str(i) for i in range(1, n + 1))
    arrows = tuple(Arrow(f"a{i + 1}", vertices[i], vertices[(i + 1) % n]) for i in range(n))
    shell = QuiverPresentation(f"N{n}{r}", spec.p, vertices, arrows, (), r)
    return QuiverPresentation(shell.name, spec.p, vertices, arrows, _zero_paths(shell, r), r)


def truncated_local(spec: CorpusSpec) -> QuiverPresentation:
    n = spec.n
    if n < 2:
        raise PresentationError("TruncatedLocal(n) needs n >= 2")
    arrows = (Arrow("x", "1", "1"),)
    relation = Relation(((1, Path("1", "1", ("x",) * n)),))
    return QuiverPresentation(f"LOC{n}", spec.p, ("1",), arrows, (relation,), n)


def zero_relation_a3(spec: CorpusSpec) -> QuiverPresentation:
    arrows = (Arrow("a", "1", "2"), Arrow("b", "2", "3"))
    relation = Relation(((1, Path("1", "3", ("a", "b"))),))
    return QuiverPresentation("A3Z", spec.p, ("1", "2", "3"), arrows, (relation,), 2)


def kronecker(spec: CorpusSpec) -> QuiverPresentation:
    arrows = (Arrow("a", "1", "2"), Arrow("b", "1", "2"))
    return QuiverPresentation("K2", spec.p, ("1", "2"), arrows, (), 2)


_BUILDERS = {
    CorpusFamily.LINEAR_A: linear_a,
    CorpusFamily.NAKAYAMA_CYCLIC: nakayama_cyclic,
    CorpusFamily.TRUNCATED_LOCAL: truncated_local,
    CorpusFamily.ZERO_RELATION_A3: zero_relation_a3,
    CorpusFamily.KRONECKER: kronecker,
}


def standard_corpus(p: int = 2, include_rep_infinite: bool = False) -> List[CorpusSpec]:
    """The default sweep: A2, A3Z, LOC2, TruncatedLocal(3), N32, LinearA(3)"""
    entries = ["A2", "A3Z", "LOC2", "TruncatedLocal(3)", "N32", "LinearA(3)"]
    if include_rep_infinite:
        entries.append("K2")
    return [CorpusSpec.parse(e, p=p) for e in entries]
