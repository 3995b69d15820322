import pytest

from src.data.corpus import CorpusFamily, CorpusSpec, standard_corpus
from src.data.enumerate import (
    compatibility,
    dimension_vectors,
    enumerate_modules,
    enumerate_support_tau_tilting,
    enumerate_tau_tilting,
    estimate_cost,
)
from src.errors import FeasibilityError, FormatError, PresentationError
from src.modrep import Iso, compare_modules, regular_module, standard_modules


def build(entry: str, p: int = 2):
    return CorpusSpec.parse(entry, p=p).build()


# --- corpus entries ----------------------------------------------------------


def test_parse_aliases_and_families():
    spec = CorpusSpec.parse("N32")
    assert spec.family is CorpusFamily.NAKAYAMA_CYCLIC
    assert (spec.n, spec.radical_power) == (3, 2)
    assert spec.label == "NakayamaCyclic(3,2)"
    assert CorpusSpec.parse("NakayamaCyclic(3, 2)") == spec
    assert CorpusSpec.parse("LOC2").label == "TruncatedLocal(2)"
    assert CorpusSpec.parse("LinearA(4)", p=3).p == 3
    assert CorpusSpec.parse("A3Z").label == "ZeroRelationA3"


def test_unknown_entries_are_format_errors():
    with pytest.raises(FormatError, match="Unknown corpus family"):
        CorpusSpec.parse("Dynkin(4)")
    with pytest.raises(FormatError):
        CorpusSpec.parse("LinearA(")


def test_user_files(corpus_dir, tmp_path):
    spec = CorpusSpec.parse(str(corpus_dir / "A3Z.alg"))
    assert spec.family is CorpusFamily.USER_FILE
    assert spec.complete_bound is None
    assert spec.build().dim == 5
    with pytest.raises(FormatError, match="File not found"):
        CorpusSpec.parse(str(tmp_path / "missing.alg")).build()


def test_truncated_local_needs_a_relation():
    with pytest.raises(PresentationError):
        CorpusSpec.parse("TruncatedLocal(1)").build()


def test_family_dimensions():
    assert build("LinearA(4)").dim == 10
    assert build("NakayamaCyclic(2,3)").dim == 6
    assert build("TruncatedLocal(3)").dim == 3
    assert build("K2").dim == 4
    assert build("A2", p=3).p == 3


def test_builds_are_cached():
    assert build("A2") is build("A2")


def test_enumeration_caps():
    assert CorpusSpec.parse("A3Z").enumeration_cap(4) == 2
    assert CorpusSpec.parse("K2").enumeration_cap(4) == 4
    assert CorpusSpec.parse("A3Z", max_dim=3).enumeration_cap(4) == 3
    assert CorpusSpec.parse("LinearA(3)").pool_is_complete(3)
    assert not CorpusSpec.parse("LinearA(3)").pool_is_complete(2)
    assert not CorpusSpec.parse("K2").pool_is_complete(10)


def test_structural_classes():
    assert CorpusSpec.parse("LOC2").classes == ["local", "finite_type", "self_injective"]
    assert CorpusSpec.parse("K2").classes == ["hereditary"]
    assert "self_injective" in CorpusSpec.parse("N32").classes


def test_standard_corpus():
    labels = [spec.label for spec in standard_corpus()]
    assert labels[:2] == ["LinearA(2)", "ZeroRelationA3"]
    assert len(labels) == 6
    assert len(standard_corpus(include_rep_infinite=True)) == 7


# --- enumeration oracle ----------------------------------------------------


def test_dimension_vectors():
    vectors = dimension_vectors(2, 2)
    assert vectors == [(0, 1), (1, 0), (0, 2), (1, 1), (2, 0)]


@pytest.mark.parametrize(
    "entry, max_dim, expected",
    [("A2", 2, 3), ("A3Z", 2, 5), ("LOC2", 2, 2), ("N32", 2, 6), ("LinearA(3)", 3, 6), ("K2", 2, 5)],
)
def test_indecomposable_counts(entry, max_dim, expected):
    pool = enumerate_modules(build(entry), max_dim)
    assert len(pool) == expected
    assert [M.name for M in pool] == [f"M{k}" for k in range(expected)]


def test_oracle_finds_standard_modules(a3z):
    pool = enumerate_modules(a3z, 2)
    std = standard_modules(a3z)
    for M in std.simples + std.projectives + std.injectives:
        assert any(compare_modules(M, N) is Iso.ISO for N in pool)


def test_feasibility_guard():
    K2 = build("K2")
    estimate = estimate_cost(K2, 8)
    assert estimate["log2_candidates"] > 22
    with pytest.raises(FeasibilityError) as info:
        enumerate_modules(K2, 8)
    assert info.value.estimate["max_dim"] == 8
    with pytest.raises(FeasibilityError):
        enumerate_modules(build("A2"), 2, limit_log2=0)


def test_compatibility_diagonal_marks_tau_rigid(loc2):
    pool = enumerate_modules(loc2, 2)
    ok = compatibility(pool)
    # M0 is the simple (not τ-rigid), M1 the regular module
    assert not ok[0, 0]
    assert ok[1, 1]


@pytest.mark.parametrize("n, tau_tilting, support", [(1, 1, 2), (2, 2, 5), (3, 5, 14)])
def test_tau_tilting_counts_for_linear_quivers(n, tau_tilting, support):
    A = build(f"LinearA({n})")
    pool = enumerate_modules(A, n)
    assert len(enumerate_tau_tilting(A, pool)) == tau_tilting
    assert len(enumerate_support_tau_tilting(A, pool)) == support


def test_support_tau_tilting_includes_zero(a2):
    found = enumerate_support_tau_tilting(a2, enumerate_modules(a2, 2))
    assert found[0].dim == 0
    assert found[0].name == "0"


def test_local_algebra_has_only_the_regular_tau_tilting_module(loc2):
    found = enumerate_tau_tilting(loc2, enumerate_modules(loc2, 2))
    assert len(found) == 1
    assert compare_modules(found[0], regular_module(loc2)) is Iso.ISO
