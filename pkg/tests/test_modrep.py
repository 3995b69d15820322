import numpy as np
import pytest

from src.data.corpus import CorpusSpec
from src.errors import DimensionError, PreconditionError, PresentationError
from src.modrep import (
    Iso,
    ModuleRep,
    compare_modules,
    count_summands,
    decompose,
    direct_sum,
    dual,
    endomorphism_radical,
    hom_dim,
    hom_space,
    is_injective,
    is_isomorphic,
    is_projective,
    local_endomorphism_split,
    make_basic,
    module_from_representation,
    power,
    projective_cover,
    radical_of_module,
    regular_module,
    set_search_limits,
    simple_module,
    socle,
    standard_modules,
    syzygy,
    tau,
    top,
    transpose,
    zero_module,
)


def test_standard_modules_over_a2(std_a2):
    (s1, s2), (p1, p2), (i1, i2) = std_a2
    assert [s.dimension_vector for s in (s1, s2)] == [(1, 0), (0, 1)]
    assert p1.dimension_vector == (1, 1)
    assert p2.dimension_vector == (0, 1)
    assert is_isomorphic(i1, s1)
    assert is_isomorphic(i2, p1)
    assert [m.name for m in (s1, p1, i2)] == ["S1", "P1", "I2"]


def test_injectives_over_zero_relation_algebra(std_a3z):
    simples, projectives, injectives = std_a3z
    expected = [simples[0], projectives[0], projectives[1]]
    for inj, ref in zip(injectives, expected):
        assert compare_modules(inj, ref) is Iso.ISO


def test_regular_module_is_sum_of_projectives(a3z, std_a3z):
    total = direct_sum(*std_a3z.projectives)
    assert is_isomorphic(regular_module(a3z), total)
    assert regular_module(a3z).name == "A"


def test_hom_dimensions(std_a2):
    (s1, s2), (p1, p2), _ = std_a2
    assert hom_dim(p1, s1) == 1
    assert hom_dim(s1, p1) == 0
    assert hom_dim(p2, p1) == 1
    assert hom_dim(p1, p1) == 1


def test_hom_space_basis_are_module_maps(std_a3z):
    P1 = std_a3z.projectives[0]
    M = direct_sum(P1, std_a3z.simples[0], std_a3z.simples[1])
    for f in hom_space(M, M).morphisms():
        assert f.is_homomorphism()


def test_hom_needs_same_algebra(std_a2, std_a3z):
    with pytest.raises(PreconditionError):
        hom_dim(std_a2.simples[0], std_a3z.simples[0])


def test_representation_shape_errors(a3z):
    with pytest.raises(DimensionError):
        module_from_representation(a3z, {"1": 1, "2": 1}, {"a": np.eye(2, dtype=int)})


def test_representation_relation_violation_names_basis_pair(a3z):
    with pytest.raises(PresentationError) as info:
        module_from_representation(a3z, {"1": 1, "2": 1, "3": 1}, {"a": [[1]], "b": [[1]]})
    assert info.value.basis_pair is not None
    assert set(info.value.basis_pair) == {"a", "b"}


def test_unknown_vertex_or_arrow(a3z):
    with pytest.raises(PresentationError):
        module_from_representation(a3z, {"9": 1}, {})
    with pytest.raises(PresentationError):
        module_from_representation(a3z, {"1": 1}, {"z": [[1]]})


def test_top_radical_socle(std_a3z):
    P1 = std_a3z.projectives[0]
    assert top(P1).dimension_vector == (1, 0, 0)
    assert radical_of_module(P1).dimension_vector == (0, 1, 0)
    assert socle(P1).dimension_vector == (0, 1, 0)


def test_projective_cover_and_syzygy(std_a2):
    (s1, s2), (p1, p2), _ = std_a2
    cover = projective_cover(s1)
    assert cover.vertices == (0,)
    assert cover.morphism.is_surjective()
    assert is_isomorphic(syzygy(s1), p2)
    assert syzygy(p1).dim == 0
    assert is_projective(p1) and not is_projective(s1)


def test_syzygy_of_simple_over_local_algebra(loc2):
    S = simple_module(loc2, 0)
    assert is_isomorphic(syzygy(S), S)


def test_auslander_reiten_translate(std_a2, std_a3z):
    (s1, s2), (p1, _), _ = std_a2
    assert is_isomorphic(tau(s1), s2)
    assert tau(p1).dim == 0
    assert transpose(p1).side == "right"
    assert is_isomorphic(tau(std_a3z.simples[0]), std_a3z.simples[1])
    assert is_isomorphic(tau(std_a3z.simples[1]), std_a3z.simples[2])


def test_dual_swaps_sides_and_back(std_a2):
    m = std_a2.projectives[0]
    d = dual(m)
    assert d.side == "right"
    assert dual(d).side == "left"
    assert np.array_equal(dual(d).action, m.action)


def test_injectivity_over_self_injective_algebra(n32):
    for P in standard_modules(n32).projectives:
        assert is_injective(P)
    assert not is_injective(simple_module(n32, 0))


def test_decompose_counts_classes_and_multiplicities(tstar, std_a2):
    dec = decompose(tstar)
    assert dec.certain
    assert dec.iso_class_count == 3
    assert dec.total_multiplicity == 3
    doubled = power(std_a2.projectives[0], 2)
    dec2 = decompose(doubled)
    assert dec2.iso_class_count == 1
    assert dec2.total_multiplicity == 2
    assert make_basic(doubled).dim == 2
    assert count_summands(doubled) == 1


def test_zero_module_grading(a2, a3z):
    assert zero_module(a2).dimension_vector == (0, 0)
    assert zero_module(a3z, side="right").dimension_vector == (0, 0, 0)
    assert dual(zero_module(a2)).dim == 0


def test_decompose_zero_module(a2):
    dec = decompose(zero_module(a2))
    assert dec.summands == []
    assert dec.module(a2).dim == 0


def test_isomorphism_is_invariant_under_base_change(std_a3z):
    P1 = std_a3z.projectives[0]
    g = np.array([[1, 1], [0, 1]])
    moved = np.matmul(np.matmul(g, P1.action), g) % 2  # g is its own inverse mod 2
    Q = ModuleRep(P1.parent, moved, "left", "Q")
    assert compare_modules(P1, Q) is Iso.ISO
    assert compare_modules(P1, std_a3z.projectives[1]) is Iso.NOT_ISO


def test_endomorphism_split_of_local_module(loc2):
    A = regular_module(loc2)
    split = local_endomorphism_split(A)
    assert split.shape == (2, 2, 2)
    assert np.array_equal(split[0], np.eye(2, dtype=int))
    assert endomorphism_radical(A).shape == (1, 2, 2)


def test_search_limits_can_force_unknown(std_a3z):
    P1 = std_a3z.projectives[0]
    M, N = power(P1, 2), direct_sum(P1, P1)
    try:
        set_search_limits(0, 0, 12, 64)
        assert compare_modules(M, N, exhaustive_log2=0, samples=0) is Iso.UNKNOWN
    finally:
        set_search_limits(16, 64, 12, 64)
    assert compare_modules(M, N) is Iso.ISO


def test_decompose_cache_respects_search_budget():
    k2 = CorpusSpec.parse("K2").build()
    # indecomposable with End = k[x]/x^2: only the exhaustive pass certifies it
    R = module_from_representation(
        k2, {"1": 2, "2": 2}, {"a": [[1, 0], [0, 1]], "b": [[0, 1], [0, 0]]}, name="R"
    )
    assert not decompose(R, samples=0, exhaustive_dim=0).certain
    full = decompose(R, samples=0, exhaustive_dim=4)
    assert full.certain
    assert full.iso_class_count == 1
