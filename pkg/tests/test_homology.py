import pytest

from src.errors import PreconditionError
from src.homology import (
    ext,
    injective_dimension_up_to,
    is_gorenstein_up_to,
    is_self_orthogonal,
    pd_up_to,
    projective_resolution,
    tensor_over_A,
    tor,
)
from src.modrep import dual, regular_module, right_projective, simple_module, standard_modules


def test_ext_between_simples_of_a2(std_a2):
    s1, s2 = std_a2.simples
    assert ext(s1, s2, 1) == 1
    assert ext(s2, s1, 1) == 0
    assert ext(s1, s1, 1) == 0
    assert ext(s1, s2, 0) == 0
    assert ext(s1, s2, 2) == 0


def test_ext2_over_zero_relation_algebra(std_a3z):
    s1, s2, s3 = std_a3z.simples
    assert ext(s1, s3, 2) == 1
    assert ext(s1, s2, 1) == 1
    assert ext(s1, s3, 1) == 0


def test_ext_rejects_bad_input(std_a2):
    s1 = std_a2.simples[0]
    with pytest.raises(ValueError):
        ext(s1, s1, -1)
    with pytest.raises(PreconditionError):
        ext(dual(s1), s1, 1)


def test_resolution_terms(std_a3z):
    res = projective_resolution(std_a3z.simples[0], 3)
    assert [res.syzygy(i).dim for i in range(4)] == [1, 1, 1, 0]
    assert res.term_vertices(0) == (0,)
    assert res.term_vertices(1) == (1,)
    assert res.term_vertices(2) == (2,)


def test_projective_dimension(std_a3z, loc2):
    s1, s2, s3 = std_a3z.simples
    assert str(pd_up_to(s1)) == "Finite(2)"
    assert str(pd_up_to(s2)) == "Finite(1)"
    assert str(pd_up_to(s3)) == "Finite(0)"
    assert str(pd_up_to(simple_module(loc2, 0), 5)) == "AtLeast(5)"


def test_injective_dimension(std_a2):
    s1, s2 = std_a2.simples
    assert injective_dimension_up_to(s1).value == 0
    assert injective_dimension_up_to(s2).value == 1


def test_gorenstein_bounds(a2, n32, a3z):
    assert is_gorenstein_up_to(n32) == 0
    assert is_gorenstein_up_to(a2) == 1
    assert is_gorenstein_up_to(a3z) == 2


def test_tensor_with_right_projectives(a2, std_a2):
    p1 = std_a2.projectives[0]
    assert tensor_over_A(right_projective(a2, 0), p1).dim == 1
    assert tensor_over_A(right_projective(a2, 1), p1).dim == 1
    assert tor(right_projective(a2, 1), std_a2.simples[0], 1) == 0


def test_tensor_argument_sides(std_a2):
    s1 = std_a2.simples[0]
    with pytest.raises(PreconditionError):
        tensor_over_A(s1, s1)


def test_tor_of_simple_modules(std_a3z):
    # Tor_1(S2 as right module, S1) sees the arrow a: 1 -> 2
    right_s2 = dual(std_a3z.simples[1])
    assert tor(right_s2, std_a3z.simples[0], 1) == 1
    assert tor(right_s2, std_a3z.simples[2], 1) == 0


def test_self_orthogonality_verdicts(a2, loc2, n32):
    assert str(is_self_orthogonal(regular_module(a2))) == "Holds(finite_pd)"
    fails = is_self_orthogonal(simple_module(loc2, 0))
    assert fails.fails and fails.degree == 1 and fails.dimension == 1
    # simples of the cyclic Nakayama algebra rotate under Ω
    assert str(is_self_orthogonal(simple_module(n32, 0))) == "Fails(3)"
    assert is_self_orthogonal(simple_module(n32, 0), horizon=2).unknown
    assert str(is_self_orthogonal(simple_module(n32, 0), horizon=2)) == "UnknownBeyondHorizon(2)"


def test_self_orthogonality_needs_positive_horizon(std_a2):
    with pytest.raises(ValueError):
        is_self_orthogonal(std_a2.simples[0], horizon=0)


def test_all_projectives_have_pd_zero(linear3):
    for P in standard_modules(linear3).projectives:
        assert pd_up_to(P).value == 0
